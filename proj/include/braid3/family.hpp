#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braid3/representation.hpp"

namespace braid3 {

/// Textual recipe for a representation:
///
///   spec  := name
///          | name '(' value (';' key '=' value (',' key '=' value)*)? ')'
///          | combinator '(' spec (',' spec)* ')'
///
/// Leaf names: xi, thm1_i, thm1_ii, burau, burau_diag, mu, mu_pascal, standard_s3.
/// Combinators: tensor, direct_sum, dual. Values use the scalar grammar
/// (`z`, `5/7`, `omega`, `-z/(z+1)`, decimals for floats).
struct FamilySpec {
    std::string family;
    std::optional<Scalar> param;
    std::vector<std::pair<std::string, Scalar>> named;
    std::vector<FamilySpec> children;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

namespace detail {

inline bool is_combinator(std::string_view f) { return f == "tensor" || f == "direct_sum" || f == "dual"; }

inline bool is_leaf(std::string_view f) {
    return f == "xi" || f == "thm1_i" || f == "thm1_ii" || f == "burau" || f == "burau_diag" || f == "mu" ||
           f == "mu_pascal" || f == "standard_s3";
}

class FamilyParser {
public:
    explicit FamilyParser(std::string_view text) : text_(text) {}

    FamilySpec parse() {
        FamilySpec s = spec();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError(pos_, "trailing input");
        return s;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(pos_, std::string("expected '") + c + "'");
    }

    std::string identifier() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (start == pos_) throw ParseError(pos_, "expected a name");
        return std::string(text_.substr(start, pos_ - start));
    }

    /// A scalar expression running up to ',' ';' or ')' at nesting depth 0.
    Scalar value() {
        skip_ws();
        std::size_t start = pos_;
        int depth = 0;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '(') ++depth;
            if (c == ')') {
                if (depth == 0) break;
                --depth;
            }
            if ((c == ',' || c == ';') && depth == 0) break;
            ++pos_;
        }
        if (start == pos_) throw ParseError(pos_, "expected a value");
        try {
            return parse_scalar(text_.substr(start, pos_ - start));
        } catch (const ParseError& e) {
            throw ParseError(start + e.position(), e.message());
        }
    }

    FamilySpec spec() {
        std::size_t at = (skip_ws(), pos_);
        FamilySpec s;
        s.family = identifier();
        if (is_combinator(s.family)) {
            expect('(');
            do s.children.push_back(spec());
            while (eat(','));
            expect(')');
            std::size_t want = s.family == "dual" ? 1 : 2;
            if (s.children.size() != want)
                throw ParseError(at, s.family + " takes " + std::to_string(want) + " argument(s)");
            return s;
        }
        if (!is_leaf(s.family)) throw ParseError(at, "unknown family '" + s.family + "'");
        if (s.family == "standard_s3") return s;
        expect('(');
        s.param = value();
        if (eat(';')) {
            do {
                std::string key = identifier();
                expect('=');
                s.named.emplace_back(std::move(key), value());
            } while (eat(','));
        }
        expect(')');
        return s;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline FamilySpec parse_family(std::string_view text) { return detail::FamilyParser(text).parse(); }

inline std::string to_string(const FamilySpec& s) {
    if (!s.children.empty()) {
        std::string out = s.family + "(";
        for (std::size_t i = 0; i < s.children.size(); ++i) out += (i ? "," : "") + to_string(s.children[i]);
        return out + ")";
    }
    if (!s.param) return s.family;
    std::string out = s.family + "(" + to_string(*s.param);
    for (std::size_t i = 0; i < s.named.size(); ++i)
        out += (i ? ", " : "; ") + s.named[i].first + "=" + to_string(s.named[i].second);
    return out + ")";
}

namespace detail {

inline const Scalar* find_named(const FamilySpec& s, std::string_view key) {
    for (const auto& [k, v] : s.named)
        if (k == key) return &v;
    return nullptr;
}

inline void allow_only(const FamilySpec& s, std::initializer_list<std::string_view> keys) {
    for (const auto& [k, v] : s.named) {
        bool ok = false;
        for (auto want : keys) ok = ok || k == want;
        if (!ok) throw DomainError("unknown parameter '" + k + "' for " + s.family);
    }
}

/// A secondary parameter written in terms of z follows z when z is bound to a constant.
inline Scalar bind_secondary(const Scalar& value, const Scalar& z) {
    if (value.field() == Field::ratfunc && !value.is_rational_constant() &&
        !(z.field() == Field::ratfunc && !z.is_rational_constant()))
        return evaluate(value.get<RatFunc>(), z);
    return value;
}

} // namespace detail

/// Builds the representation a spec describes. Constructor failures surface as
/// DomainError / ShapeError.
inline Representation build(const FamilySpec& s) {
    const auto& f = s.family;
    if (f == "tensor") return tensor(build(s.children.at(0)), build(s.children.at(1)));
    if (f == "direct_sum") return direct_sum(build(s.children.at(0)), build(s.children.at(1)));
    if (f == "dual") return dual(build(s.children.at(0)));
    if (f == "standard_s3") return standard_s3();
    const Scalar& z = s.param.value();
    if (f == "xi") {
        detail::allow_only(s, {"n"});
        int n = 3;
        if (auto* v = detail::find_named(s, "n")) {
            if (!v->is_rational_constant() || v->rational_value().get_den() != 1)
                throw DomainError("n must be an integer");
            n = static_cast<int>(v->rational_value().get_num().get_si());
        }
        if (n < 2) throw DomainError("braid index must be at least 2");
        return xi(z, n);
    }
    if (f == "thm1_i") {
        detail::allow_only(s, {"f"});
        auto* fv = detail::find_named(s, "f");
        if (!fv) throw DomainError("thm1_i needs f=<value>");
        return theorem1_i(z, detail::bind_secondary(*fv, z));
    }
    if (f == "thm1_ii") {
        detail::allow_only(s, {"e"});
        auto* ev = detail::find_named(s, "e");
        if (!ev) throw DomainError("thm1_ii needs e=<value>");
        return theorem1_ii(z, detail::bind_secondary(*ev, z));
    }
    detail::allow_only(s, {});
    if (f == "burau") return burau3(z);
    if (f == "burau_diag") return burau3_diag(z);
    if (f == "mu") return mu(z);
    if (f == "mu_pascal") return mu_pascal(z);
    throw DomainError("unknown family '" + f + "'");
}

inline Representation build(std::string_view text) { return build(parse_family(text)); }

} // namespace braid3
