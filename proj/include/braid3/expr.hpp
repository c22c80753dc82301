#pragma once

#include <cctype>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "braid3/scalar.hpp"

namespace braid3 {

/// Recursive-descent parser for arithmetic over a field T.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' '-'? integer)?
///   primary := number | identifier | '(' expr ')'
///
/// Identifiers and number literals are resolved through callbacks, so the
/// same grammar serves Q(z), Q(omega) and the complex floats.
template <class T>
class ExprParser {
public:
    using Ident = std::function<std::optional<T>(std::string_view)>;
    /// Receives the literal text; `decimal` is true when it has '.' or an exponent.
    using Number = std::function<T(std::string_view, bool decimal)>;

    ExprParser(std::string_view text, Ident ident, Number number)
        : text_(text), ident_(std::move(ident)), number_(std::move(number)) {}

    T parse() {
        T v = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return v;
    }

    /// Parses a leading expression and leaves the cursor after it.
    T parse_prefix() { return expr(); }
    std::size_t position() const noexcept { return pos_; }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

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

    T expr() {
        T v = term();
        for (;;) {
            if (eat('+'))
                v = v + term();
            else if (eat('-'))
                v = v - term();
            else
                return v;
        }
    }

    T term() {
        T v = unary();
        for (;;) {
            if (eat('*')) {
                v = v * unary();
            } else if (eat('/')) {
                std::size_t at = pos_;
                T d = unary();
                try {
                    v = v / d;
                } catch (const DomainError&) {
                    throw ParseError(at, "division by zero");
                }
            } else {
                return v;
            }
        }
    }

    T unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    T power() {
        T base = primary();
        if (!eat('^')) return base;
        bool neg = eat('-');
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer exponent");
        if (pos_ - start > 6) fail("exponent too large");
        long e = std::stol(std::string(text_.substr(start, pos_ - start)));
        try {
            T acc = number_("1", false);
            if (neg) base = acc / base;
            for (long k = 0; k < e; ++k) acc = acc * base;
            return acc;
        } catch (const DomainError&) {
            throw ParseError(start, "division by zero");
        }
    }

    T primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            T v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            auto name = text_.substr(start, pos_ - start);
            if (auto v = ident_(name)) return *v;
            pos_ = start;
            fail("unknown identifier '" + std::string(name) + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    T number() {
        std::size_t start = pos_;
        bool decimal = false;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            decimal = true;
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t save = pos_++;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                decimal = true;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            } else {
                pos_ = save;
            }
        }
        auto lit = text_.substr(start, pos_ - start);
        if (lit == ".") {
            pos_ = start;
            fail("malformed number");
        }
        try {
            return number_(lit, decimal);
        } catch (const ParseError& e) {
            throw ParseError(start, e.message());
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Ident ident_;
    Number number_;
};

namespace detail {

inline bool mentions(std::string_view text, std::string_view word) {
    for (std::size_t i = text.find(word); i != std::string_view::npos; i = text.find(word, i + 1)) {
        bool left_ok = i == 0 || !(std::isalnum(static_cast<unsigned char>(text[i - 1])) || text[i - 1] == '_');
        std::size_t e = i + word.size();
        bool right_ok = e >= text.size() || !(std::isalnum(static_cast<unsigned char>(text[e])) || text[e] == '_');
        if (left_ok && right_ok) return true;
    }
    return false;
}

inline bool looks_decimal(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '.') return true;
        if ((text[i] == 'e' || text[i] == 'E') && i > 0 && std::isdigit(static_cast<unsigned char>(text[i - 1])) &&
            (i == 1 || !std::isalpha(static_cast<unsigned char>(text[i - 2]))))
            return true;
    }
    return mentions(text, "i");
}

inline BigRational integer_literal(std::string_view lit, bool decimal) {
    if (decimal) throw ParseError(0, "decimal literal in exact expression");
    BigRational q;
    q.set_str(std::string(lit), 10);
    return q;
}

} // namespace detail

/// Parses text in the given field. Q(z) accepts `z`, Q(omega) accepts `omega`,
/// complex accepts decimals and `i`; rational accepts only constants.
inline Scalar parse_scalar_as(std::string_view text, Field field) {
    switch (field) {
    case Field::rational:
    case Field::ratfunc: {
        ExprParser<RatFunc> p(
            text,
            [field](std::string_view id) -> std::optional<RatFunc> {
                if (id == "z" && field == Field::ratfunc) return RatFunc::variable();
                return std::nullopt;
            },
            [](std::string_view lit, bool dec) { return RatFunc(detail::integer_literal(lit, dec)); });
        RatFunc r = p.parse();
        if (field == Field::rational) return Scalar(r.constant_value());
        return Scalar(std::move(r));
    }
    case Field::omega: {
        ExprParser<OmegaRational> p(
            text,
            [](std::string_view id) -> std::optional<OmegaRational> {
                if (id == "omega") return OmegaRational::omega();
                return std::nullopt;
            },
            [](std::string_view lit, bool dec) { return OmegaRational(detail::integer_literal(lit, dec)); });
        return Scalar(p.parse());
    }
    case Field::complex: {
        ExprParser<Complex> p(
            text,
            [](std::string_view id) -> std::optional<Complex> {
                if (id == "i") return Complex(0.0, 1.0);
                if (id == "omega") return Complex(-0.5, 0.86602540378443864676);
                return std::nullopt;
            },
            [](std::string_view lit, bool) { return Complex(std::stod(std::string(lit)), 0.0); });
        return Scalar(p.parse());
    }
    }
    return {};
}

/// Parses text and picks the field: `omega` -> Q(omega), decimals or `i` ->
/// complex, non-constant in z -> Q(z), otherwise Q.
inline Scalar parse_scalar(std::string_view text) {
    bool has_omega = detail::mentions(text, "omega");
    if (detail::looks_decimal(text)) return parse_scalar_as(text, Field::complex);
    if (has_omega) {
        if (detail::mentions(text, "z")) throw ParseError(0, "cannot mix z and omega in one value");
        Scalar s = parse_scalar_as(text, Field::omega);
        if (s.is_rational_constant()) return Scalar(s.rational_value());
        return s;
    }
    Scalar s = parse_scalar_as(text, Field::ratfunc);
    if (s.is_rational_constant()) return Scalar(s.rational_value());
    return s;
}

inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    std::string s(buf);
    if (s.find_first_of(".en") == std::string::npos) s += ".0";
    return s;
}

/// Text form that parse_scalar reads back into the same field.
inline std::string to_string(const Scalar& s) {
    switch (s.field()) {
    case Field::rational: return to_string(s.get<BigRational>());
    case Field::ratfunc: return to_string(s.get<RatFunc>());
    case Field::omega: return to_string(s.get<OmegaRational>());
    case Field::complex: {
        const Complex& c = s.get<Complex>();
        if (c.imag() == 0.0) return format_double(c.real());
        std::string im = format_double(c.imag());
        if (im[0] != '-') im = "+" + im;
        return format_double(c.real()) + im + "*i";
    }
    }
    return "?";
}

} // namespace braid3
