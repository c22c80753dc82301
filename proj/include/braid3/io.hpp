#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "braid3/analysis.hpp"
#include "braid3/family.hpp"

namespace braid3 {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// JSON

inline json coeffs_to_json(const Poly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.get_str());
    return a;
}

inline Poly coeffs_from_json(const json& j) {
    std::vector<BigRational> v;
    for (const auto& c : j) v.push_back(c.is_number_integer() ? BigRational(c.get<long>()) : parse_rational(c.get<std::string>()));
    return Poly(std::move(v));
}

/// Q -> "p/q"; Q(z) -> {"num": [...], "den": [...]}; Q(omega) -> {"a", "b"};
/// complex -> {"re", "im"}.
inline json to_json(const Scalar& s) {
    switch (s.field()) {
    case Field::rational: return s.get<BigRational>().get_str();
    case Field::ratfunc: {
        const auto& r = s.get<RatFunc>();
        return {{"num", coeffs_to_json(r.num())}, {"den", coeffs_to_json(r.den())}};
    }
    case Field::omega: {
        const auto& w = s.get<OmegaRational>();
        return {{"a", w.a.get_str()}, {"b", w.b.get_str()}};
    }
    case Field::complex: {
        const auto& c = s.get<Complex>();
        return {{"re", c.real()}, {"im", c.imag()}};
    }
    }
    return nullptr;
}

/// Accepts the object forms above, integers, and strings in the scalar text
/// grammar. `field` forces the field of strings and integers.
inline Scalar scalar_from_json(const json& j, std::optional<Field> field = std::nullopt) {
    Scalar s;
    if (j.is_object()) {
        if (j.contains("num"))
            s = Scalar(ratfunc_normalize(coeffs_from_json(j.at("num")), coeffs_from_json(j.at("den"))));
        else if (j.contains("a"))
            s = Scalar(OmegaRational(parse_rational(j.at("a").get<std::string>()),
                                     parse_rational(j.at("b").get<std::string>())));
        else if (j.contains("re"))
            s = Scalar(Complex(j.at("re").get<double>(), j.value("im", 0.0)));
        else
            throw ParseError(0, "unrecognized scalar object");
    } else if (j.is_number_integer()) {
        s = Scalar(BigRational(j.get<long>()));
    } else if (j.is_number_float()) {
        s = Scalar(Complex(j.get<double>(), 0.0));
    } else if (j.is_string()) {
        const auto& text = j.get_ref<const std::string&>();
        s = field ? parse_scalar_as(text, *field) : parse_scalar(text);
    } else {
        throw ParseError(0, "unrecognized scalar");
    }
    return field ? promote(s, *field) : s;
}

inline json to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"field", field_name(m.field())}, {"entries", rows}};
}

inline Matrix matrix_from_json(const json& j, std::optional<Field> field = std::nullopt) {
    if (!field && j.contains("field")) field = field_from_name(j.at("field").get<std::string>());
    const json& entries = j.at("entries");
    std::vector<std::vector<Scalar>> rows;
    for (const auto& row : entries) {
        std::vector<Scalar> r;
        for (const auto& e : row) r.push_back(scalar_from_json(e, field));
        rows.push_back(std::move(r));
    }
    if (j.contains("rows") && j.at("rows").get<std::size_t>() != rows.size())
        throw ShapeError("matrix 'rows' disagrees with entries");
    if (j.contains("cols") && !rows.empty() && j.at("cols").get<std::size_t>() != rows[0].size())
        throw ShapeError("matrix 'cols' disagrees with entries");
    Matrix m = Matrix::from_rows(rows);
    return field ? m.in_field(*field) : m;
}

inline json to_json(const Representation& r) {
    json images = json::array();
    for (const auto& m : r.images()) images.push_back(to_json(m));
    json params = json::object();
    for (const auto& [k, v] : r.meta().params) params[k] = to_string(v);
    return {{"braid_index", r.braid_index()},
            {"field", field_name(r.field())},
            {"images", images},
            {"meta", {{"family", r.meta().family}, {"label", r.meta().label}, {"params", params}}}};
}

/// Raw input: relations are not checked here.
inline Representation representation_from_json(const json& j) {
    std::optional<Field> field;
    if (j.contains("field")) field = field_from_name(j.at("field").get<std::string>());
    std::vector<Matrix> images;
    for (const auto& m : j.at("images")) images.push_back(matrix_from_json(m, field));
    if (!field && !images.empty()) {
        // Unify fields when entries were given loosely.
        Field f = Field::rational;
        for (const auto& m : images)
            if (m.field() != Field::rational) f = m.field();
        for (auto& m : images) m = m.in_field(f);
    }
    RepMeta meta;
    if (j.contains("meta")) {
        const json& mj = j.at("meta");
        meta.family = mj.value("family", "raw");
        meta.label = mj.value("label", meta.family);
        if (mj.contains("params"))
            for (const auto& [k, v] : mj.at("params").items()) meta.params.emplace_back(k, scalar_from_json(v));
    }
    int n = j.value("braid_index", static_cast<int>(images.size()) + 1);
    return Representation::raw(n, std::move(images), std::move(meta));
}

inline json to_json(const VerificationReport& v) {
    json rel = json::array();
    for (const auto& r : v.relations) rel.push_back({{"lhs", r.lhs}, {"rhs", r.rhs}, {"holds", r.holds}});
    return {{"relations", rel}, {"overall", v.overall}};
}

inline json to_json(const InvariantLine& l) {
    return {{"eigenvalue", to_json(l.eigenvalue)}, {"vector", to_json(l.vector)}, {"side", side_name(l.side)}};
}

inline json to_json(const DecompositionReport& d) {
    json blocks = json::array();
    for (const auto& b : d.blocks) blocks.push_back(to_json(b));
    json wit = json::array();
    for (const auto& w : d.witnesses) wit.push_back(to_json(w));
    return {{"basis_change", to_json(d.basis_change)}, {"blocks", blocks}, {"witnesses", wit}};
}

// ---------------------------------------------------------------------------
// LaTeX

inline std::string latex(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        BigRational c = p.coeff(static_cast<std::size_t>(k));
        if (c == 0) continue;
        bool neg = c < 0;
        BigRational mag = neg ? BigRational(-c) : c;
        out += neg ? "-" : (out.empty() ? "" : "+");
        std::string coef;
        if (mag.get_den() != 1)
            coef = "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
        else if (mag != 1 || k == 0)
            coef = mag.get_str();
        out += coef;
        if (k >= 1) out += "z";
        if (k > 1) out += "^{" + std::to_string(k) + "}";
    }
    return out;
}

inline std::string latex(const Scalar& s) {
    switch (s.field()) {
    case Field::rational: {
        const auto& q = s.get<BigRational>();
        if (q.get_den() == 1) return q.get_str();
        std::string sign = q < 0 ? "-" : "";
        return sign + "\\frac{" + mpz_class(abs(q.get_num())).get_str() + "}{" + q.get_den().get_str() + "}";
    }
    case Field::ratfunc: {
        const auto& r = s.get<RatFunc>();
        if (r.den() == Poly(1)) return latex(r.num());
        // Pull a leading minus out of the numerator.
        if (r.num().leading() < 0) return "-\\frac{" + latex(-r.num()) + "}{" + latex(r.den()) + "}";
        return "\\frac{" + latex(r.num()) + "}{" + latex(r.den()) + "}";
    }
    case Field::omega: {
        std::string t = to_string(s);
        std::string out;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (t.compare(i, 5, "omega") == 0) {
                out += "\\omega ";
                i += 4;
            } else if (t[i] != '*') {
                out += t[i];
            }
        }
        return out;
    }
    case Field::complex: return to_string(s);
    }
    return "";
}

inline std::string latex(const Matrix& m) {
    std::string out = "\\left[\n\\begin{array}{" + std::string(m.cols(), 'c') + "}\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? " & " : "") + latex(m(i, j));
        out += i + 1 < m.rows() ? " \\\\\n" : "\n";
    }
    return out + "\\end{array}\n\\right]";
}

inline std::string latex(const Representation& r) {
    std::string out;
    for (std::size_t i = 0; i < r.images().size(); ++i)
        out += "\\sigma_{" + std::to_string(i + 1) + "}\\rightarrow " + latex(r.image(i)) +
               (i + 1 < r.images().size() ? ",\n" : "\n");
    return out;
}

// ---------------------------------------------------------------------------
// Aligned text

inline std::string text(const Matrix& m, const std::string& indent = "  ") {
    std::vector<std::string> cells;
    std::vector<std::size_t> width(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            cells.push_back(to_string(m(i, j)));
            width[j] = std::max(width[j], cells.back().size());
        }
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += indent + "[ ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto& c = cells[i * m.cols() + j];
            out += std::string(width[j] - c.size(), ' ') + c + (j + 1 < m.cols() ? "  " : "");
        }
        out += " ]\n";
    }
    return out;
}

inline std::string text(const Representation& r) {
    std::string out = r.meta().label + "  [B" + std::to_string(r.braid_index()) + ", dim " +
                      std::to_string(r.dimension()) + ", field " + std::string(field_name(r.field())) + "]\n";
    for (std::size_t i = 0; i < r.images().size(); ++i) out += "s" + std::to_string(i + 1) + " ->\n" + text(r.image(i));
    return out;
}

inline std::string text(const VerificationReport& v) {
    std::string out;
    for (const auto& r : v.relations) out += (r.holds ? "  holds   " : "  FAILS   ") + r.lhs + " = " + r.rhs + "\n";
    out += v.overall ? "braid relations: hold\n" : "braid relations: VIOLATED\n";
    return out;
}

inline std::string text(const InvariantLine& l) {
    std::string v;
    for (std::size_t i = 0; i < l.vector.rows(); ++i) v += (i ? ", " : "") + to_string(l.vector(i, 0));
    return std::string(side_name(l.side)) + " line, eigenvalue " + to_string(l.eigenvalue) + ", vector (" + v + ")";
}

inline std::string text(const DecompositionReport& d) {
    std::string out = "basis change:\n" + text(d.basis_change);
    for (std::size_t i = 0; i < d.blocks.size(); ++i) out += "block " + std::to_string(i + 1) + ": " + text(d.blocks[i]);
    out += "witnesses:\n";
    for (const auto& w : d.witnesses) out += "  " + text(w) + "\n";
    return out;
}

} // namespace braid3
