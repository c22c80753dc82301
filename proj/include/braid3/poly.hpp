#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "braid3/error.hpp"
#include "braid3/rational.hpp"

namespace braid3 {

/// Dense univariate polynomial in z over the rationals, ascending coefficients.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
class Poly {
public:
    Poly() = default;
    Poly(BigRational c) {
        c.canonicalize();
        if (c != 0) coeffs_.push_back(std::move(c));
    }
    Poly(int c) : Poly(BigRational(c)) {}
    Poly(std::initializer_list<BigRational> ascending) : coeffs_(ascending) { trim(); }
    explicit Poly(std::vector<BigRational> ascending) : coeffs_(std::move(ascending)) { trim(); }

    /// The polynomial z.
    static Poly variable() { return Poly{BigRational(0), BigRational(1)}; }
    static Poly monomial(const BigRational& c, std::size_t degree) {
        std::vector<BigRational> v(degree + 1);
        v[degree] = c;
        return Poly(std::move(v));
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigRational>& coeffs() const noexcept { return coeffs_; }

    BigRational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigRational(0); }
    BigRational leading() const { return coeffs_.empty() ? BigRational(0) : coeffs_.back(); }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this / leading();
    }

    /// Horner evaluation in any ring T that can be built from a rational.
    template <class T, class Lift>
    T eval(const T& x, Lift lift) const {
        T acc = lift(BigRational(0));
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + lift(*it);
        return acc;
    }
    BigRational eval(const BigRational& x) const {
        BigRational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<BigRational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) + b.coeff(k);
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigRational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Poly(std::move(v));
    }
    friend Poly operator/(const Poly& a, const BigRational& c) {
        if (c == 0) throw DomainError("division by zero");
        Poly r = a;
        for (auto& x : r.coeffs_) x /= c;
        return r;
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    /// Euclidean division: a = q*b + r with deg r < deg b.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw DomainError("division by zero polynomial");
        if (a.degree() < b.degree()) return {Poly{}, a};
        std::vector<BigRational> rem = a.coeffs_;
        std::vector<BigRational> quot(a.coeffs_.size() - b.coeffs_.size() + 1);
        const BigRational& lead = b.coeffs_.back();
        for (std::size_t k = quot.size(); k-- > 0;) {
            BigRational c = rem[k + b.coeffs_.size() - 1] / lead;
            quot[k] = c;
            if (c == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) rem[k + j] -= c * b.coeffs_[j];
        }
        rem.resize(b.coeffs_.size() - 1);
        return {Poly(std::move(quot)), Poly(std::move(rem))};
    }

private:
    void trim() {
        for (auto& c : coeffs_) c.canonicalize();
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigRational> coeffs_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = Poly::divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

/// Exact quotient; throws if b does not divide a.
inline Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = Poly::divmod(a, b);
    if (!r.is_zero()) throw DomainError("inexact polynomial division");
    return q;
}

/// Plain-text form, descending degree: "z^2+2*z+1", "-1/2*z", "3/4".
inline std::string to_string(const Poly& p, const std::string& var = "z") {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        BigRational c = p.coeff(static_cast<std::size_t>(k));
        if (c == 0) continue;
        bool neg = c < 0;
        BigRational mag = neg ? BigRational(-c) : c;
        if (neg)
            out += "-";
        else if (!out.empty())
            out += "+";
        if (k == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

} // namespace braid3
