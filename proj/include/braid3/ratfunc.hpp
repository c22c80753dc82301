#pragma once

#include <string>
#include <utility>

#include "braid3/poly.hpp"

namespace braid3 {

/// Element of Q(z) held as a reduced fraction with monic denominator.
/// That form is canonical, so structural equality is field equality.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(Poly p) : num_(std::move(p)), den_(1) {}
    RatFunc(const BigRational& c) : RatFunc(Poly(c)) {}
    RatFunc(int c) : RatFunc(Poly(c)) {}
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFunc variable() { return RatFunc(Poly::variable()); }

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    /// Only meaningful when is_constant().
    BigRational constant_value() const { return num_.coeff(0) / den_.coeff(0); }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    RatFunc inverse() const {
        if (is_zero()) throw DomainError("division by zero");
        return RatFunc(den_, num_);
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        Poly g = poly_gcd(a.den_, b.den_);
        Poly ad = exact_div(a.den_, g);
        Poly bd = exact_div(b.den_, g);
        return RatFunc(a.num_ * bd + b.num_ * ad, ad * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return {};
        // Cross-cancel first so the final reduction works on small factors.
        Poly g1 = poly_gcd(a.num_, b.den_);
        Poly g2 = poly_gcd(b.num_, a.den_);
        RatFunc r;
        r.num_ = exact_div(a.num_, g1) * exact_div(b.num_, g2);
        r.den_ = exact_div(a.den_, g2) * exact_div(b.den_, g1);
        r.fix_leading();
        return r;
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

private:
    void normalize() {
        if (den_.is_zero()) throw DomainError("division by zero polynomial");
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        fix_leading();
    }

    void fix_leading() {
        BigRational lc = den_.leading();
        if (lc != 1) {
            num_ = num_ / lc;
            den_ = den_ / lc;
        }
    }

    Poly num_;
    Poly den_;
};

/// Canonical form of num/den; throws DomainError on a zero denominator.
inline RatFunc ratfunc_normalize(Poly num, Poly den) { return RatFunc(std::move(num), std::move(den)); }

/// "(num)/(den)" with both parts parenthesized, or the bare polynomial when den = 1.
inline std::string to_string(const RatFunc& r) {
    if (r.den() == Poly(1)) return to_string(r.num());
    return "(" + to_string(r.num()) + ")/(" + to_string(r.den()) + ")";
}

} // namespace braid3
