#pragma once

#include <complex>
#include <string>

#include "braid3/rational.hpp"

namespace braid3 {

/// a + b*omega in Q(omega), where omega^2 + omega + 1 = 0.
struct OmegaRational {
    BigRational a;
    BigRational b;

    OmegaRational() = default;
    OmegaRational(BigRational a_, BigRational b_ = 0) : a(std::move(a_)), b(std::move(b_)) {
        a.canonicalize();
        b.canonicalize();
    }
    OmegaRational(int a_) : a(a_), b(0) {}

    static OmegaRational omega() { return {0, 1}; }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    /// N(a + b*omega) = a^2 - ab + b^2, positive unless zero.
    BigRational norm() const { return a * a - a * b + b * b; }
    /// Galois conjugate a + b*omega^2.
    OmegaRational conjugate() const { return {a - b, -b}; }

    OmegaRational inverse() const {
        if (is_zero()) throw DomainError("division by zero");
        BigRational n = norm();
        OmegaRational c = conjugate();
        return {c.a / n, c.b / n};
    }

    OmegaRational operator-() const { return {-a, -b}; }
    friend OmegaRational operator+(const OmegaRational& x, const OmegaRational& y) { return {x.a + y.a, x.b + y.b}; }
    friend OmegaRational operator-(const OmegaRational& x, const OmegaRational& y) { return {x.a - y.a, x.b - y.b}; }
    friend OmegaRational operator*(const OmegaRational& x, const OmegaRational& y) {
        BigRational bd = x.b * y.b;
        return {x.a * y.a - bd, x.a * y.b + x.b * y.a - bd};
    }
    friend OmegaRational operator/(const OmegaRational& x, const OmegaRational& y) { return x * y.inverse(); }
    friend bool operator==(const OmegaRational& x, const OmegaRational& y) { return x.a == y.a && x.b == y.b; }

    std::complex<double> to_complex() const {
        const std::complex<double> w(-0.5, 0.86602540378443864676);
        return a.get_d() + b.get_d() * w;
    }
};

inline std::string to_string(const OmegaRational& x) {
    if (x.b == 0) return x.a.get_str();
    std::string bpart;
    if (x.b == 1)
        bpart = "omega";
    else if (x.b == -1)
        bpart = "-omega";
    else
        bpart = x.b.get_str() + "*omega";
    if (x.a == 0) return bpart;
    return x.a.get_str() + (x.b > 0 ? "+" : "") + bpart;
}

} // namespace braid3
