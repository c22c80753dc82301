#pragma once

#include <atomic>
#include <cmath>
#include <complex>
#include <string>
#include <string_view>
#include <variant>

#include "braid3/error.hpp"
#include "braid3/omega.hpp"
#include "braid3/ratfunc.hpp"

namespace braid3 {

using Complex = std::complex<double>;

/// Which field a Scalar lives in. Arithmetic never mixes fields.
enum class Field { rational, ratfunc, omega, complex };

inline std::string_view field_name(Field f) {
    switch (f) {
    case Field::rational: return "rational";
    case Field::ratfunc: return "ratfunc";
    case Field::omega: return "omega";
    case Field::complex: return "complex";
    }
    return "?";
}

inline Field field_from_name(std::string_view s) {
    if (s == "rational") return Field::rational;
    if (s == "ratfunc") return Field::ratfunc;
    if (s == "omega") return Field::omega;
    if (s == "complex") return Field::complex;
    throw ParseError(0, "unknown field '" + std::string(s) + "'");
}

namespace detail {
inline std::atomic<double>& epsilon_storage() {
    static std::atomic<double> eps{1e-9};
    return eps;
}
} // namespace detail

/// Tolerance for float-tag equality: |a-b| <= eps * (1 + max(|a|, |b|)).
inline double float_epsilon() { return detail::epsilon_storage().load(std::memory_order_relaxed); }
inline void set_float_epsilon(double eps) { detail::epsilon_storage().store(eps, std::memory_order_relaxed); }

inline bool approx_equal(const Complex& a, const Complex& b, double eps) {
    return std::abs(a - b) <= eps * (1.0 + std::max(std::abs(a), std::abs(b)));
}

/// A value in one of Q, Q(z), Q(omega) or the complex floats.
class Scalar {
public:
    using Value = std::variant<BigRational, RatFunc, OmegaRational, Complex>;

    Scalar() : v_(BigRational(0)) {}
    Scalar(BigRational q) : v_(std::move(q)) { std::get<BigRational>(v_).canonicalize(); }
    Scalar(int q) : v_(BigRational(q)) {}
    Scalar(RatFunc r) : v_(std::move(r)) {}
    Scalar(Poly p) : v_(RatFunc(std::move(p))) {}
    Scalar(OmegaRational w) : v_(std::move(w)) {}
    Scalar(Complex c) : v_(c) {}

    /// The formal variable z of Q(z).
    static Scalar z() { return Scalar(RatFunc::variable()); }
    static Scalar omega() { return Scalar(OmegaRational::omega()); }

    /// The rational q embedded in field f.
    static Scalar constant(const BigRational& q, Field f) {
        switch (f) {
        case Field::rational: return Scalar(q);
        case Field::ratfunc: return Scalar(RatFunc(q));
        case Field::omega: return Scalar(OmegaRational(q));
        case Field::complex: return Scalar(Complex(q.get_d(), 0.0));
        }
        return Scalar(q);
    }
    static Scalar zero(Field f) { return constant(0, f); }
    static Scalar one(Field f) { return constant(1, f); }

    Field field() const noexcept { return static_cast<Field>(v_.index()); }
    const Value& value() const noexcept { return v_; }

    template <class T>
    const T& get() const {
        if (auto* p = std::get_if<T>(&v_)) return *p;
        throw ShapeError("scalar is in field " + std::string(field_name(field())));
    }

    bool is_zero() const {
        return std::visit(
            [](const auto& x) -> bool {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, BigRational>)
                    return x == 0;
                else if constexpr (std::is_same_v<T, Complex>)
                    return std::abs(x) <= float_epsilon();
                else
                    return x.is_zero();
            },
            v_);
    }
    bool is_one() const { return *this == one(field()); }

    /// True for rationals and for constant elements of Q(z) / Q(omega).
    bool is_rational_constant() const {
        switch (field()) {
        case Field::rational: return true;
        case Field::ratfunc: return get<RatFunc>().is_constant();
        case Field::omega: return get<OmegaRational>().is_rational();
        case Field::complex: return false;
        }
        return false;
    }
    BigRational rational_value() const {
        switch (field()) {
        case Field::rational: return get<BigRational>();
        case Field::ratfunc:
            if (get<RatFunc>().is_constant()) return get<RatFunc>().constant_value();
            break;
        case Field::omega:
            if (get<OmegaRational>().is_rational()) return get<OmegaRational>().a;
            break;
        case Field::complex: break;
        }
        throw ShapeError("scalar is not a rational constant");
    }

    /// Numeric value; throws for non-constant elements of Q(z).
    Complex to_complex() const {
        switch (field()) {
        case Field::rational: return {get<BigRational>().get_d(), 0.0};
        case Field::ratfunc: return {rational_value().get_d(), 0.0};
        case Field::omega: return get<OmegaRational>().to_complex();
        case Field::complex: return get<Complex>();
        }
        return {};
    }

    Scalar operator-() const {
        return std::visit([](const auto& x) { return Scalar(std::decay_t<decltype(x)>(-x)); }, v_);
    }

    Scalar inverse() const {
        if (is_zero()) throw DomainError("division by zero");
        return std::visit(
            [](const auto& x) -> Scalar {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, BigRational>)
                    return Scalar(BigRational(1 / x));
                else if constexpr (std::is_same_v<T, Complex>)
                    return Scalar(1.0 / x);
                else
                    return Scalar(x.inverse());
            },
            v_);
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return binary(a, b, [](const auto& x, const auto& y) { return x + y; });
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return binary(a, b, [](const auto& x, const auto& y) { return x - y; });
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return binary(a, b, [](const auto& x, const auto& y) { return x * y; });
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        check_same(a, b);
        return a * b.inverse();
    }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    /// Exact for Q, Q(z), Q(omega); scale-relative tolerance for complex.
    /// Values in different fields compare unequal.
    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.field() != b.field()) return false;
        if (a.field() == Field::complex) return approx_equal(a.get<Complex>(), b.get<Complex>(), float_epsilon());
        return a.v_ == b.v_;
    }

private:
    static void check_same(const Scalar& a, const Scalar& b) {
        if (a.field() != b.field())
            throw ShapeError("field mismatch: " + std::string(field_name(a.field())) + " vs " +
                             std::string(field_name(b.field())));
    }

    template <class Op>
    static Scalar binary(const Scalar& a, const Scalar& b, Op op) {
        check_same(a, b);
        return std::visit(
            [&](const auto& x) -> Scalar {
                using T = std::decay_t<decltype(x)>;
                return Scalar(T(op(x, std::get<T>(b.v_))));
            },
            a.v_);
    }

    Value v_;
};

inline Scalar pow(Scalar base, long exponent) {
    if (exponent < 0) {
        base = base.inverse();
        exponent = -exponent;
    }
    Scalar acc = Scalar::one(base.field());
    while (exponent > 0) {
        if (exponent & 1) acc *= base;
        base *= base;
        exponent >>= 1;
    }
    return acc;
}

/// Moves s into field `target`. Rational constants embed anywhere; exact values
/// embed into the complex floats; anything else is a ShapeError.
inline Scalar promote(const Scalar& s, Field target) {
    if (s.field() == target) return s;
    if (target == Field::complex) return Scalar(s.to_complex());
    if (s.is_rational_constant()) return Scalar::constant(s.rational_value(), target);
    throw ShapeError("cannot move a " + std::string(field_name(s.field())) + " value into field " +
                     std::string(field_name(target)));
}

/// The field two parameters share after promotion: symbolic and algebraic
/// values dominate plain rationals; mixing Q(z) with Q(omega) is refused.
inline Field common_field(const Scalar& a, const Scalar& b) {
    if (a.field() == b.field()) return a.field();
    auto rank = [](const Scalar& s) {
        if (s.field() == Field::complex) return 3;
        if (s.is_rational_constant()) return 0;
        return s.field() == Field::ratfunc ? 1 : 2;
    };
    const Scalar& hi = rank(a) >= rank(b) ? a : b;
    const Scalar& lo = rank(a) >= rank(b) ? b : a;
    if (rank(hi) == 3 && lo.field() == Field::ratfunc && !lo.is_rational_constant())
        throw ShapeError("cannot mix symbolic and float parameters");
    if (rank(hi) < 3 && rank(lo) != 0)
        throw ShapeError("cannot mix symbolic z with omega; bind one parameter to a constant");
    return rank(hi) == 0 ? Field::rational : hi.field();
}

/// Substitutes `point` for z. The result lives in the point's field.
inline Scalar evaluate(const RatFunc& r, const Scalar& point) {
    if (point.field() == Field::ratfunc) throw ShapeError("specialization point must be a constant");
    Field f = point.field();
    auto lift = [f](const BigRational& q) { return Scalar::constant(q, f); };
    Scalar den = r.den().eval(point, lift);
    if (den.is_zero()) throw DomainError("pole at specialization point");
    return r.num().eval(point, lift) / den;
}

/// Applies the substitution z -> point to any scalar; non-symbolic values are
/// promoted unchanged into the point's field.
inline Scalar specialize_scalar(const Scalar& s, const Scalar& point) {
    if (s.field() == Field::ratfunc) return evaluate(s.get<RatFunc>(), point);
    return promote(s, point.field());
}

} // namespace braid3
