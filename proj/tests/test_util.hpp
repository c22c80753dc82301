#pragma once

#include <random>

#include "braid3/braid3.hpp"

namespace braid3::testgen {

inline Scalar zs(const std::string& text) { return parse_scalar_as(text, Field::ratfunc); }

inline BigRational rand_q(std::mt19937_64& rng, int max_num = 9, int max_den = 6) {
    return random_rational(rng, max_num, max_den);
}

inline BigRational rand_nonzero_q(std::mt19937_64& rng) {
    for (;;) {
        BigRational q = rand_q(rng);
        if (q != 0) return q;
    }
}

inline Poly rand_poly(std::mt19937_64& rng, int max_degree = 4) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<BigRational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = rand_q(rng);
    return Poly(std::move(c));
}

inline Poly rand_nonzero_poly(std::mt19937_64& rng, int max_degree = 4) {
    for (;;) {
        Poly p = rand_poly(rng, max_degree);
        if (!p.is_zero()) return p;
    }
}

inline RatFunc rand_ratfunc(std::mt19937_64& rng) {
    return RatFunc(rand_poly(rng, 3), rand_nonzero_poly(rng, 3));
}

inline OmegaRational rand_omega(std::mt19937_64& rng) { return {rand_q(rng), rand_q(rng)}; }

/// Random square matrix over Q(z) with entries of degree <= 1.
inline Matrix rand_zmatrix(std::mt19937_64& rng, std::size_t n) {
    Matrix m(n, n, Field::ratfunc);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(RatFunc(rand_poly(rng, 1)));
    return m;
}

inline Matrix rand_invertible_zmatrix(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        Matrix m = rand_zmatrix(rng, n);
        if (is_invertible(m)) return m;
    }
}

} // namespace braid3::testgen
