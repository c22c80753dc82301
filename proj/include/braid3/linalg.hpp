#pragma once

#include <cmath>
#include <vector>

#include "braid3/matrix.hpp"

namespace braid3 {

namespace detail {
inline void check_field(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field())
        throw ShapeError("field mismatch: " + std::string(field_name(a.field())) + " vs " +
                         std::string(field_name(b.field())));
}
} // namespace detail

inline Matrix operator+(const Matrix& a, const Matrix& b) {
    detail::check_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("dimension mismatch in matrix sum");
    Matrix r(a.rows(), a.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

inline Matrix operator-(const Matrix& a) {
    return a.map([](const Scalar& x) { return -x; });
}
inline Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

inline Matrix operator*(const Matrix& a, const Matrix& b) {
    detail::check_field(a, b);
    if (a.cols() != b.rows()) throw ShapeError("dimension mismatch in matrix product");
    Matrix r(a.rows(), b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

inline Matrix operator*(const Scalar& s, const Matrix& m) {
    return m.map([&](const Scalar& x) { return s * x; });
}
inline Matrix mat_scale(const Scalar& s, const Matrix& m) { return s * m; }

inline Matrix transpose(const Matrix& m) {
    Matrix r(m.cols(), m.rows(), m.field());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = m(i, j);
    return r;
}

inline Scalar trace(const Matrix& m) {
    if (!m.is_square()) throw ShapeError("trace of a non-square matrix");
    Scalar t = Scalar::zero(m.field());
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

/// Block structure (a_ij * b).
inline Matrix kronecker(const Matrix& a, const Matrix& b) {
    detail::check_field(a, b);
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return r;
}

/// Block-diagonal [[a, 0], [0, b]].
inline Matrix block_diagonal(const Matrix& a, const Matrix& b) {
    detail::check_field(a, b);
    Matrix r(a.rows() + b.rows(), a.cols() + b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
    return r;
}

/// Copy with row and column `k` removed.
inline Matrix delete_row_col(const Matrix& m, std::size_t k) {
    Matrix r(m.rows() - 1, m.cols() - 1, m.field());
    for (std::size_t i = 0, ri = 0; i < m.rows(); ++i) {
        if (i == k) continue;
        for (std::size_t j = 0, rj = 0; j < m.cols(); ++j) {
            if (j == k) continue;
            r(ri, rj++) = m(i, j);
        }
        ++ri;
    }
    return r;
}

/// Rows [r0, r0+nr) and columns [c0, c0+nc).
inline Matrix submatrix(const Matrix& m, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) {
    Matrix r(nr, nc, m.field());
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) r(i, j) = m(r0 + i, c0 + j);
    return r;
}

/// Concatenates matrices left to right.
inline Matrix hstack(const std::vector<Matrix>& cols) {
    if (cols.empty()) return {};
    std::size_t total = 0;
    for (const auto& c : cols) total += c.cols();
    Matrix r(cols[0].rows(), total, cols[0].field());
    std::size_t off = 0;
    for (const auto& c : cols) {
        detail::check_field(r, c);
        if (c.rows() != r.rows()) throw ShapeError("hstack row mismatch");
        for (std::size_t i = 0; i < c.rows(); ++i)
            for (std::size_t j = 0; j < c.cols(); ++j) r(i, off + j) = c(i, j);
        off += c.cols();
    }
    return r;
}

inline Matrix vstack(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) return {};
    std::size_t total = 0;
    for (const auto& b : blocks) total += b.rows();
    Matrix r(total, blocks[0].cols(), blocks[0].field());
    std::size_t off = 0;
    for (const auto& b : blocks) {
        detail::check_field(r, b);
        if (b.cols() != r.cols()) throw ShapeError("vstack column mismatch");
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) r(off + i, j) = b(i, j);
        off += b.rows();
    }
    return r;
}

/// Reduced row echelon form with the pivot columns.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    /// Product of pivots with the sign of the row permutation (the determinant
    /// when the input is square and of full rank).
    Scalar det_factor;
};

/// Gauss-Jordan elimination. Exact fields pivot on the first nonzero entry
/// in row order; the complex field uses partial pivoting by magnitude.
inline Echelon row_reduce(Matrix m) {
    const Field f = m.field();
    Scalar det = Scalar::one(f);
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = m.rows();
        if (f == Field::complex) {
            double best = 0.0;
            for (std::size_t i = row; i < m.rows(); ++i) {
                double mag = std::abs(m(i, col).get<Complex>());
                if (mag > best) {
                    best = mag;
                    p = i;
                }
            }
            if (best <= float_epsilon()) p = m.rows();
        } else {
            for (std::size_t i = row; i < m.rows(); ++i)
                if (!m(i, col).is_zero()) {
                    p = i;
                    break;
                }
        }
        if (p == m.rows()) continue;
        if (p != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
            det = -det;
        }
        Scalar pivot_inv = m(row, col).inverse();
        det *= m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= pivot_inv;
        m(row, col) = Scalar::one(f);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            Scalar factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
            m(i, col) = Scalar::zero(f);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots), det};
}

inline std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

inline Scalar determinant(const Matrix& m) {
    if (!m.is_square()) throw ShapeError("determinant of a non-square matrix");
    Echelon e = row_reduce(m);
    if (e.pivots.size() < m.rows()) return Scalar::zero(m.field());
    return e.det_factor;
}

inline bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

inline Matrix mat_inverse(const Matrix& m) {
    if (!m.is_square()) throw ShapeError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return m;
    Echelon e = row_reduce(hstack({m, Matrix::identity(n, m.field())}));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw DomainError("not invertible");
    return submatrix(e.reduced, 0, n, n, n);
}

/// Scales v so that its first nonzero entry is 1.
inline Matrix normalize_leading_one(const Matrix& v) {
    for (const auto& x : v.entries())
        if (!x.is_zero()) {
            Scalar inv = x.inverse();
            return v.map([&](const Scalar& y) { return y * inv; });
        }
    return v;
}

/// Null-space basis as column vectors, each normalized to a leading 1.
struct KernelBasis {
    std::vector<Matrix> vectors;

    std::size_t dimension() const noexcept { return vectors.size(); }
    bool empty() const noexcept { return vectors.empty(); }
};

inline KernelBasis kernel(const Matrix& m) {
    Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    KernelBasis out;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Matrix v(m.cols(), 1, m.field());
        v(free, 0) = Scalar::one(m.field());
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v(e.pivots[r], 0) = -e.reduced(r, free);
        out.vectors.push_back(normalize_leading_one(v));
    }
    return out;
}

/// p^-1 * m * p.
inline Matrix conjugate(const Matrix& p, const Matrix& m) {
    if (!p.is_square() || p.rows() != m.rows() || !m.is_square()) throw ShapeError("dimension mismatch in conjugate");
    return mat_inverse(p) * m * p;
}

inline bool is_upper_triangular(const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < i && j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return false;
    return true;
}
inline bool is_lower_triangular(const Matrix& m) { return is_upper_triangular(transpose(m)); }

/// Polynomial in t with Scalar coefficients, ascending degree.
class ScalarPoly {
public:
    explicit ScalarPoly(Field f) : field_(f) {}
    ScalarPoly(std::vector<Scalar> ascending, Field f) : field_(f), coeffs_(std::move(ascending)) { trim(); }

    Field field() const noexcept { return field_; }
    const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Scalar coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar::zero(field_); }

    friend ScalarPoly operator+(const ScalarPoly& a, const ScalarPoly& b) {
        std::vector<Scalar> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar::zero(a.field_));
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) + b.coeff(k);
        return {std::move(v), a.field_};
    }
    friend ScalarPoly operator-(const ScalarPoly& a, const ScalarPoly& b) {
        std::vector<Scalar> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar::zero(a.field_));
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) - b.coeff(k);
        return {std::move(v), a.field_};
    }
    friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
        if (a.coeffs_.empty() || b.coeffs_.empty()) return ScalarPoly(a.field_);
        std::vector<Scalar> v(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar::zero(a.field_));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return {std::move(v), a.field_};
    }
    friend bool operator==(const ScalarPoly& a, const ScalarPoly& b) {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    Field field_;
    std::vector<Scalar> coeffs_;
};

namespace detail {
inline ScalarPoly laplace_det(const std::vector<std::vector<ScalarPoly>>& a) {
    const std::size_t n = a.size();
    if (n == 1) return a[0][0];
    ScalarPoly acc(a[0][0].field());
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<ScalarPoly>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<ScalarPoly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(a[i][k]);
            minor.push_back(std::move(row));
        }
        ScalarPoly term = a[0][j] * laplace_det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}
} // namespace detail

/// det(tI - m) by cofactor expansion. Intended for n <= 4.
inline ScalarPoly char_poly(const Matrix& m) {
    if (!m.is_square()) throw ShapeError("characteristic polynomial of a non-square matrix");
    const Field f = m.field();
    if (m.rows() == 0) return ScalarPoly({Scalar::one(f)}, f);
    std::vector<std::vector<ScalarPoly>> a(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::vector<Scalar> c{-m(i, j)};
            if (i == j) c.push_back(Scalar::one(f));
            a[i].emplace_back(std::move(c), f);
        }
    return detail::laplace_det(a);
}

} // namespace braid3
