#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "braid3/error.hpp"
#include "braid3/scalar.hpp"

namespace braid3 {

/// Dense row-major matrix over a single Scalar field.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Field field)
        : rows_(rows), cols_(cols), field_(field), entries_(rows * cols, Scalar::zero(field)) {}

    /// Builds from nested rows. Rational constants are promoted into the
    /// dominant field of the entries, so {{-z, 0}, {1, 1}} is a Q(z) matrix.
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows) {
        std::size_t r = rows.size();
        std::size_t c = r ? rows[0].size() : 0;
        Field f = Field::rational;
        bool seen = false;
        for (const auto& row : rows) {
            if (row.size() != c) throw ShapeError("ragged matrix rows");
            for (const auto& x : row) {
                if (x.field() == Field::rational) continue;
                if (seen && x.field() != f) throw ShapeError("matrix entries from different fields");
                f = x.field();
                seen = true;
            }
        }
        Matrix m(r, c, f);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = promote(rows[i][j], f);
        return m;
    }
    static Matrix from_rows(std::initializer_list<std::initializer_list<Scalar>> rows) {
        std::vector<std::vector<Scalar>> v;
        for (const auto& r : rows) v.emplace_back(r);
        return from_rows(v);
    }

    static Matrix identity(std::size_t n, Field field) {
        Matrix m(n, n, field);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
        return m;
    }
    static Matrix diagonal(const std::vector<Scalar>& d) {
        std::vector<std::vector<Scalar>> rows(d.size(), std::vector<Scalar>(d.size(), Scalar(0)));
        for (std::size_t i = 0; i < d.size(); ++i) rows[i][i] = d[i];
        return from_rows(rows);
    }
    static Matrix column(const std::vector<Scalar>& v) {
        std::vector<std::vector<Scalar>> rows;
        for (const auto& x : v) rows.push_back({x});
        return from_rows(rows);
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    Field field() const noexcept { return field_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    const std::vector<Scalar>& entries() const noexcept { return entries_; }

    /// Applies f to every entry; the result field is taken from the images.
    template <class F>
    Matrix map(F f) const {
        std::vector<Scalar> out;
        out.reserve(entries_.size());
        for (const auto& x : entries_) out.push_back(f(x));
        Field nf = out.empty() ? field_ : out.front().field();
        for (const auto& x : out)
            if (x.field() != nf) throw ShapeError("entry map produced mixed fields");
        Matrix m(rows_, cols_, nf);
        m.entries_ = std::move(out);
        return m;
    }

    Matrix in_field(Field f) const {
        if (f == field_) return *this;
        Matrix m(rows_, cols_, f);
        for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = promote(entries_[k], f);
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Field field_ = Field::rational;
    std::vector<Scalar> entries_;
};

} // namespace braid3
