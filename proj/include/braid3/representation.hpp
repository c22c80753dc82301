#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "braid3/expr.hpp"
#include "braid3/relations.hpp"

namespace braid3 {

/// Provenance of a representation: the family it came from, its parameter
/// bindings, and a readable label such as "tensor(burau(z),burau(z))".
struct RepMeta {
    std::string family = "raw";
    std::vector<std::pair<std::string, Scalar>> params;
    std::string label;
};

/// Generator images s_1..s_{n-1} -> GL_d over one field.
class Representation {
public:
    /// Shape and invertibility are checked; the braid relations are not.
    static Representation raw(int braid_index, std::vector<Matrix> images, RepMeta meta = {}) {
        if (braid_index < 2) throw ShapeError("braid index must be at least 2");
        if (images.size() != static_cast<std::size_t>(braid_index - 1))
            throw ShapeError("expected " + std::to_string(braid_index - 1) + " generator images, got " +
                             std::to_string(images.size()));
        for (std::size_t i = 0; i < images.size(); ++i) {
            const Matrix& m = images[i];
            if (!m.is_square() || m.rows() == 0) throw ShapeError("generator images must be non-empty square matrices");
            if (m.rows() != images[0].rows()) throw ShapeError("generator images differ in dimension");
            if (m.field() != images[0].field()) throw ShapeError("generator images differ in field");
            if (!is_invertible(m)) throw DomainError("not invertible: image of s" + std::to_string(i + 1));
        }
        if (meta.label.empty()) meta.label = meta.family;
        return Representation(braid_index, std::move(images), std::move(meta));
    }

    int braid_index() const noexcept { return braid_index_; }
    std::size_t dimension() const noexcept { return images_.front().rows(); }
    Field field() const noexcept { return images_.front().field(); }
    const std::vector<Matrix>& images() const noexcept { return images_; }
    /// Image of s_{i+1}.
    const Matrix& image(std::size_t i) const { return images_.at(i); }
    const RepMeta& meta() const noexcept { return meta_; }

    /// Image of a word in the generators; letter k means s_k, -k its inverse.
    Matrix word(const std::vector<int>& letters) const {
        Matrix acc = Matrix::identity(dimension(), field());
        for (int l : letters) {
            std::size_t k = static_cast<std::size_t>(l > 0 ? l : -l);
            if (k == 0 || k > images_.size()) throw ShapeError("generator index out of range");
            acc = acc * (l > 0 ? images_[k - 1] : mat_inverse(images_[k - 1]));
        }
        return acc;
    }

    /// Entrywise equality of generator images (provenance is ignored).
    friend bool operator==(const Representation& a, const Representation& b) {
        return a.braid_index_ == b.braid_index_ && a.images_ == b.images_;
    }

private:
    Representation(int n, std::vector<Matrix> images, RepMeta meta)
        : braid_index_(n), images_(std::move(images)), meta_(std::move(meta)) {}

    int braid_index_;
    std::vector<Matrix> images_;
    RepMeta meta_;
};

namespace detail {

inline bool is_value(const Scalar& s, int q) { return s == Scalar::constant(q, s.field()); }

inline std::string label_of(const std::string& family, const std::vector<std::pair<std::string, Scalar>>& params) {
    if (params.empty()) return family;
    std::string out = family + "(" + to_string(params[0].second);
    for (std::size_t i = 1; i < params.size(); ++i)
        out += (i == 1 ? "; " : ", ") + params[i].first + "=" + to_string(params[i].second);
    return out + ")";
}

/// Named constructors guarantee a representation; a failure here is a bug.
inline Representation named(int n, std::vector<Matrix> images, std::string family,
                            std::vector<std::pair<std::string, Scalar>> params) {
    RepMeta meta{family, params, label_of(family, params)};
    Representation r = Representation::raw(n, std::move(images), std::move(meta));
    if (!verify_relations(r.images()).overall)
        throw std::logic_error("constructed " + family + " violates the braid relation");
    return r;
}

} // namespace detail

/// The one-dimensional representation sending every generator to z.
inline Representation xi(const Scalar& z, int braid_index = 3) {
    if (z.is_zero()) throw DomainError("not invertible: xi needs z != 0");
    std::vector<Matrix> images(static_cast<std::size_t>(std::max(braid_index - 1, 0)), Matrix::from_rows({{z}}));
    std::vector<std::pair<std::string, Scalar>> params{{"z", z}};
    if (braid_index != 3) params.emplace_back("n", Scalar(braid_index));
    return detail::named(braid_index, std::move(images), "xi", std::move(params));
}

/// Diagonal family: s1 -> diag(-z, 1), s2 -> [[1/(z+1), f], [g, -z^2/(z+1)]] with
/// g = z(z^2+z+1) / ((z+1)^2 f). Only the product fg is forced.
inline Representation theorem1_i(const Scalar& z_in, const Scalar& f_in) {
    Field fld = common_field(z_in, f_in);
    Scalar z = promote(z_in, fld);
    Scalar f = promote(f_in, fld);
    if (detail::is_value(z, 0) || detail::is_value(z, -1))
        throw DomainError("excluded parameter for thm1_i: z must not be 0 or -1");
    if (f.is_zero()) throw DomainError("f must be nonzero; fg is forced");
    Scalar one = Scalar::one(fld);
    Scalar zp1 = z + one;
    Scalar g = z * (z * z + z + one) / (zp1 * zp1 * f);
    Matrix s1 = Matrix::from_rows({{-z, Scalar::zero(fld)}, {Scalar::zero(fld), one}});
    Matrix s2 = Matrix::from_rows({{one / zp1, f}, {g, -(z * z) / zp1}});
    return detail::named(3, {s1, s2}, "thm1_i", {{"z", z}, {"f", f}});
}

/// Jordan family: s1 -> [[1, z], [0, 1]], s2 -> [[e, z(e-1)^2], [-1/z, 2-e]].
inline Representation theorem1_ii(const Scalar& z_in, const Scalar& e_in) {
    Field fld = common_field(z_in, e_in);
    Scalar z = promote(z_in, fld);
    Scalar e = promote(e_in, fld);
    if (z.is_zero()) throw DomainError("excluded parameter for thm1_ii: z must not be 0");
    Scalar one = Scalar::one(fld);
    Scalar em1 = e - one;
    Matrix s1 = Matrix::from_rows({{one, z}, {Scalar::zero(fld), one}});
    Matrix s2 = Matrix::from_rows({{e, z * em1 * em1}, {-(one / z), Scalar::constant(2, fld) - e}});
    return detail::named(3, {s1, s2}, "thm1_ii", {{"z", z}, {"e", e}});
}

/// Reduced Burau representation of B3.
inline Representation burau3(const Scalar& z) {
    if (z.is_zero()) throw DomainError("not invertible: burau needs z != 0");
    Field fld = z.field();
    Scalar one = Scalar::one(fld);
    Scalar zero = Scalar::zero(fld);
    Matrix s1 = Matrix::from_rows({{-z, zero}, {one, one}});
    Matrix s2 = Matrix::from_rows({{one, z}, {zero, -z}});
    return detail::named(3, {s1, s2}, "burau", {{"z", z}});
}

/// Change of basis [[-(z+1), 0], [1, 1]] that diagonalizes the Burau s1.
inline Matrix burau_diagonalizer(const Scalar& z) {
    Scalar one = Scalar::one(z.field());
    return Matrix::from_rows({{-(z + one), Scalar::zero(z.field())}, {one, one}});
}

/// Burau with s1 diagonalized. Needs z != -1 (the diagonalizer is singular
/// there); z = 1 is accepted.
inline Representation burau3_diag(const Scalar& z) {
    if (z.is_zero() || detail::is_value(z, -1))
        throw DomainError("excluded parameter for burau_diag: z must not be 0 or -1");
    Field fld = z.field();
    Scalar one = Scalar::one(fld);
    Scalar zero = Scalar::zero(fld);
    Scalar zp1 = z + one;
    Matrix s1 = Matrix::from_rows({{-z, zero}, {zero, one}});
    Matrix s2 = Matrix::from_rows({{one / zp1, -z / zp1}, {-(z * z + z + one) / zp1, -(z * z) / zp1}});
    return detail::named(3, {s1, s2}, "burau_diag", {{"z", z}});
}

/// Three-dimensional summand of the Burau tensor square, in the basis where
/// s1 is diag(1, -z, z^2).
inline Representation mu(const Scalar& z) {
    if (z.is_zero() || detail::is_value(z, -1)) throw DomainError("excluded parameter for mu: z must not be 0 or -1");
    Field fld = z.field();
    Scalar one = Scalar::one(fld);
    Scalar zero = Scalar::zero(fld);
    Scalar two = Scalar::constant(2, fld);
    Scalar zp1 = z + one;
    Scalar d = one / (zp1 * zp1);
    Scalar z2 = z * z;
    Scalar q = z2 + z + one;
    Matrix s1 = Matrix::from_rows({{one, zero, zero}, {zero, -z, zero}, {zero, zero, z2}});
    Matrix s2 = Matrix::from_rows({
        {z2 * z2 * d, z2 * d * q, d * q * q},
        {two * z2 * z * d, z * (z2 + one) * d, -(two * d * q)},
        {z2 * d, -(z * d), d},
    });
    return detail::named(3, {s1, s2}, "mu", {{"z", z}});
}

/// The same summand on the symmetric square basis; binomial coefficients appear.
inline Representation mu_pascal(const Scalar& z) {
    if (z.is_zero() || detail::is_value(z, -1))
        throw DomainError("excluded parameter for mu_pascal: z must not be 0 or -1");
    Field fld = z.field();
    Scalar one = Scalar::one(fld);
    Scalar zero = Scalar::zero(fld);
    Scalar two = Scalar::constant(2, fld);
    Scalar z2 = z * z;
    Matrix s1 = Matrix::from_rows({{z2, zero, zero}, {-z, -z, zero}, {one, two, one}});
    Matrix s2 = Matrix::from_rows({{one, two * z, z2}, {zero, -z, -z2}, {zero, zero, z2}});
    return detail::named(3, {s1, s2}, "mu_pascal", {{"z", z}});
}

namespace detail {
inline void check_compatible(const Representation& a, const Representation& b) {
    if (a.braid_index() != b.braid_index()) throw ShapeError("braid index mismatch");
    if (a.field() != b.field())
        throw ShapeError("field mismatch: " + std::string(field_name(a.field())) + " vs " +
                         std::string(field_name(b.field())));
}

inline Representation combined(int n, std::vector<Matrix> images, std::string family, std::string label) {
    return Representation::raw(n, std::move(images), RepMeta{std::move(family), {}, std::move(label)});
}
} // namespace detail

/// Generatorwise Kronecker product.
inline Representation tensor(const Representation& a, const Representation& b) {
    detail::check_compatible(a, b);
    std::vector<Matrix> images;
    for (std::size_t i = 0; i < a.images().size(); ++i) images.push_back(kronecker(a.image(i), b.image(i)));
    return detail::combined(a.braid_index(), std::move(images), "tensor",
                            "tensor(" + a.meta().label + "," + b.meta().label + ")");
}

/// Generatorwise block-diagonal sum.
inline Representation direct_sum(const Representation& a, const Representation& b) {
    detail::check_compatible(a, b);
    std::vector<Matrix> images;
    for (std::size_t i = 0; i < a.images().size(); ++i) images.push_back(block_diagonal(a.image(i), b.image(i)));
    return detail::combined(a.braid_index(), std::move(images), "direct_sum",
                            "direct_sum(" + a.meta().label + "," + b.meta().label + ")");
}

/// Twist by a one-dimensional representation.
inline Representation tensor_onedim(const Representation& r, const Representation& x) {
    detail::check_compatible(r, x);
    if (x.dimension() != 1) throw ShapeError("tensor_onedim needs a one-dimensional representation");
    std::vector<Matrix> images;
    for (std::size_t i = 0; i < r.images().size(); ++i) images.push_back(x.image(i)(0, 0) * r.image(i));
    return detail::combined(r.braid_index(), std::move(images), "tensor",
                            "tensor(" + r.meta().label + "," + x.meta().label + ")");
}

/// Contragredient: s_i -> (M_i^-1)^T.
inline Representation dual(const Representation& r) {
    std::vector<Matrix> images;
    for (const auto& m : r.images()) images.push_back(transpose(mat_inverse(m)));
    return detail::combined(r.braid_index(), std::move(images), "dual", "dual(" + r.meta().label + ")");
}

/// Change of basis: every image M becomes p^-1 M p.
inline Representation conjugate(const Matrix& p, const Representation& r) {
    std::vector<Matrix> images;
    Matrix pinv = mat_inverse(p);
    for (const auto& m : r.images()) images.push_back(pinv * m * p);
    RepMeta meta = r.meta();
    meta.family = "conjugate";
    meta.label = "conjugate(" + r.meta().label + ")";
    return Representation::raw(r.braid_index(), std::move(images), std::move(meta));
}

/// Entrywise substitution z -> point. Poles are reported with the entry.
inline Representation specialize(const Representation& r, const Scalar& point) {
    if (point.field() == Field::ratfunc) throw ShapeError("specialization point must be a constant");
    std::vector<Matrix> images;
    for (std::size_t k = 0; k < r.images().size(); ++k) {
        const Matrix& m = r.image(k);
        Matrix out(m.rows(), m.cols(), point.field());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                try {
                    out(i, j) = specialize_scalar(m(i, j), point);
                } catch (const DomainError&) {
                    throw DomainError("pole at specialization point " + to_string(point) + ": image of s" +
                                      std::to_string(k + 1) + " entry (" + std::to_string(i + 1) + "," +
                                      std::to_string(j + 1) + ")");
                }
            }
        images.push_back(std::move(out));
    }
    RepMeta meta = r.meta();
    for (auto& [key, value] : meta.params) value = specialize_scalar(value, point);
    meta.label = "specialize(" + r.meta().label + ", " + to_string(point) + ")";
    return Representation::raw(r.braid_index(), std::move(images), std::move(meta));
}

/// The standard representation of S3, obtained as Burau at z = 1; both
/// generator images are involutions.
inline Representation standard_s3() {
    Representation r = specialize(burau3(Scalar::z()), Scalar(1));
    const Matrix id = Matrix::identity(2, Field::rational);
    for (const auto& m : r.images())
        if (!(m * m == id)) throw std::logic_error("standard_s3 image is not an involution");
    RepMeta meta{"standard_s3", {}, "standard_s3"};
    return Representation::raw(3, r.images(), std::move(meta));
}

} // namespace braid3
