#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "braid3/representation.hpp"

namespace braid3 {

inline VerificationReport verify_braid_relations(const Representation& r) { return verify_relations(r.images()); }

/// Diagonal entries of a triangular matrix, without repeats, in order.
inline std::vector<Scalar> spectrum_of_triangular(const Matrix& m) {
    if (!m.is_square() || !(is_upper_triangular(m) || is_lower_triangular(m)))
        throw DomainError("spectrum requires triangular form; conjugate first");
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        bool seen = false;
        for (const auto& s : out) seen = seen || s == m(i, i);
        if (!seen) out.push_back(m(i, i));
    }
    return out;
}

enum class Side { right, left };

inline std::string_view side_name(Side s) { return s == Side::right ? "right" : "left"; }

/// A common eigenvector of all generator images (right: M v = l v; left:
/// v^T M = l v^T). The eigenvalue is shared by every generator.
struct InvariantLine {
    Scalar eigenvalue;
    Matrix vector;
    Side side = Side::right;
};

/// Common invariant lines with one shared eigenvalue per line. Candidate
/// eigenvalues come from the first triangular generator image. When a common
/// eigenspace has dimension > 1, one line per basis vector is returned.
inline std::vector<InvariantLine> common_invariant_lines(const Representation& r, Side side) {
    const Matrix* tri = nullptr;
    for (const auto& m : r.images())
        if (is_upper_triangular(m) || is_lower_triangular(m)) {
            tri = &m;
            break;
        }
    if (!tri) throw DomainError("spectrum requires triangular form; conjugate first");
    const std::size_t d = r.dimension();
    const Matrix id = Matrix::identity(d, r.field());
    std::vector<InvariantLine> lines;
    for (const Scalar& lambda : spectrum_of_triangular(*tri)) {
        std::vector<Matrix> blocks;
        for (const auto& m : r.images()) blocks.push_back((side == Side::right ? m : transpose(m)) - lambda * id);
        for (auto& v : kernel(vstack(blocks)).vectors) lines.push_back({lambda, std::move(v), side});
    }
    return lines;
}

struct IrreducibilityResult {
    bool irreducible = false;
    std::string reason;
    std::optional<InvariantLine> witness;
};

/// Complete for dimension <= 3: a proper invariant subspace of a 2- or 3-dim
/// representation is a right invariant line or the kernel of a left one.
inline IrreducibilityResult is_irreducible(const Representation& r) {
    const std::size_t d = r.dimension();
    if (d > 3) throw UndecidedError("undecided: only 1-dim invariant tests implemented");
    if (d == 1) return {true, "one-dimensional", std::nullopt};
    auto right = common_invariant_lines(r, Side::right);
    if (!right.empty()) return {false, "common eigenvector (1-dim subrepresentation)", right.front()};
    if (d == 3) {
        auto left = common_invariant_lines(r, Side::left);
        if (!left.empty()) return {false, "common left eigenvector (2-dim subrepresentation)", left.front()};
        return {true, "no invariant line and no invariant plane", std::nullopt};
    }
    return {true, "no common eigenvector", std::nullopt};
}

/// Result of splitting off a one-dimensional summand: conjugating the input
/// by basis_change gives block-diagonal images whose blocks are `blocks`.
struct DecompositionReport {
    Matrix basis_change;
    std::vector<Representation> blocks;
    std::vector<InvariantLine> witnesses;
};

namespace detail {
inline Scalar dot(const Matrix& u, const Matrix& v) {
    Scalar s = Scalar::zero(u.field());
    for (std::size_t i = 0; i < u.rows(); ++i) s += u(i, 0) * v(i, 0);
    return s;
}
} // namespace detail

/// Splits r = L (+) W where L is a common eigenline and W = ker(u) for a left
/// invariant line u with u(L) != 0.
inline DecompositionReport split_once(const Representation& r) {
    auto right = common_invariant_lines(r, Side::right);
    if (right.empty()) throw DecompositionError("no 1-dim invariant subspace");
    auto left = common_invariant_lines(r, Side::left);
    const std::size_t d = r.dimension();
    for (const auto& line : right) {
        for (const auto& functional : left) {
            if (!(functional.eigenvalue == line.eigenvalue)) continue;
            if (detail::dot(functional.vector, line.vector).is_zero()) continue;
            std::vector<Matrix> cols{line.vector};
            for (auto& w : kernel(transpose(functional.vector)).vectors) cols.push_back(std::move(w));
            Matrix q = hstack(cols);
            Matrix qinv = mat_inverse(q);
            std::vector<Matrix> one, rest;
            for (const auto& m : r.images()) {
                Matrix c = qinv * m * q;
                for (std::size_t k = 1; k < d; ++k)
                    if (!c(0, k).is_zero() || !c(k, 0).is_zero())
                        throw std::logic_error("split_once produced a non block-diagonal form");
                one.push_back(submatrix(c, 0, 0, 1, 1));
                rest.push_back(submatrix(c, 1, 1, d - 1, d - 1));
            }
            DecompositionReport report;
            report.basis_change = std::move(q);
            report.blocks.push_back(xi(line.eigenvalue, r.braid_index()));
            if (!(report.blocks[0].images() == one)) throw std::logic_error("split_once line block is not xi");
            report.blocks.push_back(Representation::raw(r.braid_index(), std::move(rest),
                                                        RepMeta{"block", {}, "complement(" + r.meta().label + ")"}));
            report.witnesses = {line, functional};
            return report;
        }
    }
    throw DecompositionError("no invariant complement found (possible non-semisimple extension)");
}

/// Basis of {M : M a(s_i) = b(s_i) M for all i}. Each M has b.dimension() rows
/// and a.dimension() columns.
inline std::vector<Matrix> intertwiners(const Representation& a, const Representation& b) {
    if (a.braid_index() != b.braid_index()) throw ShapeError("braid index mismatch");
    if (a.field() != b.field()) throw ShapeError("field mismatch");
    const std::size_t da = a.dimension(), db = b.dimension();
    const std::size_t unknowns = db * da;
    std::vector<Matrix> blocks;
    for (std::size_t g = 0; g < a.images().size(); ++g) {
        const Matrix& A = a.image(g);
        const Matrix& B = b.image(g);
        Matrix sys(unknowns, unknowns, a.field());
        // Row (p, j) of M A - B M = 0; unknown M(p, q) sits at p * da + q.
        for (std::size_t p = 0; p < db; ++p)
            for (std::size_t j = 0; j < da; ++j) {
                std::size_t row = p * da + j;
                for (std::size_t q = 0; q < da; ++q) sys(row, p * da + q) += A(q, j);
                for (std::size_t k = 0; k < db; ++k) sys(row, k * da + j) -= B(p, k);
            }
        blocks.push_back(std::move(sys));
    }
    std::vector<Matrix> out;
    for (const auto& v : kernel(vstack(blocks)).vectors) {
        Matrix m(db, da, a.field());
        for (std::size_t p = 0; p < db; ++p)
            for (std::size_t q = 0; q < da; ++q) m(p, q) = v(p * da + q, 0);
        out.push_back(std::move(m));
    }
    return out;
}

enum class Verdict { isomorphic, not_isomorphic, undecided };

inline std::string_view verdict_name(Verdict v) {
    switch (v) {
    case Verdict::isomorphic: return "isomorphic";
    case Verdict::not_isomorphic: return "not_isomorphic";
    case Verdict::undecided: return "undecided";
    }
    return "?";
}

/// `conjugator` C is invertible with C a(s_i) = b(s_i) C, i.e.
/// conjugate(C, b(s_i)) = a(s_i).
struct IsomorphismResult {
    Verdict verdict = Verdict::not_isomorphic;
    std::optional<Matrix> conjugator;
    std::size_t intertwiner_dimension = 0;
};

struct IsomorphismOptions {
    std::uint64_t seed = 1;
    int trials = 32;
};

inline IsomorphismResult is_isomorphic(const Representation& a, const Representation& b,
                                       IsomorphismOptions opts = {}) {
    IsomorphismResult res;
    if (a.dimension() != b.dimension() || a.braid_index() != b.braid_index()) return res;
    auto basis = intertwiners(a, b);
    res.intertwiner_dimension = basis.size();
    if (basis.empty()) return res;
    for (const auto& m : basis)
        if (is_invertible(m)) {
            res.verdict = Verdict::isomorphic;
            res.conjugator = m;
            return res;
        }
    if (basis.size() == 1) return res;
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> coeff(-10, 10);
    for (int t = 0; t < opts.trials; ++t) {
        Matrix m(basis[0].rows(), basis[0].cols(), basis[0].field());
        for (const auto& b_i : basis) m = m + Scalar::constant(coeff(rng), b_i.field()) * b_i;
        if (is_invertible(m)) {
            res.verdict = Verdict::isomorphic;
            res.conjugator = std::move(m);
            return res;
        }
    }
    res.verdict = Verdict::undecided;
    return res;
}

} // namespace braid3
