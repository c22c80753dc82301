#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace braid3;
using namespace braid3::testgen;

namespace {

Scalar q(long p, long d = 1) { return Scalar(BigRational(p, d)); }

// Checks M v = l v (right) or v^T M = l v^T (left) for every image.
bool is_common_eigenvector(const Representation& r, const Matrix& v, const Scalar& l, Side side) {
    for (const auto& m : r.images()) {
        Matrix lhs = side == Side::right ? m * v : transpose(transpose(v) * m);
        if (!(lhs == l * v)) return false;
    }
    return true;
}

bool proportional(const Matrix& a, const Matrix& b) {
    return rank(hstack({a, b})) == 1;
}

} // namespace

TEST(Verify, FamiliesHold) {
    auto report = verify_braid_relations(burau3(Scalar::z()));
    EXPECT_TRUE(report.overall);
    ASSERT_EQ(report.relations.size(), 1u);
    EXPECT_EQ(report.relations[0].lhs, "s2*s1*s2");
    EXPECT_EQ(report.relations[0].rhs, "s1*s2*s1");
}

TEST(Verify, PerturbedEntryFails) {
    Representation b = burau3(Scalar::z());
    Matrix s2 = b.image(1);
    s2(0, 1) = s2(0, 1) + Scalar::one(Field::ratfunc);
    Representation bad = Representation::raw(3, {b.image(0), s2});
    EXPECT_FALSE(verify_braid_relations(bad).overall);
}

TEST(Verify, FarCommutationForLargerBraidGroups) {
    Representation x = xi(Scalar::z(), 5);
    auto report = verify_braid_relations(x);
    EXPECT_TRUE(report.overall);
    EXPECT_EQ(report.relations.size(), 3u + 3u);
}

TEST(Spectrum, DiagonalAndTriangular) {
    auto s = spectrum_of_triangular(zmatrix({{"-z", "0"}, {"0", "1"}}));
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(s[0], zs("-z"));
    EXPECT_EQ(s[1], zs("1"));
    EXPECT_EQ(spectrum_of_triangular(golden::tensor_s2()).size(), 3u);
}

TEST(Spectrum, NonTriangularThrows) {
    try {
        spectrum_of_triangular(zmatrix({{"0", "1"}, {"1", "0"}}));
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_EQ(std::string(e.what()), "spectrum requires triangular form; conjugate first");
    }
}

TEST(InvariantLines, BurauHasNone) {
    EXPECT_TRUE(common_invariant_lines(burau3(Scalar::z()), Side::right).empty());
    EXPECT_TRUE(common_invariant_lines(burau3(Scalar::z()), Side::left).empty());
}

TEST(InvariantLines, TensorSquareHasOneEachSide) {
    Representation t = tensor(burau3(Scalar::z()), burau3(Scalar::z()));
    auto right = common_invariant_lines(t, Side::right);
    auto left = common_invariant_lines(t, Side::left);
    ASSERT_EQ(right.size(), 1u);
    ASSERT_EQ(left.size(), 1u);
    EXPECT_EQ(right[0].eigenvalue, zs("-z"));
    EXPECT_TRUE(is_common_eigenvector(t, right[0].vector, right[0].eigenvalue, Side::right));
    EXPECT_TRUE(is_common_eigenvector(t, left[0].vector, left[0].eigenvalue, Side::left));
    // The antisymmetric vector e12 - e21.
    EXPECT_TRUE(proportional(right[0].vector, zmatrix({{"0"}, {"1"}, {"-1"}, {"0"}})));
}

TEST(InvariantLines, DiagonalFamilyAtOmega) {
    Representation r = theorem1_i(Scalar::omega(), Scalar(OmegaRational(1)));
    // Hand check: g vanishes, so e1 is fixed up to the scalar -omega.
    EXPECT_TRUE(r.image(1)(1, 0).is_zero());
    Matrix e1 = Matrix::column({Scalar(OmegaRational(1)), Scalar(OmegaRational(0))});
    EXPECT_TRUE(is_common_eigenvector(r, e1, -Scalar::omega(), Side::right));
    auto lines = common_invariant_lines(r, Side::right);
    ASSERT_FALSE(lines.empty());
    EXPECT_EQ(lines[0].eigenvalue, -Scalar::omega());
}

TEST(Irreducible, Examples) {
    EXPECT_TRUE(is_irreducible(burau3(Scalar::z())).irreducible);
    EXPECT_TRUE(is_irreducible(mu(Scalar::z())).irreducible);
    EXPECT_TRUE(is_irreducible(mu_pascal(Scalar::z())).irreducible);
    EXPECT_TRUE(is_irreducible(theorem1_i(Scalar::z(), zs("1"))).irreducible);
    EXPECT_FALSE(is_irreducible(theorem1_i(Scalar::omega(), Scalar(OmegaRational(1)))).irreducible);
    EXPECT_FALSE(is_irreducible(mu(q(1))).irreducible);
    EXPECT_FALSE(is_irreducible(burau3(Scalar::omega())).irreducible);
    EXPECT_TRUE(is_irreducible(xi(Scalar::z())).irreducible);
}

TEST(Irreducible, WitnessIsGenuine) {
    Representation r = mu(Scalar::omega());
    auto res = is_irreducible(r);
    ASSERT_FALSE(res.irreducible);
    ASSERT_TRUE(res.witness.has_value());
    EXPECT_TRUE(is_common_eigenvector(r, res.witness->vector, res.witness->eigenvalue, res.witness->side));
}

TEST(Irreducible, LargeDimensionIsUndecided) {
    Representation t = tensor(burau3(Scalar::z()), burau3(Scalar::z()));
    EXPECT_THROW(is_irreducible(t), UndecidedError);
}

TEST(Irreducible, JordanFamilyAtRandomPoints) {
    // s1 has the single eigenline e1 and the (1,0) entry of s2 is -1/z.
    std::mt19937_64 rng(31);
    for (int i = 0; i < 40; ++i) {
        Scalar z(rand_nonzero_q(rng)), e(rand_q(rng));
        Representation r = theorem1_ii(z, e);
        EXPECT_TRUE(is_irreducible(r).irreducible);
    }
}

TEST(Split, TensorSquareOfBurau) {
    Representation t = tensor(burau3(Scalar::z()), burau3(Scalar::z()));
    DecompositionReport d = split_once(t);
    ASSERT_EQ(d.blocks.size(), 2u);
    EXPECT_EQ(d.blocks[0], xi(zs("-z")));
    EXPECT_EQ(d.blocks[1].dimension(), 3u);
    EXPECT_TRUE(verify_braid_relations(d.blocks[1]).overall);
    Representation back = conjugate(d.basis_change, t);
    for (std::size_t k = 0; k < 2; ++k)
        EXPECT_EQ(back.image(k), block_diagonal(d.blocks[0].image(k), d.blocks[1].image(k)));
    EXPECT_TRUE(is_isomorphic(d.blocks[1], mu(Scalar::z())).verdict == Verdict::isomorphic);
}

TEST(Split, LeftWitnessMatchesReferenceFunctional) {
    Representation t = tensor(burau3(Scalar::z()), burau3(Scalar::z()));
    DecompositionReport d = split_once(t);
    ASSERT_EQ(d.witnesses.size(), 2u);
    const InvariantLine& left = d.witnesses[1];
    EXPECT_EQ(left.side, Side::left);
    // (0, z+1, 2, 0) in the basis that diagonalizes s1 (x) s1.
    Matrix u_p = zmatrix({{"0", "z+1", "2", "0"}});
    Matrix u = transpose(u_p * mat_inverse(golden::tensor_basis()));
    EXPECT_TRUE(proportional(u, left.vector));
    EXPECT_TRUE(is_common_eigenvector(t, u, zs("-z"), Side::left));
}

TEST(Split, IrreducibleFails) {
    try {
        split_once(burau3(Scalar::z()));
        FAIL();
    } catch (const DecompositionError& e) {
        EXPECT_EQ(std::string(e.what()), "no 1-dim invariant subspace");
    }
}

TEST(Split, NonSemisimpleExtensionFails) {
    // s1, s2 both unipotent upper triangular: invariant line without complement.
    Matrix s1 = Matrix::from_rows({{q(1), q(1)}, {q(0), q(1)}});
    Representation r = Representation::raw(3, {s1, s1});
    try {
        split_once(r);
        FAIL();
    } catch (const DecompositionError& e) {
        EXPECT_NE(std::string(e.what()).find("complement"), std::string::npos);
    }
}

TEST(Intertwiners, SchurForBurau) {
    Representation b = burau3(Scalar::z());
    auto basis = intertwiners(b, b);
    ASSERT_EQ(basis.size(), 1u);
    EXPECT_EQ(basis[0], Matrix::identity(2, Field::ratfunc));
}

TEST(Intertwiners, BurauToDiagonalForm) {
    auto basis = intertwiners(burau3(Scalar::z()), burau3_diag(Scalar::z()));
    ASSERT_EQ(basis.size(), 1u);
    // C b = bd C with bd = P^-1 b P, so C is P^-1 up to scale.
    Matrix pinv = mat_inverse(burau_diagonalizer(Scalar::z()));
    Scalar scale = basis[0](0, 0) / pinv(0, 0);
    EXPECT_EQ(basis[0], scale * pinv);
}

TEST(Intertwiners, DistinctLinesHaveNone) {
    EXPECT_TRUE(intertwiners(xi(Scalar::z()), xi(zs("z^2"))).empty());
    EXPECT_EQ(intertwiners(xi(Scalar::z()), xi(Scalar::z())).size(), 1u);
}

TEST(Intertwiners, SolveTheDefiningEquation) {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 20; ++i) {
        Scalar z(rand_nonzero_q(rng));
        if (z == q(-1)) continue;
        Representation a = direct_sum(xi(-z), mu_pascal(z));
        Representation b = tensor(burau3(z), burau3(z));
        for (const auto& m : intertwiners(a, b))
            for (std::size_t k = 0; k < 2; ++k) EXPECT_EQ(m * a.image(k), b.image(k) * m);
    }
}

TEST(Isomorphic, RescaledDiagonalFamily) {
    auto res = is_isomorphic(theorem1_i(q(2), q(1)), theorem1_i(q(2), q(5)));
    ASSERT_EQ(res.verdict, Verdict::isomorphic);
    ASSERT_TRUE(res.conjugator.has_value());
    EXPECT_EQ(*res.conjugator, Matrix::diagonal({q(1), q(1, 5)}));
}

TEST(Isomorphic, TensorSquareIsLinePlusPascal) {
    Representation t = tensor(burau3(Scalar::z()), burau3(Scalar::z()));
    Representation s = direct_sum(xi(zs("-z")), mu(Scalar::z()));
    auto res = is_isomorphic(s, t);
    ASSERT_EQ(res.verdict, Verdict::isomorphic);
    for (std::size_t k = 0; k < 2; ++k) EXPECT_EQ(*res.conjugator * s.image(k), t.image(k) * *res.conjugator);
}

TEST(Isomorphic, DifferentSpectraAreNot) {
    EXPECT_EQ(is_isomorphic(burau3(Scalar::z()), burau3_diag(zs("z^2"))).verdict, Verdict::not_isomorphic);
    EXPECT_EQ(is_isomorphic(burau3(Scalar::z()), mu(Scalar::z())).verdict, Verdict::not_isomorphic);
}

TEST(Isomorphic, RandomBasisChange) {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 10; ++i) {
        Matrix p = rand_invertible_zmatrix(rng, 3);
        Representation r = mu(Scalar::z());
        auto res = is_isomorphic(r, conjugate(p, r));
        ASSERT_EQ(res.verdict, Verdict::isomorphic);
        EXPECT_EQ(res.intertwiner_dimension, 1u);
    }
}
