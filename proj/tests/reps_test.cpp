#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace braid3;
using namespace braid3::testgen;

namespace {

constexpr int kIterations = 40;

Scalar q(long p, long d = 1) { return Scalar(BigRational(p, d)); }

bool relations_hold(const Representation& r) { return verify_braid_relations(r).overall; }

} // namespace

TEST(Constructors, BurauImages) {
    Representation b = burau3(Scalar::z());
    EXPECT_EQ(b.image(0), zmatrix({{"-z", "0"}, {"1", "1"}}));
    EXPECT_EQ(b.image(1), zmatrix({{"1", "z"}, {"0", "-z"}}));
    EXPECT_EQ(b.dimension(), 2u);
    EXPECT_EQ(b.braid_index(), 3);
    EXPECT_EQ(b.field(), Field::ratfunc);
}

TEST(Constructors, DiagonalFamilyAtTwo) {
    Representation r = theorem1_i(q(2), q(1));
    EXPECT_EQ(r.image(0), Matrix::from_rows({{q(-2), q(0)}, {q(0), q(1)}}));
    EXPECT_EQ(r.image(1), Matrix::from_rows({{q(1, 3), q(1)}, {q(14, 9), q(-4, 3)}}));
}

TEST(Constructors, JordanFamilyAtOne) {
    Representation r = theorem1_ii(q(1), q(0));
    EXPECT_EQ(r.image(0), Matrix::from_rows({{q(1), q(1)}, {q(0), q(1)}}));
    EXPECT_EQ(r.image(1), Matrix::from_rows({{q(0), q(1)}, {q(-1), q(2)}}));
}

TEST(Constructors, DiagonalFamilyOffDiagonalProduct) {
    Representation r = theorem1_i(Scalar::z(), zs("z^3+5"));
    EXPECT_EQ(r.image(1)(0, 1) * r.image(1)(1, 0), zs("z*(z^2+z+1)/(z+1)^2"));
}

TEST(Constructors, ExcludedParameters) {
    EXPECT_THROW(theorem1_i(q(0), q(1)), DomainError);
    EXPECT_THROW(theorem1_i(q(-1), q(1)), DomainError);
    try {
        theorem1_i(Scalar::z(), Scalar::zero(Field::ratfunc));
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("fg is forced"), std::string::npos);
    }
    EXPECT_THROW(theorem1_ii(q(0), q(1)), DomainError);
    EXPECT_THROW(burau3(q(0)), DomainError);
    EXPECT_THROW(burau3_diag(q(-1)), DomainError);
    EXPECT_THROW(mu(q(-1)), DomainError);
    EXPECT_THROW(mu_pascal(q(0)), DomainError);
    EXPECT_THROW(xi(q(0)), DomainError);
}

TEST(Constructors, DiagonalizedBurauAcceptsOne) {
    Representation r = burau3_diag(q(1));
    EXPECT_EQ(r.image(0), Matrix::from_rows({{q(-1), q(0)}, {q(0), q(1)}}));
    EXPECT_EQ(r.image(1), Matrix::from_rows({{q(1, 2), q(-1, 2)}, {q(-3, 2), q(-1, 2)}}));
}

TEST(Constructors, EveryFamilySatisfiesRelationsAtRandomPoints) {
    std::mt19937_64 rng(21);
    for (int i = 0; i < kIterations; ++i) {
        Scalar z(rand_nonzero_q(rng));
        if (z == q(-1)) continue;
        Scalar s(rand_nonzero_q(rng));
        EXPECT_TRUE(relations_hold(burau3(z)));
        EXPECT_TRUE(relations_hold(burau3_diag(z)));
        EXPECT_TRUE(relations_hold(theorem1_i(z, s)));
        EXPECT_TRUE(relations_hold(theorem1_ii(z, s)));
        EXPECT_TRUE(relations_hold(mu(z)));
        EXPECT_TRUE(relations_hold(mu_pascal(z)));
    }
}

TEST(Constructors, OmegaField) {
    Representation r = burau3(Scalar::omega());
    EXPECT_EQ(r.field(), Field::omega);
    EXPECT_TRUE(relations_hold(r));
    EXPECT_TRUE(relations_hold(theorem1_ii(Scalar::omega(), q(3))));
}

TEST(Constructors, RawRejectsBadInput) {
    Matrix id = Matrix::identity(2, Field::rational);
    EXPECT_THROW(Representation::raw(3, {id}), ShapeError);
    EXPECT_THROW(Representation::raw(3, {id, Matrix::identity(3, Field::rational)}), ShapeError);
    EXPECT_THROW(Representation::raw(3, {id, Matrix(2, 2, Field::rational)}), DomainError);
    EXPECT_THROW(Representation::raw(3, {id, Matrix::identity(2, Field::omega)}), ShapeError);
}

TEST(Word, InverseLettersCancel) {
    Representation b = burau3(Scalar::z());
    EXPECT_EQ(b.word({1, 2, -2, -1}), Matrix::identity(2, Field::ratfunc));
    EXPECT_EQ(b.word({1, 2, 1}), b.word({2, 1, 2}));
}

TEST(Combinators, TensorSquareOfBurau) {
    Representation t = tensor(burau3(Scalar::z()), burau3(Scalar::z()));
    EXPECT_EQ(t.image(0), golden::tensor_s1());
    EXPECT_EQ(t.image(1), golden::tensor_s2());
    EXPECT_TRUE(relations_hold(t));
}

TEST(Combinators, DirectSumAndTwist) {
    Representation b = burau3(Scalar::z());
    Representation s = direct_sum(xi(Scalar::z()), b);
    EXPECT_EQ(s.dimension(), 3u);
    EXPECT_TRUE(relations_hold(s));
    Representation tw = tensor_onedim(b, xi(zs("-1")));
    EXPECT_EQ(tw.image(0), -b.image(0));
    EXPECT_THROW(tensor_onedim(b, b), ShapeError);
    EXPECT_THROW(tensor(b, burau3(Scalar::omega())), ShapeError);
}

TEST(Combinators, DualOfLineInvertsParameter) {
    EXPECT_EQ(dual(xi(Scalar::z())), xi(zs("1/z")));
}

TEST(Combinators, DualIsInvolutive) {
    for (const auto& r : {burau3(Scalar::z()), mu(Scalar::z()), theorem1_ii(Scalar::z(), zs("z+2"))}) {
        EXPECT_EQ(dual(dual(r)), r);
        EXPECT_TRUE(relations_hold(dual(r)));
    }
}

TEST(Combinators, ConjugatingBurauGivesDiagonalForm) {
    Representation c = conjugate(burau_diagonalizer(Scalar::z()), burau3(Scalar::z()));
    EXPECT_EQ(c, burau3_diag(Scalar::z()));
}

TEST(Specialize, BurauAtThreeHalves) {
    Representation r = specialize(burau3(Scalar::z()), q(3, 2));
    EXPECT_EQ(r.field(), Field::rational);
    EXPECT_EQ(r.image(0), Matrix::from_rows({{q(-3, 2), q(0)}, {q(1), q(1)}}));
}

TEST(Specialize, PoleNamesTheEntry) {
    try {
        specialize(mu(Scalar::z()), q(-1));
        FAIL();
    } catch (const DomainError& e) {
        std::string msg = e.what();
        EXPECT_NE(msg.find("pole"), std::string::npos);
        EXPECT_NE(msg.find("s2"), std::string::npos);
    }
}

TEST(Specialize, AtOmegaMatchesDirectConstruction) {
    EXPECT_EQ(specialize(burau3(Scalar::z()), Scalar::omega()).images(), burau3(Scalar::omega()).images());
    EXPECT_EQ(specialize(mu(Scalar::z()), Scalar::omega()).images(), mu(Scalar::omega()).images());
}

TEST(Specialize, CommutesWithTensor) {
    std::mt19937_64 rng(22);
    Representation b = burau3(Scalar::z());
    Representation m = mu(Scalar::z());
    for (int i = 0; i < kIterations; ++i) {
        Scalar c(rand_nonzero_q(rng));
        if (c == q(-1)) continue;
        EXPECT_EQ(specialize(tensor(b, m), c).images(), tensor(specialize(b, c), specialize(m, c)).images());
    }
}

TEST(Specialize, CommutesWithConjugation) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < kIterations; ++i) {
        Scalar c(rand_nonzero_q(rng));
        if (c == q(-1)) continue;
        Matrix p = burau_diagonalizer(Scalar::z());
        Representation lhs = specialize(conjugate(p, burau3(Scalar::z())), c);
        Representation rhs = conjugate(burau_diagonalizer(c), burau3(c));
        EXPECT_EQ(lhs.images(), rhs.images());
    }
}

TEST(Specialize, FloatMatchesExact) {
    Representation exact = specialize(mu(Scalar::z()), q(2, 3));
    Representation flt = specialize(mu(Scalar::z()), Scalar(Complex(2.0 / 3.0, 0)));
    for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                EXPECT_NEAR(std::abs(flt.image(k)(i, j).get<Complex>() - exact.image(k)(i, j).to_complex()), 0.0,
                            1e-12);
}

TEST(DiagonalFamily, RescalingTheOffDiagonalIsAConjugation) {
    std::mt19937_64 rng(24);
    for (int i = 0; i < kIterations; ++i) {
        Scalar t(rand_nonzero_q(rng));
        Scalar f(rand_nonzero_q(rng));
        Matrix d = Matrix::diagonal({Scalar::one(Field::ratfunc), promote(t, Field::ratfunc)});
        Representation lhs = conjugate(d, theorem1_i(Scalar::z(), promote(f, Field::ratfunc)));
        EXPECT_EQ(lhs.images(), theorem1_i(Scalar::z(), promote(t * f, Field::ratfunc)).images());
    }
}

TEST(StandardS3, InvolutionsSatisfyingBraidRelation) {
    Representation s = standard_s3();
    EXPECT_EQ(s.field(), Field::rational);
    for (const auto& m : s.images()) EXPECT_EQ(m * m, Matrix::identity(2, Field::rational));
    EXPECT_TRUE(relations_hold(s));
}
