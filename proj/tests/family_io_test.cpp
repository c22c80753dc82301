#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace braid3;
using namespace braid3::testgen;

TEST(FamilyGrammar, LeafWithNamedParameter) {
    FamilySpec s = parse_family("thm1_i(z; f=1)");
    EXPECT_EQ(s.family, "thm1_i");
    ASSERT_TRUE(s.param.has_value());
    EXPECT_EQ(*s.param, Scalar::z());
    ASSERT_EQ(s.named.size(), 1u);
    EXPECT_EQ(s.named[0].first, "f");
    EXPECT_EQ(s.named[0].second, Scalar(1));
}

TEST(FamilyGrammar, NestedCombinators) {
    FamilySpec s = parse_family("direct_sum(xi(-z), dual(mu(z)))");
    EXPECT_EQ(s.family, "direct_sum");
    ASSERT_EQ(s.children.size(), 2u);
    EXPECT_EQ(s.children[1].family, "dual");
    EXPECT_EQ(s.children[1].children[0].family, "mu");
    EXPECT_EQ(build(s).dimension(), 4u);
}

TEST(FamilyGrammar, ErrorPositions) {
    try {
        parse_family("burau(z");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 7u);
    }
    try {
        parse_family("mu(z+*1)");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 5u);
    }
    EXPECT_THROW(parse_family("nosuch(z)"), ParseError);
    EXPECT_THROW(parse_family("burau(z) x"), ParseError);
}

TEST(FamilyGrammar, BuildErrors) {
    EXPECT_THROW(build("thm1_i(z)"), DomainError);
    EXPECT_THROW(build("burau(z; f=1)"), DomainError);
    EXPECT_THROW(build("burau(0)"), DomainError);
    EXPECT_THROW(build("tensor(burau(z), burau(omega))"), ShapeError);
}

TEST(FamilyGrammar, SecondaryParameterFollowsZ) {
    Representation r = build("thm1_i(2; f=z+3)");
    EXPECT_EQ(r, theorem1_i(Scalar(2), Scalar(5)));
}

TEST(FamilyGrammar, PrintParseRoundTripForEveryFamily) {
    const std::vector<std::string> specs = {
        "xi(z)",
        "xi(-z; n=4)",
        "thm1_i(z; f=1)",
        "thm1_i(5/7; f=-2)",
        "thm1_ii(z; e=0)",
        "thm1_ii(omega; e=1+omega)",
        "burau(z)",
        "burau_diag(z)",
        "mu(z)",
        "mu_pascal(3)",
        "standard_s3",
        "tensor(burau(z),burau(z))",
        "direct_sum(xi(-z),mu(z))",
        "dual(mu(z/(z+1)))",
    };
    for (const auto& text : specs) {
        FamilySpec s = parse_family(text);
        EXPECT_EQ(parse_family(to_string(s)), s) << text;
        EXPECT_EQ(build(parse_family(to_string(s))), build(s)) << text;
    }
}

TEST(Json, ScalarForms) {
    EXPECT_EQ(to_json(Scalar(BigRational(-3, 4))), "-3/4");
    json r = to_json(zs("1/(z+1)"));
    EXPECT_EQ(r["num"], json::array({"1"}));
    EXPECT_EQ(r["den"], json::array({"1", "1"}));
    json w = to_json(Scalar::omega());
    EXPECT_EQ(w["a"], "0");
    EXPECT_EQ(w["b"], "1");
}

TEST(Json, MatrixRoundTrip) {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 30; ++i) {
        Matrix m = rand_zmatrix(rng, 3);
        m(0, 0) = Scalar(rand_ratfunc(rng));
        EXPECT_EQ(matrix_from_json(json::parse(to_json(m).dump())), m);
    }
    Matrix w = mu(Scalar::omega()).image(1);
    EXPECT_EQ(matrix_from_json(to_json(w)), w);
    Matrix c = specialize(mu(Scalar::z()), Scalar(Complex(0.3, 0.0))).image(1);
    EXPECT_EQ(matrix_from_json(to_json(c)), c);
}

TEST(Json, LooseEntriesAreAccepted) {
    json j = {{"entries", {{"-z", 0}, {1, 1}}}};
    EXPECT_EQ(matrix_from_json(j), burau3(Scalar::z()).image(0));
    json bad = {{"rows", 3}, {"entries", {{1, 0}, {0, 1}}}};
    EXPECT_THROW(matrix_from_json(bad), ShapeError);
}

TEST(Json, RepresentationRoundTrip) {
    for (const auto& text : {"burau(z)", "mu(omega)", "thm1_ii(z; e=z)", "tensor(burau(z),burau(z))"}) {
        Representation r = build(text);
        Representation back = representation_from_json(json::parse(to_json(r).dump()));
        EXPECT_EQ(back, r) << text;
        EXPECT_EQ(back.meta().label, r.meta().label);
        EXPECT_EQ(back.meta().family, r.meta().family);
    }
}

TEST(Latex, BurauImages) {
    std::string out = latex(burau3(Scalar::z()));
    EXPECT_NE(out.find("\\sigma_{1}\\rightarrow"), std::string::npos);
    EXPECT_NE(out.find("-z & 0 \\\\\n1 & 1"), std::string::npos);
    EXPECT_NE(out.find("\\begin{array}{cc}"), std::string::npos);
}

TEST(Latex, Fractions) {
    EXPECT_EQ(latex(zs("-z/(z+1)")), "-\\frac{z}{z+1}");
    EXPECT_EQ(latex(zs("1/(z+1)^2")), "\\frac{1}{z^{2}+2z+1}");
    EXPECT_EQ(latex(Scalar(BigRational(-1, 2))), "-\\frac{1}{2}");
    EXPECT_EQ(latex(Scalar(OmegaRational(-1, -1))), "-1-\\omega ");
}

TEST(Text, AlignedColumns) {
    std::string out = text(burau3(Scalar::z()).image(0));
    EXPECT_EQ(out, "  [ -z  0 ]\n  [  1  1 ]\n");
}
