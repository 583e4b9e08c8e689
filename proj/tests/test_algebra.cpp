#include <gtest/gtest.h>

#include "affstr/algebra.hpp"
#include "affstr/error.hpp"
#include "support.hpp"

using namespace affstr;
using affstr::testing::labels;

namespace {

AffineWeight alpha(const AlgebraSpec& spec, std::size_t i)
{
    std::vector<Integer> c(spec.rank(), Integer(0));
    c[i] = 1;
    return make_weight(spec, root_labels(spec, c), 0, 0);
}

} // namespace

TEST(Algebra, SimpleRootNormA2)
{
    const auto a2 = AlgebraSpec::preset("A2");
    EXPECT_EQ(inner_product(a2, alpha(a2, 0), alpha(a2, 0)), Rational(2));
    EXPECT_EQ(inner_product(a2, alpha(a2, 0), alpha(a2, 1)), Rational(-1));
}

TEST(Algebra, FundamentalWeightPairingA2)
{
    // Hand inverse of [[2,-1],[-1,2]] is (1/3)[[2,1],[1,2]]; d_j = 1.
    const auto a2 = AlgebraSpec::preset("A2");
    const auto w1 = make_weight(a2, {1, 0}, 0);
    const auto w2 = make_weight(a2, {0, 1}, 0);
    EXPECT_EQ(inner_product(a2, w1, w2), Rational(1, 3));
    EXPECT_EQ(inner_product(a2, w1, w1), Rational(2, 3));
}

TEST(Algebra, ZeroHasZeroNorm)
{
    const auto a2 = AlgebraSpec::preset("A2");
    const auto z = make_weight(a2, {0, 0}, 0);
    EXPECT_EQ(inner_product(a2, z, z), Rational(0));
}

TEST(Algebra, LevelAndGradePair)
{
    // (Λ_0, δ) = 1 and (δ, δ) = 0.
    const auto a2 = AlgebraSpec::preset("A2");
    const auto l0 = make_weight(a2, {0, 0}, 1, 0);
    const auto d = make_weight(a2, {0, 0}, 0, 1);
    EXPECT_EQ(inner_product(a2, l0, d), Rational(1));
    EXPECT_EQ(inner_product(a2, d, d), Rational(0));
}

TEST(Algebra, WeylVector)
{
    for (auto [name, h] : {std::pair{"A1", 2}, std::pair{"A2", 3}, std::pair{"A3", 4}}) {
        const auto spec = AlgebraSpec::preset(name);
        const auto rho = weyl_vector(spec);
        EXPECT_EQ(rho.level, Integer(h)) << name;
        EXPECT_EQ(rho.grade, Integer(0)) << name;
        for (const auto& l : affine_labels(spec, rho)) {
            EXPECT_EQ(l, Rational(1)) << name;
        }
    }
}

TEST(Algebra, RootBasis)
{
    const auto a2 = AlgebraSpec::preset("A2");
    EXPECT_EQ(to_root_basis(a2, make_weight(a2, {1, 0}, 1)), (std::vector<Rational>{Rational(2, 3), Rational(1, 3)}));
    EXPECT_EQ(to_root_basis(a2, make_weight(a2, {1, 1}, 2)), labels({1, 1}));
    EXPECT_EQ(to_root_basis(a2, make_weight(a2, {0, 0}, 1)), labels({0, 0}));
}

TEST(Algebra, RootBasisRoundTrip)
{
    const auto a3 = AlgebraSpec::preset("A3");
    for (long a = 0; a < 3; ++a) {
        for (long b = 0; b < 3; ++b) {
            const auto w = make_weight(a3, {a, b, 2 - a}, 3, -b);
            const auto c = to_root_basis(a3, w);
            EXPECT_EQ(from_root_basis(a3, c, w.level, w.grade), w);
        }
    }
}

TEST(Algebra, MarksAndComarksPresets)
{
    const auto a3 = AlgebraSpec::preset("A3");
    EXPECT_EQ(a3.marks(), (std::vector<Integer>{1, 1, 1}));
    EXPECT_EQ(a3.dual_coxeter(), Integer(4));
    EXPECT_EQ(a3.positive_roots().size(), 6u);
}

TEST(Algebra, NonSimplyLacedNormalization)
{
    // B2 with α1 long: θ = α1 + 2α2, a = (1,2), a∨ = (1,1), h∨ = 3.
    const auto b2 = AlgebraSpec::create("B2", IntMatrix{{2, -1}, {-2, 2}}, labels({2, 1}));
    EXPECT_EQ(b2.marks(), (std::vector<Integer>{1, 2}));
    EXPECT_EQ(b2.comarks(), (std::vector<Integer>{1, 1}));
    EXPECT_EQ(b2.dual_coxeter(), Integer(3));
    EXPECT_EQ(b2.symmetrizer(), (std::vector<Rational>{Rational(1), Rational(1, 2)}));

    // G2 with α1 long: θ = 2α1 + 3α2, a∨ = (2,1), h∨ = 4.
    const auto g2 = AlgebraSpec::create("G2", IntMatrix{{2, -1}, {-3, 2}}, labels({3, 1}));
    EXPECT_EQ(g2.marks(), (std::vector<Integer>{2, 3}));
    EXPECT_EQ(g2.comarks(), (std::vector<Integer>{2, 1}));
    EXPECT_EQ(g2.dual_coxeter(), Integer(4));
    EXPECT_EQ(g2.positive_roots().size(), 6u);
}

TEST(Algebra, RejectsBadCartan)
{
    EXPECT_THROW(AlgebraSpec::create("X", IntMatrix{{2, -1}, {-1, 3}}, labels({1, 1})), ConfigError);
    EXPECT_THROW(AlgebraSpec::create("X", IntMatrix{{2, -2}, {-2, 2}}, labels({1, 1})), ConfigError);
    EXPECT_THROW(AlgebraSpec::preset("E9"), ConfigError);
}

TEST(Algebra, DominanceUsesZerothLabel)
{
    const auto a2 = AlgebraSpec::preset("A2");
    EXPECT_TRUE(is_dominant(a2, make_weight(a2, {1, 0}, 1)));
    EXPECT_FALSE(is_dominant(a2, make_weight(a2, {1, 1}, 1)));
    EXPECT_EQ(zeroth_label(a2, make_weight(a2, {1, 1}, 1)), Rational(-1));
}
