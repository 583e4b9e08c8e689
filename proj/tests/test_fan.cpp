#include <gtest/gtest.h>

#include "affstr/fan.hpp"
#include "support.hpp"

using namespace affstr;
using affstr::testing::as_map;
using affstr::testing::denominator_fan;
using affstr::testing::labels;

namespace {

FanVector fv(std::vector<Integer> root, long grade, int mult)
{
    return FanVector{std::move(root), grade, mult};
}

} // namespace

TEST(Fan, A2GradeZero)
{
    const auto fan = build_fan(AlgebraSpec::preset("A2"), 0);
    std::vector<FanVector> expected{
        fv({0, 1}, 0, 1), fv({1, 0}, 0, 1), fv({1, 2}, 0, -1), fv({2, 1}, 0, -1), fv({2, 2}, 0, 1)};
    std::sort(expected.begin(), expected.end(), fan_order);
    EXPECT_EQ(fan.vectors, expected);
}

TEST(Fan, A2ThroughGradeTwo)
{
    const auto fan = build_fan(AlgebraSpec::preset("A2"), 2);
    EXPECT_EQ(fan.vectors.size(), 23u);
    const auto m = as_map(fan);
    EXPECT_EQ(m.at({{3, 1}, 1}), 1);
    EXPECT_EQ(m.at({{-1, 1}, 1}), -1);
    EXPECT_EQ(m.at({{3, 4}, 2}), 1);
    EXPECT_TRUE(std::is_sorted(fan.vectors.begin(), fan.vectors.end(), fan_order));
}

TEST(Fan, A1MatchesProductExpansion)
{
    const auto a1 = AlgebraSpec::preset("A1");
    for (long cutoff : {0L, 1L, 4L}) {
        EXPECT_EQ(as_map(build_fan(a1, cutoff)), denominator_fan(a1, cutoff)) << cutoff;
    }
    const auto m = as_map(build_fan(a1, 1));
    EXPECT_EQ(m.at({{1}, 0}), 1);
}

TEST(Fan, A2A3MatchProductExpansion)
{
    const auto a2 = AlgebraSpec::preset("A2");
    EXPECT_EQ(as_map(build_fan(a2, 3)), denominator_fan(a2, 3));
    const auto a3 = AlgebraSpec::preset("A3");
    EXPECT_EQ(as_map(build_fan(a3, 1)), denominator_fan(a3, 1));
}

TEST(Fan, NonSimplyLaced)
{
    const auto b2 = AlgebraSpec::create("B2", IntMatrix{{2, -1}, {-2, 2}}, labels({2, 1}));
    const auto g2 = AlgebraSpec::create("G2", IntMatrix{{2, -1}, {-3, 2}}, labels({3, 1}));
    for (const auto& spec : {b2, g2}) {
        const auto fan = build_fan(spec, 3);
        EXPECT_EQ(as_map(fan), denominator_fan(spec, 3)) << spec.label();
        const auto rep = verify_denominator(fan);
        EXPECT_TRUE(rep.ok) << spec.label();
    }
}

TEST(Fan, GradeZeroIsClassicalDenominator)
{
    for (const char* name : {"A1", "A2", "A3"}) {
        const auto spec = AlgebraSpec::preset(name);
        const auto fan = build_fan(spec, 0);
        // |W| − 1 classical vectors, signs summing to 1 (1 − Π(1 − 1) = 1).
        long sum = 0;
        for (const auto& v : fan.vectors) {
            EXPECT_EQ(v.grade, Integer(0));
            sum += v.mult;
        }
        EXPECT_EQ(sum, 1) << name;
        EXPECT_TRUE(verify_denominator(fan).ok);
    }
}

TEST(Fan, DenominatorA2Nine)
{
    const auto rep = verify_denominator(build_fan(AlgebraSpec::preset("A2"), 9));
    EXPECT_TRUE(rep.ok);
    EXPECT_GE(rep.terms_checked, 71u);
}

TEST(Fan, DenominatorDetectsDamage)
{
    auto fan = build_fan(AlgebraSpec::preset("A2"), 3);
    fan.vectors.back().mult = -fan.vectors.back().mult;
    const auto rep = verify_denominator(fan);
    EXPECT_FALSE(rep.ok);
    ASSERT_TRUE(rep.first_mismatch.has_value());
    EXPECT_EQ(rep.first_mismatch->root, fan.vectors.back().root);

    // A fan missing all its vectors cannot match even the classical slice.
    Fan empty{AlgebraSpec::preset("A1"), 0, {}};
    EXPECT_FALSE(verify_denominator(empty).ok);
}

TEST(Fan, NodeLimit)
{
    FanOptions opts;
    opts.max_nodes = 10;
    EXPECT_THROW(build_fan(AlgebraSpec::preset("A2"), 9, opts), Error);
}
