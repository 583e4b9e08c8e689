#include <gtest/gtest.h>

#include "affstr/strings.hpp"
#include "support.hpp"

using namespace affstr;
using affstr::testing::labels;

namespace {

const AlgebraSpec& a2()
{
    static const AlgebraSpec spec = AlgebraSpec::preset("A2");
    return spec;
}

BaseWeightSet class_of(long level, std::initializer_list<long> mu)
{
    const auto l = labels(mu);
    return enumerate_class_weights(a2(), level).at(congruence_class(a2(), l));
}

std::vector<long> eta_row(const FoldedFan& f, std::size_t target, long n_max)
{
    std::vector<long> out;
    for (long n = 0; n <= n_max; ++n) {
        out.push_back(f.eta(target, n).get_si());
    }
    return out;
}

FanVector vec(std::vector<Integer> root, long grade, int mult)
{
    return FanVector{std::move(root), grade, mult};
}

} // namespace

TEST(FoldShift, InteriorNeedsNoFolding)
{
    const auto xi = make_weight(a2(), {1, 1}, 4);
    const auto s = fold_shift(a2(), xi, vec({1, 0}, 0, 1));
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(s->target, make_weight(a2(), {3, 0}, 4));
    EXPECT_EQ(s->offset, 0);
    EXPECT_EQ(s->contribution, 1);
}

TEST(FoldShift, LevelOneKeepsClassicalPart)
{
    const auto xi = make_weight(a2(), {0, 0}, 1);
    for (const auto& g : build_fan(a2(), 4).vectors) {
        const auto s = fold_shift(a2(), xi, g);
        ASSERT_TRUE(s.has_value());
        EXPECT_EQ(s->target.classical, xi.classical);
        EXPECT_GE(s->offset, g.grade);
    }
}

TEST(FoldShift, LevelTwoTargetsTheta)
{
    const auto xi = make_weight(a2(), {0, 0}, 2);
    const auto s = fold_shift(a2(), xi, vec({1, 0}, 0, 1));
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(s->target.classical, labels({1, 1}));
    EXPECT_EQ(s->offset, 0);
}

TEST(FoldedFan, LevelOneHead)
{
    const auto base = class_of(1, {0, 0});
    const auto fans = build_folded_fans(a2(), base, 5);
    EXPECT_EQ(eta_row(fans.folded[0], 0, 5), (std::vector<long>{-1, 2, 1, -2, -1, -2}));
}

TEST(FoldedFan, LevelTwoEntries)
{
    const auto base = class_of(2, {0, 0});
    ASSERT_EQ(base.size(), 2u);
    const auto fans = build_folded_fans(a2(), base, 4);
    const auto& f = fans.folded[0];
    EXPECT_EQ(f.eta(0, 2), Integer(1));
    EXPECT_EQ(f.eta(0, 4), Integer(2));
    EXPECT_EQ(f.eta(1, 0), Integer(2));
    EXPECT_EQ(f.eta(1, 1), Integer(-1));
}

TEST(FoldedFan, LevelFourRow23)
{
    const auto base = class_of(4, {0, 0});
    ASSERT_EQ(base.size(), 5u);
    const auto fans = build_folded_fans(a2(), base, 9);
    EXPECT_EQ(eta_row(fans.folded[1], 2, 9), (std::vector<long>{1, -1, 1, 0, 1, -1, -1, -1, 0, 0}));
}

TEST(FoldedFan, StableUnderLargerFan)
{
    const auto base = class_of(2, {1, 0});
    const auto fans = build_folded_fans(a2(), base, 6);
    const auto big = build_fan(a2(), fans.fan.cutoff + 4);
    for (std::size_t j = 0; j < base.size(); ++j) {
        EXPECT_EQ(build_folded_fan(a2(), base, j, big, 6).entries, fans.folded[j].entries);
    }
}

TEST(FoldedFan, RejectsShortFan)
{
    const auto base = class_of(1, {0, 0});
    EXPECT_THROW(build_folded_fan(a2(), base, 0, build_fan(a2(), 2), 5), ConfigError);
}

TEST(GradeIndependence, SingleProbeIsTrivial)
{
    const auto xi = make_weight(a2(), {0, 0}, 2);
    const std::vector<long> probes{0};
    for (const auto& g : build_fan(a2(), 2).vectors) {
        EXPECT_TRUE(lemma1_check(a2(), xi, g, probes));
    }
}

TEST(GradeIndependence, DirectRecomputation)
{
    const auto xi = make_weight(a2(), {0, 0}, 2);
    const std::vector<long> probes{0, -3, -7};
    for (const auto& g : build_fan(a2(), 1).vectors) {
        if (g.grade != 1) {
            continue;
        }
        EXPECT_TRUE(lemma1_check(a2(), xi, g, probes));
        const auto ref = fold_shift(a2(), xi, g);
        for (long p : probes) {
            auto moved = xi;
            moved.grade = p;
            const auto s = fold_shift(a2(), moved, g);
            EXPECT_EQ(s->target.classical, ref->target.classical);
            EXPECT_EQ(s->offset, ref->offset);
            EXPECT_EQ(s->contribution, ref->contribution);
        }
    }
}

TEST(GradeIndependence, LevelFourExhaustive)
{
    const auto base = class_of(4, {0, 0});
    const auto fan = build_fan(a2(), 9);
    const std::vector<long> probes{0, -5};
    for (const auto& xi : base.weights) {
        for (const auto& g : fan.vectors) {
            ASSERT_TRUE(lemma1_check(a2(), xi, g, probes)) << format_weight(a2(), xi);
        }
    }
}
