#include <memory>

#include <gtest/gtest.h>

#include "affstr/oracle.hpp"
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

std::vector<long> as_longs(const std::vector<Integer>& v)
{
    std::vector<long> out;
    for (const auto& x : v) {
        out.push_back(x.get_si());
    }
    return out;
}

} // namespace

TEST(Racah, HighestWeightIsOne)
{
    const auto fan = build_fan(a2(), 3);
    for (auto mu : {make_weight(a2(), {0, 0}, 1), make_weight(a2(), {1, 1}, 4), make_weight(a2(), {0, 2}, 2)}) {
        EXPECT_EQ(racah_multiplicity(mu, mu, fan), Integer(1));
    }
}

TEST(Racah, KnownValues)
{
    const auto fan = std::make_shared<const Fan>(build_fan(a2(), 4));
    RacahOracle l1(a2(), make_weight(a2(), {0, 0}, 1), fan);
    EXPECT_EQ(l1.multiplicity(make_weight(a2(), {0, 0}, 1, -3)), Integer(10));
    EXPECT_EQ(l1.multiplicity(make_weight(a2(), {1, 0}, 1, -2)), Integer(0));
    RacahOracle l2(a2(), make_weight(a2(), {0, 0}, 2), fan);
    EXPECT_EQ(l2.multiplicity(make_weight(a2(), {1, 1}, 2, -4)), Integer(32));
    EXPECT_GT(l2.cache_size(), 0u);
    EXPECT_EQ(l2.multiplicity(make_weight(a2(), {0, 0}, 2, 1)), Integer(0));
}

TEST(Racah, NeedsDeepEnoughFan)
{
    const auto fan = std::make_shared<const Fan>(build_fan(a2(), 2));
    RacahOracle o(a2(), make_weight(a2(), {0, 0}, 1), fan);
    EXPECT_THROW(o.multiplicity(make_weight(a2(), {0, 0}, 1, -5)), OutOfWindowError);
}

TEST(Racah, AgreesWithFoldedFans)
{
    for (auto [level, mu] : {std::pair{2L, labels({1, 0})}, std::pair{3L, labels({1, 1})}, std::pair{4L, labels({2, 2})}}) {
        const auto c = compute_strings(a2(), level, mu, 5);
        const auto fan = std::make_shared<const Fan>(build_fan(a2(), 5));
        RacahOracle o(a2(), c.table.mu(), fan);
        for (std::size_t s = 0; s < c.table.base.size(); ++s) {
            for (long d = 0; d <= 5; ++d) {
                auto w = c.table.base.weights[s];
                w.grade = -d;
                EXPECT_EQ(o.multiplicity(w), c.table.coefficients(s, static_cast<std::size_t>(d)))
                    << format_weight(a2(), w);
            }
        }
    }
}

TEST(Racah, OtherRanks)
{
    for (const char* name : {"A1", "A3"}) {
        const auto spec = AlgebraSpec::preset(name);
        std::vector<Rational> mu(spec.rank(), Rational(0));
        mu[0] = 1;
        const auto c = compute_strings(spec, 2, mu, 4);
        const auto fan = build_fan(spec, 4);
        for (std::size_t s = 0; s < c.table.base.size(); ++s) {
            for (long d = 0; d <= 4; ++d) {
                auto w = c.table.base.weights[s];
                w.grade = -d;
                EXPECT_EQ(racah_multiplicity(c.table.mu(), w, fan), c.table.coefficients(s, static_cast<std::size_t>(d)))
                    << name << " " << format_weight(spec, w);
            }
        }
    }
}

TEST(Euler, SquareSeries)
{
    EXPECT_EQ(as_longs(euler_square_series(4)), (std::vector<long>{1, 2, 5, 10, 20}));
    EXPECT_EQ(as_longs(euler_square_series(0)), (std::vector<long>{1}));
    EXPECT_EQ(euler_square_series(10).back(), Integer(481));
    EXPECT_EQ(euler_square_series(30), affstr::testing::naive_inverse_euler(2, 30));
    EXPECT_EQ(euler_power_series(-3, 15), affstr::testing::naive_inverse_euler(3, 15));
    EXPECT_EQ(euler_power_series(4, 15), affstr::testing::naive_euler(4, 15));
}

TEST(Euler, LevelOneEta)
{
    const auto eta = level1_eta_series(20);
    EXPECT_EQ(as_longs(std::vector<Integer>(eta.begin(), eta.begin() + 6)), (std::vector<long>{-1, 2, 1, -2, -1, -2}));
    EXPECT_EQ(eta[6], Integer(2));
    EXPECT_EQ(eta[14], Integer(-3));
    auto naive = affstr::testing::naive_euler(2, 20);
    for (auto& x : naive) {
        x = -x;
    }
    EXPECT_EQ(eta, naive);
}

TEST(Euler, Convolution)
{
    const long n = 20;
    const auto eta = level1_eta_series(n);
    const auto sigma = euler_square_series(n);
    for (long big = 0; big <= n; ++big) {
        Integer acc = 0;
        for (long k = 0; k <= big; ++k) {
            acc += eta[static_cast<std::size_t>(k)] * sigma[static_cast<std::size_t>(big - k)];
        }
        EXPECT_EQ(acc, Integer(big == 0 ? -1 : 0)) << big;
    }
}
