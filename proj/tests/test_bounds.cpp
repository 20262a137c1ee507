#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include <polarbound/bounds.hpp>

using namespace polarbound;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

}  // namespace

TEST(Names, RoundTrip)
{
    for (const auto& [id, name] : kBoundNames) {
        EXPECT_EQ(to_string(id), name);
        EXPECT_EQ(bound_from_string(name), id);
    }
    EXPECT_THROW(bound_from_string("thm99"), std::invalid_argument);
    EXPECT_TRUE(is_lower_bound(BoundId::thm8_3_1));
    EXPECT_FALSE(is_lower_bound(BoundId::cor6));
    EXPECT_TRUE(is_polar_bound(BoundId::composed_lower));
    EXPECT_FALSE(is_polar_bound(BoundId::thm2_1_3));
}

TEST(Classical, Examples)
{
    EXPECT_DOUBLE_EQ(bernstein_upper(1, 1.0).value, 1.0);
    EXPECT_DOUBLE_EQ(bernstein_upper(5, 2.0).value, 10.0);
    EXPECT_DOUBLE_EQ(lax_upper(4, 3.0).value, 6.0);
    EXPECT_DOUBLE_EQ(aziz_dawood_upper(3, 2.0, 2.0).value, 0.0);
    EXPECT_DOUBLE_EQ(aziz_dawood_upper(2, 3.0, 1.0).value, 2.0);
    EXPECT_THROW(aziz_dawood_upper(2, 1.0, 3.0), std::invalid_argument);
    EXPECT_DOUBLE_EQ(turan_lower(6, 1.0).value, 3.0);
    EXPECT_DOUBLE_EQ(aziz_dawood_lower(4, 2.0, 1.0).value, 6.0);
    EXPECT_DOUBLE_EQ(aziz_dawood_lower(4, 2.0, 0.0).value, turan_lower(4, 2.0).value);
    EXPECT_THROW(bernstein_upper(0, 1.0), std::invalid_argument);
    EXPECT_THROW(bernstein_upper(2, -1.0), std::invalid_argument);
}

TEST(Govil, Examples)
{
    for (unsigned n = 1; n <= 6; ++n)
        for (double k : {1.0, 2.0, 3.0}) {
            const double M1 = std::pow(1.0 + k, n);
            EXPECT_NEAR(rel(govil_upper(n, k, M1, 0.0).value, n * std::pow(1.0 + k, n - 1.0)), 0.0, 1e-14);
        }
    // (z + 1/2)^3: M1 = 3.375, mk = 0.
    EXPECT_NEAR(govil_lower(3, 0.5, 3.375, 0.0).value, 6.75, 1e-14);
    EXPECT_NEAR(govil_upper(3, 2.0, 4.0, 0.0).value, govil_lower(3, 2.0, 4.0, 0.0).value, 1e-15);
    EXPECT_FALSE(govil_upper(3, 0.5, 1.0, 0.0).hypotheses_ok);
    EXPECT_FALSE(govil_lower(3, 2.0, 1.0, 0.0).hypotheses_ok);
}

TEST(Gap, Examples)
{
    // (z^2 + 1/4)^2: M1 = 1.5625, mk = 0.
    EXPECT_NEAR(gap_lower_1_1(4, 2, 0.5, 1.5625, 0.0).value, 5.0, 1e-14);
    EXPECT_NEAR(gap_lower_1_1(4, 2, 0.5, 2.0, 0.0).value, 4.0 * 2.0 / 1.25, 1e-14);
    for (unsigned n = 1; n <= 8; ++n)
        EXPECT_NEAR(rel(gap_lower_1_1(n, 1, 0.6, 2.0, 0.3).value, govil_lower(n, 0.6, 2.0, 0.3).value), 0.0, 1e-14);
    EXPECT_FALSE(gap_lower_1_1(4, 2, 1.5, 1.0, 0.0).hypotheses_ok);
}

TEST(Thm1, Examples)
{
    const auto b = thm1_lower(2, 1, 1, 0.5, 2.0, 3.0, 0.75);
    EXPECT_NEAR(b.constant_A, 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(b.value, -2.0 / 15.0, 1e-14);
    EXPECT_TRUE(b.vacuous);
    EXPECT_DOUBLE_EQ(thm1_lower(4, 1, 1, 0.5, 2.0, 3.0, 0.0).min_term, 0.0);
    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned mu = 1; mu <= n; ++mu)
            EXPECT_NEAR(rel(thm1_lower(n, 0, mu, 0.7, 0.0, 2.0, 0.4).value,
                            gap_lower_1_1(n, mu, 0.7, 2.0, 0.4).value), 0.0, 1e-14);
    EXPECT_FALSE(thm1_lower(3, 1, 1, 0.5, 0.4, 1.0, 0.0).hypotheses_ok);
}

TEST(Thm2, Examples)
{
    EXPECT_NEAR(thm2_upper(3, 1, 1, 2.0, 0.0, 9.0, 0.0).value, 15.0, 1e-13);
    const auto s0 = thm2_upper(5, 0, 2, 2.0, 0.0, 3.0, 0.5);
    EXPECT_NEAR(s0.constant_A, 5.0 / 5.0, 1e-15);
    EXPECT_NEAR(s0.value, s0.constant_A * 3.0 - s0.constant_A * 0.5, 1e-14);
    EXPECT_THROW(thm2_upper(3, 1, 1, 2.0, 1.0, 1.0, 0.0), std::domain_error);
    EXPECT_FALSE(thm2_upper(3, 1, 1, 0.5, 0.1, 1.0, 0.0).hypotheses_ok);
}

TEST(Thm3, Examples)
{
    const auto b = thm3_upper(3, 1, 1, 2.0, 0.0, 2.0, 9.0, 0.0);
    EXPECT_NEAR(b.value, 42.0, 1e-13);
    EXPECT_DOUBLE_EQ(b.min_term, 0.0);
    const auto one = thm3_upper(5, 2, 1, 1.5, 0.3, 1.0, 2.0, 0.4);
    EXPECT_NEAR(one.value, 10.0, 1e-14);
    EXPECT_DOUBLE_EQ(one.min_term, 0.0);
    EXPECT_FALSE(thm3_upper(3, 1, 1, 2.0, 0.0, 0.5, 9.0, 0.0).hypotheses_ok);
    EXPECT_THROW(thm3_upper(3, 1, 1, 2.0, 1.2, 2.0, 9.0, 0.0), std::domain_error);
}

TEST(Thm3, DividedByAlphaApproachesThm2)
{
    const double d2 = thm2_upper(6, 2, 2, 1.7, 0.4, 5.0, 0.8).value;
    double prev = INFINITY;
    for (double a : {1e2, 1e4, 1e6, 1e8}) {
        const double gap = std::abs(thm3_upper(6, 2, 2, 1.7, 0.4, a, 5.0, 0.8).value / a - d2);
        EXPECT_LT(gap, prev);
        prev = gap;
    }
    EXPECT_LT(prev, 1e-6 * d2);
}

TEST(Cor5, Examples)
{
    EXPECT_NEAR(cor5_upper(3, 1, 1, 2.0, 2.0, 9.0, 0.0).value, 42.0, 1e-13);
    EXPECT_NEAR(cor5_upper(7, 0, 1, 2.0, 1.0, 3.0, 1.0).value, 21.0, 1e-13);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const unsigned n = 2 + i % 10, s = i % (n - 1), mu = 1 + (i / 3) % (n - s);
        const double k = 1.0 + 3.0 * u(rng), a = 1.0 + 10.0 * u(rng), M1 = u(rng) + 0.1, mk = u(rng) * 0.1;
        const auto c = cor5_upper(n, s, mu, k, a, M1, mk);
        const auto t = thm3_upper(n, s, mu, k, 0.0, a, M1, mk);
        EXPECT_NEAR(rel(c.max_term, t.max_term), 0.0, 1e-12);
        EXPECT_NEAR(rel(c.min_term, t.min_term), 0.0, 1e-12);
    }
}

TEST(Thm8, Examples)
{
    const auto b = thm8_lower(2, 1, 1, 0.5, 2.0, 10.0, 3.0, 0.75);
    EXPECT_NEAR(b.constant_A, 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(b.value, -9.2, 1e-13);
    EXPECT_TRUE(b.vacuous);
    EXPECT_DOUBLE_EQ(thm8_lower(2, 1, 1, 0.5, 2.0, 10.0, 3.0, 0.0).min_term, 0.0);
    const double d1 = thm1_lower(5, 1, 2, 0.6, 1.5, 4.0, 0.3).value;
    double prev = INFINITY;
    for (double a : {1e2, 1e4, 1e6}) {
        const double gap = std::abs(thm8_lower(5, 1, 2, 0.6, 1.5, a, 4.0, 0.3).value / a - d1);
        EXPECT_LT(gap, prev);
        prev = gap;
    }
    EXPECT_FALSE(thm8_lower(3, 1, 1, 0.5, 0.4, 2.0, 1.0, 0.0).hypotheses_ok);
}

TEST(Composed, SingleZeroIsBaseBound)
{
    const std::vector<ZeroModulus> up{{0.3, 2}};
    const auto cu = composed_upper(up, 7, 1, 2.0, 3.0, 5.0, 0.5);
    const auto t3 = thm3_upper(7, 2, 1, 2.0, 0.3, 3.0, 5.0, 0.5);
    EXPECT_NEAR(rel(cu.value, t3.value), 0.0, 1e-14);
    const std::vector<ZeroModulus> lo{{1.3, 2}};
    const auto cl = composed_lower(lo, 7, 1, 0.5, 3.0, 5.0, 0.5);
    const auto t8 = thm8_lower(7, 2, 1, 0.5, 1.3, 3.0, 5.0, 0.5);
    EXPECT_NEAR(rel(cl.value, t8.value), 0.0, 1e-14);
    EXPECT_NEAR(rel(composed_upper({}, 5, 1, 2.0, 3.0, 5.0, 0.5).value,
                    thm3_upper(5, 0, 1, 2.0, 0.0, 3.0, 5.0, 0.5).value), 0.0, 1e-14);
}

TEST(Composed, TwoZerosMatchClosedForms)
{
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 300; ++i) {
        const unsigned n = 3 + i % 10;
        const unsigned t0 = 1 + i % 2, t1 = 1 + (i / 2) % 2;
        if (t0 + t1 + 1 > n) continue;
        const unsigned mu = 1 + (i / 4) % (n - t0 - t1);
        const double a = 1.0 + 20.0 * u(rng), M1 = 0.5 + u(rng), mk = 0.2 * u(rng);
        {
            const double k = 1.0 + 2.0 * u(rng), z0 = 0.95 * u(rng), z1 = 0.95 * u(rng);
            const std::vector<ZeroModulus> zs{{z0, t0}, {z1, t1}};
            const auto c = composed_upper(zs, n, mu, k, a, M1, mk);
            const auto d = cor6_upper(n, t0, z0, t1, z1, mu, k, a, M1, mk);
            EXPECT_NEAR(rel(c.max_coeff, d.max_coeff), 0.0, 1e-12);
            EXPECT_NEAR(rel(c.min_coeff, d.min_coeff), 0.0, 1e-12);
        }
        {
            const double k = 0.1 + 0.9 * u(rng), z0 = k + 0.01 + 2.0 * u(rng), z1 = k + 0.01 + 2.0 * u(rng);
            const std::vector<ZeroModulus> zs{{z0, t0}, {z1, t1}};
            const auto c = composed_lower(zs, n, mu, k, a, M1, mk);
            const auto d = cor10_lower(n, t0, z0, t1, z1, mu, k, a, M1, mk);
            EXPECT_NEAR(rel(c.max_coeff, d.max_coeff), 0.0, 1e-12);
            EXPECT_NEAR(rel(c.min_coeff, d.min_coeff), 0.0, 1e-12);
        }
    }
}

TEST(Composed, ExhaustiveOrderIsNeverWorse)
{
    const std::vector<ZeroModulus> up{{0.1, 1}, {0.8, 2}, {0.4, 1}};
    const double given = composed_upper(up, 9, 1, 2.0, 4.0, 3.0, 0.2).value;
    const double best = composed_upper(up, 9, 1, 2.0, 4.0, 3.0, 0.2, PeelOrder::exhaustive).value;
    EXPECT_LE(best, given);
    const std::vector<ZeroModulus> lo{{0.9, 1}, {2.5, 2}, {1.2, 1}};
    const double lg = composed_lower(lo, 9, 1, 0.8, 4.0, 3.0, 0.2).value;
    const double lb = composed_lower(lo, 9, 1, 0.8, 4.0, 3.0, 0.2, PeelOrder::exhaustive).value;
    EXPECT_GE(lb, lg);
}

TEST(Composed, Errors)
{
    const std::vector<ZeroModulus> bad_up{{0.2, 1}, {1.0, 1}};
    EXPECT_THROW(composed_upper(bad_up, 5, 1, 2.0, 2.0, 1.0, 0.0), std::domain_error);
    const std::vector<ZeroModulus> bad_lo{{2.0, 1}, {0.5, 1}};
    EXPECT_THROW(composed_lower(bad_lo, 5, 1, 0.5, 2.0, 1.0, 0.0), std::domain_error);
    const std::vector<ZeroModulus> too_many{{0.2, 3}, {0.3, 3}};
    EXPECT_THROW(composed_upper(too_many, 5, 1, 2.0, 2.0, 1.0, 0.0), std::invalid_argument);
    const std::vector<ZeroModulus> eight(8, ZeroModulus{0.2, 1});
    EXPECT_THROW(composed_upper(eight, 12, 1, 2.0, 2.0, 1.0, 0.0, PeelOrder::exhaustive), std::invalid_argument);
}

TEST(Result, RecomputeMatchesValue)
{
    for (const auto& b : {thm3_upper(6, 1, 1, 2.0, 0.2, 3.0, 2.0, 0.3), thm8_lower(6, 1, 1, 0.5, 1.2, 3.0, 2.0, 0.3)})
        EXPECT_DOUBLE_EQ(b.value, b.recompute());
}
