#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include <polarbound/verify.hpp>

using namespace polarbound;

namespace {

const Polynomial kSharp{0.0, 4.0, 4.0, 1.0};  // z (z+2)^2
const Polynomial kLower{0.0, -2.0, 1.0};      // (z-2) z

}  // namespace

TEST(Verify, SharpUpperInstance)
{
    const auto pat = classify(kSharp, 2.0, Regime::upper);
    const auto r = verify_classified(kSharp, pat, 2.0, BoundId::thm3_2_3);
    EXPECT_NEAR(r.lhs, 42.0, 1e-8);
    EXPECT_NEAR(r.rhs, 42.0, 1e-10);
    EXPECT_NEAR(r.slack, 0.0, 1e-8);
    EXPECT_EQ(r.status, Status::pass);
    ASSERT_TRUE(r.chain_slack.has_value());
    EXPECT_GE(*r.chain_slack, -1e-8);
    EXPECT_EQ(verify_classified(kSharp, pat, 2.0, BoundId::cor5_2_5).status, Status::pass);
    const auto d = verify_classified(kSharp, pat, 1.0, BoundId::thm2_1_3);
    EXPECT_NEAR(d.lhs, 15.0, 1e-8);
    EXPECT_NEAR(d.rhs, 15.0, 1e-10);
}

TEST(Verify, VacuousLowerInstance)
{
    const auto pat = classify(kLower, 0.5, Regime::lower);
    const auto r = verify_classified(kLower, pat, 10.0, BoundId::thm8_3_1);
    EXPECT_NEAR(r.lhs, 38.0, 1e-8);
    EXPECT_NEAR(r.rhs, -9.2, 1e-10);
    EXPECT_EQ(r.status, Status::vacuous_pass);
    EXPECT_FALSE(r.chain_slack.has_value());
    const auto d = verify_classified(kLower, pat, 1.0, BoundId::thm1_1_2);
    EXPECT_NEAR(d.lhs, 4.0, 1e-8);
    EXPECT_NEAR(d.rhs, -2.0 / 15.0, 1e-8);
}

TEST(Verify, BernsteinEquality)
{
    std::mt19937_64 rng(2);
    std::normal_distribution<double> g;
    for (unsigned n = 1; n <= 12; ++n) {
        const Polynomial p = Polynomial::monomial(n, cplx(g(rng), g(rng)));
        ZeroPattern pat;
        pat.n = n;
        const auto r = verify_classified(p, pat, 1.0, BoundId::bernstein);
        EXPECT_NEAR(r.slack, 0.0, 1e-10 * r.lhs);
    }
}

TEST(Verify, FailDetectedForFalseClaim)
{
    // Claiming k = 3 for z (z+2)^2 gives 4.5 * 9 - (1/6) * 3 = 40 < 42.
    ZeroPattern pat = classify(kSharp, 2.0, Regime::upper);
    pat.k = 3.0;
    const auto r = verify_classified(kSharp, pat, 2.0, BoundId::thm3_2_3);
    EXPECT_NEAR(r.rhs, 40.0, 1e-8);
    EXPECT_NEAR(r.slack, -2.0, 1e-8);
    EXPECT_EQ(r.status, Status::fail);
}

TEST(Verify, Preconditions)
{
    const auto pat = classify(kSharp, 2.0, Regime::upper);
    EXPECT_THROW(verify_classified(kSharp, pat, 0.5, BoundId::thm3_2_3), BoundNotApplicable);
    EXPECT_THROW(verify_classified(kSharp, pat, 2.0, BoundId::thm8_3_1), BoundNotApplicable);
    EXPECT_THROW(verify_classified(kSharp, pat, 2.0, BoundId::cor6), BoundNotApplicable);
    EXPECT_THROW(verify_classified(kSharp, pat, 2.0, BoundId::govil_upper), BoundNotApplicable);
    const Polynomial off = from_roots({{0.4, 1}, {-2.0, 2}});
    EXPECT_THROW(verify_classified(off, classify(off, 2.0, Regime::upper), 2.0, BoundId::cor5_2_5),
                 BoundNotApplicable);
}

TEST(Verify, InstanceChecksPattern)
{
    ZeroPattern pat;
    pat.n = 3;
    pat.k = 2.0;
    pat.regime = Regime::upper;
    pat.distinguished = {{0.0, 1}};
    EXPECT_EQ(verify_instance(kSharp, pat, 2.0, BoundId::thm3_2_3).status, Status::pass);
    pat.distinguished = {{0.0, 2}};
    pat.n = 3;
    EXPECT_THROW(verify_instance(kSharp, pat, 2.0, BoundId::thm3_2_3), std::domain_error);
    pat.distinguished = {{0.0, 1}};
    pat.mu = 2;
    EXPECT_THROW(verify_instance(kSharp, pat, 2.0, BoundId::thm3_2_3), std::domain_error);
}

TEST(Verify, AzizDawoodAttained)
{
    // a z^n + b with |b| >= |a| attains the upper bound; |b| <= |a| the lower one.
    const Polynomial up{cplx(0.0, 3.0), 0.0, 0.0, 0.0, 2.0};
    ZeroPattern pu = classify(up, 1.0, Regime::upper);
    EXPECT_NEAR(verify_classified(up, pu, 1.0, BoundId::aziz_dawood_upper).slack, 0.0, 1e-8);
    const Polynomial lo{0.5, 0.0, 0.0, 0.0, 2.0};
    ZeroPattern pl = classify(lo, 1.0, Regime::lower);
    EXPECT_NEAR(verify_classified(lo, pl, 1.0, BoundId::aziz_dawood_lower).slack, 0.0, 1e-8);
}

TEST(Verify, GapEqualityAndGovil)
{
    const Polynomial p = make_sharp_gap_family(4, 2, 0.5);
    const auto pat = classify(p, 0.5, Regime::lower);
    const auto r = verify_classified(p, pat, 1.0, BoundId::gap_1_1);
    EXPECT_NEAR(r.lhs, 5.0, 1e-8);
    EXPECT_NEAR(r.rhs, 5.0, 1e-8);
    const Polynomial b = pow(Polynomial{0.5, 1.0}, 3);
    const auto rb = verify_classified(b, classify(b, 0.5, Regime::lower), 1.0, BoundId::govil_lower);
    EXPECT_NEAR(rb.lhs, 6.75, 1e-8);
    EXPECT_NEAR(rb.rhs, 6.75, 1e-8);
}

TEST(Sharpness, Families)
{
    using Kind = SharpnessFamily::Kind;
    EXPECT_LE(sharpness_gap({Kind::monomial, 3, 1, 1, 2.0, 2.0}), 1e-8);
    EXPECT_LE(sharpness_gap({Kind::gap, 4, 0, 2, 0.5, 1.0}), 1e-8);
    for (unsigned n = 2; n <= 8; ++n)
        for (double k : {0.25, 0.5, 1.0, 2.0})
            EXPECT_LE(sharpness_gap({Kind::binomial, n, 0, 1, k, 1.0}), 1e-8);
    const auto r = sharpness_check({Kind::monomial, 3, 1, 1, 2.0, 2.0});
    EXPECT_EQ(r.bound_id, BoundId::thm3_2_3);
    EXPECT_NEAR(r.rhs, 42.0, 1e-12);
}

TEST(LimitRecovery, StrictlyDecreasing)
{
    const std::vector<double> grid{1e2, 1e4, 1e6};
    ZeroPattern up;
    up.n = 3;
    up.k = 2.0;
    up.regime = Regime::upper;
    up.distinguished = {{0.0, 1}};
    auto g = limit_recovery(kSharp, up, grid);
    EXPECT_GT(g[0], g[1]);
    EXPECT_GT(g[1], g[2]);
    EXPECT_NEAR(limit_reference(kSharp, up), 15.0, 1e-8);

    ZeroPattern lo;
    lo.n = 2;
    lo.k = 0.5;
    lo.regime = Regime::lower;
    lo.distinguished = {{2.0, 1}};
    g = limit_recovery(kLower, lo, grid);
    EXPECT_GT(g[0], g[1]);
    EXPECT_GT(g[1], g[2]);
    // The gap is exactly C / alpha.
    EXPECT_NEAR(g[0] / g[1], 100.0, 1e-6);
    const std::vector<double> bad{0.5};
    EXPECT_THROW(limit_recovery(kLower, lo, bad), std::invalid_argument);
}

TEST(IdentityProbe, Monomial)
{
    for (unsigned n = 1; n <= 8; ++n) {
        const auto r = proof_identity_probe(Polynomial::monomial(n), 64);
        EXPECT_NEAR(r.reciprocal_sum_excess, 0.0, 1e-12 * n);
        EXPECT_LE(r.reciprocal_residual, 1e-12 * n);
    }
}

TEST(IdentityProbe, MonomialPlusConstant)
{
    const Polynomial p{cplx(0.3, -0.4), 0.0, 0.0, 0.0, 0.0, cplx(1.2, 0.5)};
    const auto r = proof_identity_probe(p, 256);
    EXPECT_LE(r.reciprocal_residual, 1e-12);
    EXPECT_LE(r.reciprocal_sum_excess, 1e-12);
}

TEST(IdentityProbe, RandomPolynomials)
{
    for (int i = 0; i < 40; ++i) {
        const Polynomial p = random_polynomial(derive_seed(300, i), 12);
        const auto r = proof_identity_probe(p, 256);
        const double scale = p.degree() * r.max_unit;
        EXPECT_LE(r.reciprocal_residual, 1e-10 * scale);
        EXPECT_LE(r.reciprocal_sum_excess, 1e-9 * scale);
    }
    EXPECT_THROW(proof_identity_probe(Polynomial::constant(1.0), 10), std::invalid_argument);
    EXPECT_THROW(proof_identity_probe(Polynomial{1.0, 1.0}, 0), std::invalid_argument);
}
