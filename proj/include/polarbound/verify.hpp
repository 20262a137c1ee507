#ifndef POLARBOUND_VERIFY_HPP
#define POLARBOUND_VERIFY_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bounds.hpp"
#include "circle_extrema.hpp"
#include "polynomial.hpp"
#include "zero_structure.hpp"

namespace polarbound {

enum class Status { pass, fail, vacuous_pass };

inline std::string to_string(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::vacuous_pass: return "vacuous_pass";
    }
    return "fail";
}

/// One checked instance of an inequality. slack is rhs - lhs for upper
/// bounds and lhs - rhs for lower bounds; tol is the effective tolerance
/// (absolute + relative * lhs).
struct VerificationRecord {
    std::string instance_id;
    std::string bound_id;
    cplx alpha{1.0, 0.0};
    double lhs = 0.0;
    double lhs_error = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    Status status = Status::pass;
    double tol = 0.0;
    /// n*M1 + (|alpha|-1)*max|p'| - lhs, for upper polar bounds only.
    std::optional<double> chain_slack;
};

struct VerifyOptions {
    double tol_abs = 1e-8;
    double tol_rel = 1e-8;
    double margin = kDefaultMargin;
    PeelOrder order = PeelOrder::given;
    std::string instance_id = "instance";
};

/// Circle extrema of p that feed the bounds.
struct CircleData {
    ExtremumResult max_unit;  // max_{|z|=1} |p|
    ExtremumResult min_k;     // min_{|z|=k} |p|
    std::optional<ExtremumResult> min_unit;  // min_{|z|=1} |p|, only for the Aziz-Dawood bounds
};

inline bool needs_min_unit(BoundId id)
{
    return id == BoundId::aziz_dawood_upper || id == BoundId::aziz_dawood_lower;
}

inline CircleData circle_data(const Polynomial& p, double k, double tol, bool with_min_unit = true)
{
    CircleData cd{max_modulus(p, 1.0, tol), min_modulus(p, k, tol), std::nullopt};
    if (with_min_unit) cd.min_unit = min_modulus(p, 1.0, tol);
    return cd;
}

/// The bound does not apply to the instance: wrong regime or zero count,
/// |alpha| < 1 for a polar bound, or failed hypotheses.
class BoundNotApplicable : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

namespace detail {

[[noreturn]] inline void structure_error(BoundId id, const std::string& need)
{
    throw BoundNotApplicable("bound " + to_string(id) + " requires " + need);
}

inline void require_regime(BoundId id, const ZeroPattern& pat, Regime r)
{
    if (pat.regime != r) structure_error(id, to_string(r) + " regime");
}

inline void require_count(BoundId id, const ZeroPattern& pat, std::size_t lo, std::size_t hi)
{
    const std::size_t m = pat.distinguished.size();
    if (m < lo || m > hi) {
        if (lo == hi)
            structure_error(id, std::to_string(lo) + " distinguished zero(s), found " + std::to_string(m));
        structure_error(id, "at most " + std::to_string(hi) + " distinguished zero(s), found " +
                                std::to_string(m));
    }
}

inline std::vector<ZeroModulus> moduli(const ZeroPattern& pat)
{
    std::vector<ZeroModulus> zs;
    for (const auto& d : pat.distinguished) zs.push_back({std::abs(d.z), d.t});
    return zs;
}

}  // namespace detail

/// Evaluates a catalog bound for a classified pattern. Throws std::domain_error
/// when the pattern's structure does not fit the bound.
inline BoundResult evaluate_bound(BoundId id, const ZeroPattern& pat, double alpha_mod,
                                  const CircleData& cd, PeelOrder order = PeelOrder::given,
                                  double margin = kDefaultMargin)
{
    const unsigned n = pat.n;
    const double k = pat.k;
    const double M1 = cd.max_unit.value;
    const double mk = cd.min_k.value;
    if (needs_min_unit(id) && !cd.min_unit)
        throw std::invalid_argument("bound " + to_string(id) + " needs min |p| on |z| = 1");
    const auto zs = detail::moduli(pat);
    const unsigned s = zs.empty() ? 0 : zs[0].t;
    const double z0 = zs.empty() ? 0.0 : zs[0].mod;

    switch (id) {
    case BoundId::bernstein:
        return bernstein_upper(n, M1);
    case BoundId::lax:
        detail::require_regime(id, pat, Regime::upper);
        detail::require_count(id, pat, 0, 0);
        return lax_upper(n, M1);
    case BoundId::aziz_dawood_upper:
        detail::require_regime(id, pat, Regime::upper);
        detail::require_count(id, pat, 0, 0);
        return aziz_dawood_upper(n, M1, std::min(cd.min_unit->value, M1));
    case BoundId::govil_upper:
        detail::require_regime(id, pat, Regime::upper);
        detail::require_count(id, pat, 0, 0);
        return govil_upper(n, k, M1, mk);
    case BoundId::turan:
        detail::require_regime(id, pat, Regime::lower);
        detail::require_count(id, pat, 0, 0);
        return turan_lower(n, M1);
    case BoundId::aziz_dawood_lower:
        detail::require_regime(id, pat, Regime::lower);
        detail::require_count(id, pat, 0, 0);
        return aziz_dawood_lower(n, M1, std::min(cd.min_unit->value, M1));
    case BoundId::govil_lower:
        detail::require_regime(id, pat, Regime::lower);
        detail::require_count(id, pat, 0, 0);
        return govil_lower(n, k, M1, mk);
    case BoundId::gap_1_1:
        detail::require_regime(id, pat, Regime::lower);
        detail::require_count(id, pat, 0, 0);
        return gap_lower_1_1(n, pat.mu, k, M1, mk);
    case BoundId::thm1_1_2:
        detail::require_regime(id, pat, Regime::lower);
        detail::require_count(id, pat, 0, 1);
        return thm1_lower(n, s, pat.mu, k, z0, M1, mk);
    case BoundId::thm2_1_3:
        detail::require_regime(id, pat, Regime::upper);
        detail::require_count(id, pat, 0, 1);
        return thm2_upper(n, s, pat.mu, k, z0, M1, mk);
    case BoundId::thm3_2_3:
        detail::require_regime(id, pat, Regime::upper);
        detail::require_count(id, pat, 0, 1);
        return thm3_upper(n, s, pat.mu, k, z0, alpha_mod, M1, mk);
    case BoundId::cor5_2_5:
        detail::require_regime(id, pat, Regime::upper);
        detail::require_count(id, pat, 0, 1);
        if (z0 > margin) detail::structure_error(id, "its distinguished zero at the origin");
        return cor5_upper(n, s, pat.mu, k, alpha_mod, M1, mk);
    case BoundId::thm8_3_1:
        detail::require_regime(id, pat, Regime::lower);
        detail::require_count(id, pat, 0, 1);
        return thm8_lower(n, s, pat.mu, k, z0, alpha_mod, M1, mk);
    case BoundId::cor6:
        detail::require_regime(id, pat, Regime::upper);
        detail::require_count(id, pat, 2, 2);
        return cor6_upper(n, zs[0].t, zs[0].mod, zs[1].t, zs[1].mod, pat.mu, k, alpha_mod, M1, mk);
    case BoundId::cor10:
        detail::require_regime(id, pat, Regime::lower);
        detail::require_count(id, pat, 2, 2);
        return cor10_lower(n, zs[0].t, zs[0].mod, zs[1].t, zs[1].mod, pat.mu, k, alpha_mod, M1, mk);
    case BoundId::composed_upper:
        detail::require_regime(id, pat, Regime::upper);
        return composed_upper(zs, n, pat.mu, k, alpha_mod, M1, mk, order);
    case BoundId::composed_lower:
        detail::require_regime(id, pat, Regime::lower);
        return composed_lower(zs, n, pat.mu, k, alpha_mod, M1, mk, order);
    }
    throw std::invalid_argument("unknown bound id");
}

/// Checks one bound on a polynomial whose zero structure is already known.
inline VerificationRecord verify_classified(const Polynomial& p, const ZeroPattern& pat, cplx alpha,
                                            BoundId id, const VerifyOptions& opt = {})
{
    const bool polar = is_polar_bound(id);
    const double alpha_mod = std::abs(alpha);
    if (polar && !(alpha_mod >= 1.0))
        throw BoundNotApplicable("|alpha| >= 1 required for polar-derivative bounds");

    const double ext_tol = opt.tol_abs / 10.0;
    const CircleData cd = circle_data(p, pat.k, ext_tol, needs_min_unit(id));
    const BoundResult bound = evaluate_bound(id, pat, alpha_mod, cd, opt.order, opt.margin);
    if (!bound.hypotheses_ok)
        throw BoundNotApplicable("hypotheses of " + to_string(id) + " not satisfied by the pattern");

    const ExtremumResult dmax = max_modulus(derivative(p), 1.0, ext_tol);
    const ExtremumResult lhs = polar ? max_modulus(polar_derivative(p, alpha), 1.0, ext_tol) : dmax;

    VerificationRecord rec;
    rec.instance_id = opt.instance_id;
    rec.bound_id = to_string(id);
    rec.alpha = alpha;
    rec.lhs = lhs.value;
    rec.lhs_error = lhs.error_radius;
    rec.rhs = bound.value;
    rec.slack = bound.lower ? rec.lhs - rec.rhs : rec.rhs - rec.lhs;
    rec.tol = opt.tol_abs + opt.tol_rel * rec.lhs;

    const double allowance = rec.tol + rec.lhs_error;
    bool failed = rec.slack < -allowance;
    if (polar && !bound.lower) {
        const double chain = pat.n * cd.max_unit.value + (alpha_mod - 1.0) * dmax.value;
        rec.chain_slack = chain - rec.lhs;
        failed = failed || *rec.chain_slack < -(allowance + (alpha_mod - 1.0) * dmax.error_radius);
    }
    if (failed) rec.status = Status::fail;
    else if (bound.lower && rec.rhs <= 0.0) rec.status = Status::vacuous_pass;
    else rec.status = Status::pass;
    return rec;
}

/// Classifies p against the pattern's regime and k, checks that the result
/// matches the pattern (degree, multiplicity multiset, gap at least
/// pattern.mu), then verifies the bound using the declared gap index.
inline VerificationRecord verify_instance(const Polynomial& p, const ZeroPattern& pattern, cplx alpha,
                                          BoundId id, const VerifyOptions& opt = {})
{
    ZeroPattern found = classify(p, pattern.k, pattern.regime, opt.margin);
    auto mults = [](const ZeroPattern& z) {
        std::vector<unsigned> t;
        for (const auto& d : z.distinguished) t.push_back(d.t);
        std::sort(t.begin(), t.end());
        return t;
    };
    if (found.n != pattern.n || mults(found) != mults(pattern) || found.mu < pattern.mu)
        throw std::domain_error("classification mismatch: polynomial has pattern " + to_json(found) +
                                ", expected " + to_json(pattern));
    found.mu = pattern.mu;
    return verify_classified(p, found, alpha, id, opt);
}

/// Extremal families for which a catalog bound holds with equality.
struct SharpnessFamily {
    enum class Kind { monomial, gap, binomial };
    Kind kind = Kind::monomial;
    unsigned n = 1;
    unsigned s = 0;   // monomial: multiplicity of the zero at the origin
    unsigned mu = 1;  // gap
    double k = 1.0;
    double alpha = 1.0;  // monomial
};

struct SharpnessResult {
    BoundId bound_id = BoundId::thm3_2_3;
    Polynomial p = Polynomial::constant(1.0);
    double lhs = 0.0;
    double lhs_error = 0.0;
    double rhs = 0.0;
    double gap = 0.0;  // |lhs - rhs| / rhs
};

inline constexpr double kSharpnessExtremumTol = 1e-11;

/// monomial: z^s (z+k)^{n-s} against thm3_2_3 (k >= 1, real alpha >= 1).
/// gap: (z^mu + k^mu)^{n/mu} against gap_1_1.
/// binomial: (z+k)^n against govil_upper for k >= 1, else govil_lower.
inline SharpnessResult sharpness_check(const SharpnessFamily& fam)
{
    SharpnessResult out;
    ZeroPattern pat;
    pat.n = fam.n;
    pat.k = fam.k;
    double alpha = 1.0;
    switch (fam.kind) {
    case SharpnessFamily::Kind::monomial:
        out.p = make_sharp_monomial_family(fam.n, fam.s, fam.k);
        out.bound_id = BoundId::thm3_2_3;
        pat.regime = Regime::upper;
        if (fam.s > 0) pat.distinguished.push_back({0.0, fam.s});
        alpha = fam.alpha;
        break;
    case SharpnessFamily::Kind::gap:
        out.p = make_sharp_gap_family(fam.n, fam.mu, fam.k);
        out.bound_id = BoundId::gap_1_1;
        pat.regime = Regime::lower;
        pat.mu = fam.mu;
        break;
    case SharpnessFamily::Kind::binomial:
        out.p = pow(Polynomial{fam.k, 1.0}, fam.n);
        out.bound_id = fam.k >= 1.0 ? BoundId::govil_upper : BoundId::govil_lower;
        pat.regime = fam.k >= 1.0 ? Regime::upper : Regime::lower;
        break;
    }
    pat.validate();
    const CircleData cd = circle_data(out.p, fam.k, kSharpnessExtremumTol, false);
    const BoundResult b = evaluate_bound(out.bound_id, pat, std::abs(alpha), cd);
    const Polynomial target = is_polar_bound(out.bound_id) ? polar_derivative(out.p, alpha)
                                                           : derivative(out.p);
    const ExtremumResult lhs = max_modulus(target, 1.0, kSharpnessExtremumTol);
    out.lhs = lhs.value;
    out.lhs_error = lhs.error_radius;
    out.rhs = b.value;
    out.gap = std::abs(out.lhs - out.rhs) / std::abs(out.rhs);
    return out;
}

inline double sharpness_gap(const SharpnessFamily& fam) { return sharpness_check(fam).gap; }

/// |polar_bound(alpha)/alpha - derivative_bound| for each alpha, pairing
/// thm3_2_3 with thm2_1_3 (upper regime) or thm8_3_1 with thm1_1_2 (lower).
inline std::vector<double> limit_recovery(const Polynomial& p, const ZeroPattern& pattern,
                                          std::span<const double> alpha_grid,
                                          double tol = kDefaultExtremumTol)
{
    ZeroPattern pat = classify(p, pattern.k, pattern.regime);
    if (pat.mu < pattern.mu) throw std::domain_error("classification mismatch: gap below pattern mu");
    pat.mu = pattern.mu;
    const CircleData cd = circle_data(p, pat.k, tol, false);
    const bool upper = pat.regime == Regime::upper;
    const BoundId polar = upper ? BoundId::thm3_2_3 : BoundId::thm8_3_1;
    const BoundId plain = upper ? BoundId::thm2_1_3 : BoundId::thm1_1_2;
    const double base = evaluate_bound(plain, pat, 1.0, cd).value;
    std::vector<double> out;
    for (double a : alpha_grid) {
        if (!(a >= 1.0)) throw std::invalid_argument("alpha grid entries must be >= 1");
        out.push_back(std::abs(evaluate_bound(polar, pat, a, cd).value / a - base));
    }
    return out;
}

/// Derivative bound paired with limit_recovery (thm2_1_3 or thm1_1_2).
inline double limit_reference(const Polynomial& p, const ZeroPattern& pattern,
                              double tol = kDefaultExtremumTol)
{
    ZeroPattern pat = classify(p, pattern.k, pattern.regime);
    pat.mu = std::min(pat.mu, pattern.mu);
    const CircleData cd = circle_data(p, pat.k, tol, false);
    const BoundId plain = pat.regime == Regime::upper ? BoundId::thm2_1_3 : BoundId::thm1_1_2;
    return evaluate_bound(plain, pat, 1.0, cd).value;
}

struct IdentityProbe {
    /// max over samples of |p'| + |q'| - n*M1 (nonpositive when the inequality holds)
    double reciprocal_sum_excess = 0.0;
    /// max over samples of ||n p - z p'| - |q'||
    double reciprocal_residual = 0.0;
    double max_unit = 0.0;  // certified M1
};

/// Samples |z| = 1 at sample_count equally spaced angles with q the
/// conjugate-reciprocal of p.
inline IdentityProbe proof_identity_probe(const Polynomial& p, std::size_t sample_count)
{
    if (sample_count < 1) throw std::invalid_argument("sample_count must be >= 1");
    if (p.degree() < 1) throw std::invalid_argument("identity probe needs degree >= 1");
    const Polynomial dp = derivative(p);
    const Polynomial q = conjugate_reciprocal(p);
    const bool has_dq = q.degree() >= 1;
    const Polynomial dq = has_dq ? derivative(q) : q;
    const double n = static_cast<double>(p.degree());

    IdentityProbe out;
    out.max_unit = max_modulus(p, 1.0).value;
    out.reciprocal_sum_excess = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < sample_count; ++i) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) /
                             static_cast<double>(sample_count);
        const cplx z = std::polar(1.0, theta);
        const cplx pv = eval(p, z);
        const cplx dpv = eval(dp, z);
        const double dqv = has_dq ? std::abs(eval(dq, z)) : 0.0;
        out.reciprocal_sum_excess =
            std::max(out.reciprocal_sum_excess, std::abs(dpv) + dqv - n * out.max_unit);
        out.reciprocal_residual =
            std::max(out.reciprocal_residual, std::abs(std::abs(n * pv - z * dpv) - dqv));
    }
    return out;
}

}  // namespace polarbound

#endif  // POLARBOUND_VERIFY_HPP
