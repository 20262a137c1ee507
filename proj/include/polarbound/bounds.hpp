#ifndef POLARBOUND_BOUNDS_HPP
#define POLARBOUND_BOUNDS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polarbound {

// Every bound estimates max_{|z|=1} |p'(z)| or max_{|z|=1} |D_alpha p(z)| from
// M1 = max_{|z|=1} |p| and mk = min_{|z|=k} |p| (m1 = min_{|z|=1} |p| for the
// unit-circle forms). Functions here are pure arithmetic; the circle extrema
// are computed elsewhere.

enum class BoundId {
    bernstein,
    lax,
    aziz_dawood_upper,
    aziz_dawood_lower,
    turan,
    govil_upper,
    govil_lower,
    gap_1_1,
    thm1_1_2,
    thm2_1_3,
    thm3_2_3,
    cor5_2_5,
    cor6,
    thm8_3_1,
    cor10,
    composed_upper,
    composed_lower,
};

inline constexpr std::array<std::pair<BoundId, std::string_view>, 17> kBoundNames{{
    {BoundId::bernstein, "bernstein"},
    {BoundId::lax, "lax"},
    {BoundId::aziz_dawood_upper, "aziz_dawood_upper"},
    {BoundId::aziz_dawood_lower, "aziz_dawood_lower"},
    {BoundId::turan, "turan"},
    {BoundId::govil_upper, "govil_upper"},
    {BoundId::govil_lower, "govil_lower"},
    {BoundId::gap_1_1, "gap_1_1"},
    {BoundId::thm1_1_2, "thm1_1_2"},
    {BoundId::thm2_1_3, "thm2_1_3"},
    {BoundId::thm3_2_3, "thm3_2_3"},
    {BoundId::cor5_2_5, "cor5_2_5"},
    {BoundId::cor6, "cor6"},
    {BoundId::thm8_3_1, "thm8_3_1"},
    {BoundId::cor10, "cor10"},
    {BoundId::composed_upper, "composed_upper"},
    {BoundId::composed_lower, "composed_lower"},
}};

inline std::string to_string(BoundId id)
{
    for (const auto& [k, name] : kBoundNames)
        if (k == id) return std::string(name);
    return "unknown";
}

inline BoundId bound_from_string(std::string_view s)
{
    for (const auto& [k, name] : kBoundNames)
        if (name == s) return k;
    throw std::invalid_argument("unknown bound id \"" + std::string(s) + "\"");
}

/// Lower bounds estimate the max from below; the rest from above.
inline bool is_lower_bound(BoundId id)
{
    switch (id) {
    case BoundId::aziz_dawood_lower:
    case BoundId::turan:
    case BoundId::govil_lower:
    case BoundId::gap_1_1:
    case BoundId::thm1_1_2:
    case BoundId::thm8_3_1:
    case BoundId::cor10:
    case BoundId::composed_lower:
        return true;
    default:
        return false;
    }
}

/// Polar bounds constrain max|D_alpha p|; the others constrain max|p'|.
inline bool is_polar_bound(BoundId id)
{
    switch (id) {
    case BoundId::thm3_2_3:
    case BoundId::cor5_2_5:
    case BoundId::cor6:
    case BoundId::thm8_3_1:
    case BoundId::cor10:
    case BoundId::composed_upper:
    case BoundId::composed_lower:
        return true;
    default:
        return false;
    }
}

/// value = max_term - min_term for upper bounds, max_term + min_term for
/// lower bounds, where max_term = max_coeff * M1 and min_term = min_coeff * mk.
struct BoundResult {
    BoundId bound_id = BoundId::bernstein;
    bool lower = false;
    double value = 0.0;
    double constant_A = 0.0;
    double max_coeff = 0.0;
    double min_coeff = 0.0;
    double max_term = 0.0;
    double min_term = 0.0;
    bool hypotheses_ok = true;
    bool vacuous = false;

    double recompute() const { return lower ? max_term + min_term : max_term - min_term; }
};

namespace detail {

inline BoundResult assemble(BoundId id, double max_coeff, double min_coeff, double M1, double mk,
                            double A, bool ok)
{
    BoundResult r;
    r.bound_id = id;
    r.lower = is_lower_bound(id);
    r.constant_A = A;
    r.max_coeff = max_coeff;
    r.min_coeff = min_coeff;
    r.max_term = max_coeff * M1;
    r.min_term = min_coeff * mk;
    r.value = r.recompute();
    r.hypotheses_ok = ok;
    r.vacuous = r.lower && r.value <= 0.0;
    return r;
}

inline void check_extrema(double M1, double mk)
{
    if (!(M1 >= 0.0) || !(mk >= 0.0) || !std::isfinite(M1) || !std::isfinite(mk))
        throw std::invalid_argument("circle extrema must be finite and nonnegative");
}

inline void check_degree(unsigned n)
{
    if (n < 1) throw std::invalid_argument("bounds need degree n >= 1");
}

inline double ipow(double x, long e) { return std::pow(x, static_cast<double>(e)); }

inline bool gap_ok(unsigned n, unsigned s, unsigned mu) { return s + 1 <= n && mu >= 1 && mu + s <= n; }

}  // namespace detail

inline BoundResult bernstein_upper(unsigned n, double M1)
{
    detail::check_degree(n);
    detail::check_extrema(M1, 0.0);
    return detail::assemble(BoundId::bernstein, n, 0.0, M1, 0.0, 0.0, true);
}

inline BoundResult lax_upper(unsigned n, double M1)
{
    detail::check_degree(n);
    detail::check_extrema(M1, 0.0);
    return detail::assemble(BoundId::lax, n / 2.0, 0.0, M1, 0.0, 0.0, true);
}

inline BoundResult aziz_dawood_upper(unsigned n, double M1, double m1)
{
    detail::check_degree(n);
    detail::check_extrema(M1, m1);
    if (m1 > M1) throw std::invalid_argument("min on |z|=1 exceeds max on |z|=1");
    return detail::assemble(BoundId::aziz_dawood_upper, n / 2.0, n / 2.0, M1, m1, 0.0, true);
}

inline BoundResult turan_lower(unsigned n, double M1)
{
    detail::check_degree(n);
    detail::check_extrema(M1, 0.0);
    return detail::assemble(BoundId::turan, n / 2.0, 0.0, M1, 0.0, 0.0, true);
}

inline BoundResult aziz_dawood_lower(unsigned n, double M1, double m1)
{
    detail::check_degree(n);
    detail::check_extrema(M1, m1);
    if (m1 > M1) throw std::invalid_argument("min on |z|=1 exceeds max on |z|=1");
    return detail::assemble(BoundId::aziz_dawood_lower, n / 2.0, n / 2.0, M1, m1, 0.0, true);
}

inline BoundResult govil_upper(unsigned n, double k, double M1, double mk)
{
    detail::check_degree(n);
    detail::check_extrema(M1, mk);
    const double c = n / (1.0 + k);
    return detail::assemble(BoundId::govil_upper, c, c, M1, mk, 0.0, k >= 1.0);
}

inline BoundResult govil_lower(unsigned n, double k, double M1, double mk)
{
    detail::check_degree(n);
    detail::check_extrema(M1, mk);
    const double c = n / (1.0 + k);
    return detail::assemble(BoundId::govil_lower, c, c / detail::ipow(k, n - 1L), M1, mk, 0.0,
                            k > 0.0 && k <= 1.0);
}

/// n/(1+k^mu) [M1 + mk / k^{n-mu}] for gap-form p with all zeros in the closed disk of radius k <= 1.
inline BoundResult gap_lower_1_1(unsigned n, unsigned mu, double k, double M1, double mk)
{
    detail::check_degree(n);
    detail::check_extrema(M1, mk);
    const double c = n / (1.0 + detail::ipow(k, mu));
    const double d = c / detail::ipow(k, static_cast<long>(n) - static_cast<long>(mu));
    const bool ok = k > 0.0 && k <= 1.0 && mu >= 1 && mu <= n;
    return detail::assemble(BoundId::gap_1_1, c, d, M1, mk, 0.0, ok);
}

/// Derivative lower bound for one zero z0 (multiplicity s) outside the closed
/// disk of radius k <= 1, remaining gap-form factor inside it.
inline BoundResult thm1_lower(unsigned n, unsigned s, unsigned mu, double k, double z0_mod,
                              double M1, double mk)
{
    detail::check_degree(n);
    detail::check_extrema(M1, mk);
    const double A = detail::ipow(std::abs(1.0 - z0_mod), s) * (n - s) /
                     (1.0 + detail::ipow(k, mu));
    const double c = A / detail::ipow(1.0 + z0_mod, s) - s / (1.0 + z0_mod);
    const long e = static_cast<long>(n) - s - mu;
    const double d = A / (detail::ipow(k, e) * detail::ipow(k + z0_mod, s));
    const bool ok = k > 0.0 && k <= 1.0 && (s == 0 || z0_mod > k) && detail::gap_ok(n, s, mu);
    return detail::assemble(BoundId::thm1_1_2, c, d, M1, mk, A, ok);
}

/// Derivative upper bound for one zero z0 (multiplicity s) in the open unit
/// disk, remaining gap-form factor outside the open disk of radius k >= 1.
inline BoundResult thm2_upper(unsigned n, unsigned s, unsigned mu, double k, double z0_mod,
                              double M1, double mk)
{
    detail::check_degree(n);
    detail::check_extrema(M1, mk);
    if (!(z0_mod < 1.0)) throw std::domain_error("formula is singular for |z0| >= 1");
    const double A = detail::ipow(1.0 + z0_mod, s + 1L) * (n - s) /
                     ((1.0 + detail::ipow(k, mu)) * (1.0 - z0_mod));
    const double c = s / (1.0 - z0_mod) + A / detail::ipow(1.0 - z0_mod, s);
    const double d = A / detail::ipow(k + z0_mod, s);
    const bool ok = k >= 1.0 && z0_mod >= 0.0 && detail::gap_ok(n, s, mu);
    return detail::assemble(BoundId::thm2_1_3, c, d, M1, mk, A, ok);
}

/// Polar-derivative upper bound, same hypotheses as thm2_upper plus |alpha| >= 1.
inline BoundResult thm3_upper(unsigned n, unsigned s, unsigned mu, double k, double z0_mod,
                              double alpha_mod, double M1, double mk)
{
    detail::check_degree(n);
    detail::check_extrema(M1, mk);
    if (!(z0_mod < 1.0)) throw std::domain_error("formula is singular for |z0| >= 1");
    const double A = detail::ipow(1.0 + z0_mod, s + 1L) * (n - s) /
                     ((1.0 + detail::ipow(k, mu)) * (1.0 - z0_mod));
    const double a1 = alpha_mod - 1.0;
    const double c = n + a1 * (s / (1.0 - z0_mod) + A / detail::ipow(1.0 - z0_mod, s));
    const double d = a1 * A / detail::ipow(k + z0_mod, s);
    const bool ok = k >= 1.0 && z0_mod >= 0.0 && alpha_mod >= 1.0 && detail::gap_ok(n, s, mu);
    return detail::assemble(BoundId::thm3_2_3, c, d, M1, mk, A, ok);
}

/// thm3_upper specialised to a zero of multiplicity s at the origin.
inline BoundResult cor5_upper(unsigned n, unsigned s, unsigned mu, double k, double alpha_mod,
                              double M1, double mk)
{
    detail::check_degree(n);
    detail::check_extrema(M1, mk);
    const double km = detail::ipow(k, mu);
    const double c = (alpha_mod * (n + s * km) + (n - s) * km) / (1.0 + km);
    const double d = (alpha_mod - 1.0) * (n - s) / (detail::ipow(k, s) * (1.0 + km));
    const bool ok = k >= 1.0 && alpha_mod >= 1.0 && detail::gap_ok(n, s, mu);
    return detail::assemble(BoundId::cor5_2_5, c, d, M1, mk, (n - s) / (1.0 + km), ok);
}

/// Polar-derivative lower bound, same hypotheses as thm1_lower plus |alpha| >= 1.
inline BoundResult thm8_lower(unsigned n, unsigned s, unsigned mu, double k, double z0_mod,
                              double alpha_mod, double M1, double mk)
{
    detail::check_degree(n);
    detail::check_extrema(M1, mk);
    const double A = detail::ipow(std::abs(1.0 - z0_mod), s) * (n - s) /
                     (1.0 + detail::ipow(k, mu));
    const double a1 = alpha_mod - 1.0;
    const double c = a1 * A / detail::ipow(1.0 + z0_mod, s) -
                     (n + s * (alpha_mod + 1.0) / (1.0 + z0_mod));
    const long e = static_cast<long>(n) - s - mu;
    const double d = a1 * A / (detail::ipow(k, e) * detail::ipow(k + z0_mod, s));
    const bool ok = k > 0.0 && k <= 1.0 && (s == 0 || z0_mod > k) && alpha_mod >= 1.0 &&
                    detail::gap_ok(n, s, mu);
    return detail::assemble(BoundId::thm8_3_1, c, d, M1, mk, A, ok);
}

/// Two distinguished zeros z0 (t0) and z1 (t1) in the open unit disk, written
/// out in closed form.
inline BoundResult cor6_upper(unsigned n, unsigned t0, double z0_mod, unsigned t1, double z1_mod,
                              unsigned mu, double k, double alpha_mod, double M1, double mk)
{
    detail::check_degree(n);
    detail::check_extrema(M1, mk);
    if (!(z0_mod < 1.0) || !(z1_mod < 1.0))
        throw std::domain_error("formula is singular for |z_j| >= 1");
    const double a1 = alpha_mod - 1.0;
    const double A = detail::ipow(1.0 + z0_mod, t0 + 1L) * (n - (t0 + t1)) /
                     ((1.0 + detail::ipow(k, mu)) * (1.0 - z0_mod));
    const double up1 = detail::ipow(1.0 + z1_mod, t1);
    const double dn1 = detail::ipow(1.0 - z1_mod, t1);
    const double c = t1 * (alpha_mod + z1_mod) * detail::ipow(1.0 + z1_mod, t1 - 1L) / dn1 +
                     (n - t1) * up1 / dn1 +
                     a1 * up1 / dn1 * (t0 / (1.0 - z0_mod) + A / detail::ipow(1.0 - z0_mod, t0));
    const double d =
        a1 * up1 * A / (detail::ipow(k + z0_mod, t0) * detail::ipow(k + z1_mod, t1));
    const bool ok = k >= 1.0 && alpha_mod >= 1.0 && t1 >= 1 && detail::gap_ok(n, t0 + t1, mu);
    return detail::assemble(BoundId::cor6, c, d, M1, mk, A, ok);
}

/// Two distinguished zeros z0 (t0) and z1 (t1) outside the closed disk of
/// radius k, written out in closed form.
inline BoundResult cor10_lower(unsigned n, unsigned t0, double z0_mod, unsigned t1, double z1_mod,
                               unsigned mu, double k, double alpha_mod, double M1, double mk)
{
    detail::check_degree(n);
    detail::check_extrema(M1, mk);
    const double a1 = alpha_mod - 1.0;
    const double A = detail::ipow(std::abs(1.0 - z0_mod), t0) * (n - (t1 + t0)) /
                     (1.0 + detail::ipow(k, mu));
    const double g1 = detail::ipow(std::abs(1.0 - z1_mod), t1);
    const double up0 = detail::ipow(1.0 + z0_mod, t0);
    const double up1 = detail::ipow(1.0 + z1_mod, t1);
    const double c = a1 * g1 * A / (up0 * up1) -
                     ((n - t1) * g1 / up1 + t0 * (alpha_mod + 1.0) * g1 / ((1.0 + z0_mod) * up1)) -
                     t1 * (alpha_mod + z1_mod) / (1.0 + z1_mod);
    const long e = static_cast<long>(n) - (t1 + t0) - mu;
    const double d = a1 * g1 * A /
                     (detail::ipow(k, e) * detail::ipow(k + z0_mod, t0) * detail::ipow(k + z1_mod, t1));
    const bool ok = k > 0.0 && k <= 1.0 && z0_mod > k && z1_mod > k && alpha_mod >= 1.0 &&
                    t1 >= 1 && detail::gap_ok(n, t0 + t1, mu);
    return detail::assemble(BoundId::cor10, c, d, M1, mk, A, ok);
}

struct ZeroModulus {
    double mod;
    unsigned t;
};

enum class PeelOrder { given, exhaustive };

namespace detail {

inline unsigned total_mult(std::span<const ZeroModulus> zs)
{
    unsigned s = 0;
    for (const auto& z : zs) s += z.t;
    return s;
}

// The first entry is the base zero z_0; entries 1..m are peeled in order.
inline BoundResult composed_upper_in_order(std::span<const ZeroModulus> zs, unsigned n, unsigned mu,
                                           double k, double alpha_mod, double M1, double mk)
{
    if (total_mult(zs) + 1 > n) throw std::invalid_argument("distinguished multiplicities exceed n - 1");
    const unsigned peeled = total_mult(zs.subspan(std::min<std::size_t>(1, zs.size())));
    const unsigned n0 = n - peeled;
    const unsigned t0 = zs.empty() ? 0 : zs[0].t;
    const double z0 = zs.empty() ? 0.0 : zs[0].mod;
    const BoundResult base = thm3_upper(n0, t0, mu, k, z0, alpha_mod, M1, mk);

    double cmax = base.max_coeff;
    double cmin = base.min_coeff;
    for (std::size_t j = 1; j < zs.size(); ++j) {
        const double z = zs[j].mod;
        const unsigned t = zs[j].t;
        const double up = ipow(1.0 + z, t);
        cmax = (cmax * up + t * (alpha_mod + z) * ipow(1.0 + z, t - 1L)) / ipow(1.0 - z, t);
        cmin = cmin * up / ipow(k + z, t);
    }
    BoundResult r = assemble(BoundId::composed_upper, cmax, cmin, M1, mk, base.constant_A,
                             base.hypotheses_ok);
    return r;
}

inline BoundResult composed_lower_in_order(std::span<const ZeroModulus> zs, unsigned n, unsigned mu,
                                           double k, double alpha_mod, double M1, double mk)
{
    if (total_mult(zs) + 1 > n) throw std::invalid_argument("distinguished multiplicities exceed n - 1");
    const unsigned peeled = total_mult(zs.subspan(std::min<std::size_t>(1, zs.size())));
    const unsigned n0 = n - peeled;
    const unsigned t0 = zs.empty() ? 0 : zs[0].t;
    const double z0 = zs.empty() ? 0.0 : zs[0].mod;
    const BoundResult base = thm8_lower(n0, t0, mu, k, z0, alpha_mod, M1, mk);

    double cmax = base.max_coeff;
    double cmin = base.min_coeff;
    for (std::size_t j = 1; j < zs.size(); ++j) {
        const double z = zs[j].mod;
        const unsigned t = zs[j].t;
        const double shrink = ipow(std::abs(1.0 - z), t);
        cmax = (shrink * cmax - t * (alpha_mod + z) * ipow(1.0 + z, t - 1L)) / ipow(1.0 + z, t);
        cmin = shrink * cmin / ipow(k + z, t);
    }
    return assemble(BoundId::composed_lower, cmax, cmin, M1, mk, base.constant_A,
                    base.hypotheses_ok);
}

template <class F>
BoundResult best_over_orders(std::vector<ZeroModulus> zs, bool keep_min, F&& eval)
{
    if (zs.size() > 7) throw std::invalid_argument("exhaustive peel order supports at most 7 distinguished zeros");
    std::vector<std::size_t> idx(zs.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::optional<BoundResult> best;
    std::vector<ZeroModulus> ordered(zs.size());
    do {
        for (std::size_t i = 0; i < idx.size(); ++i) ordered[i] = zs[idx[i]];
        BoundResult r = eval(std::span<const ZeroModulus>(ordered));
        if (!best || (keep_min ? r.value < best->value : r.value > best->value)) best = r;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return *best;
}

}  // namespace detail

/// Upper bound for several distinguished zeros in the open unit disk. The
/// base case applies thm3_upper to p_0 (the first zero plus the gap factor);
/// every further zero (z_j, t_j) is multiplied back in, in list order.
inline BoundResult composed_upper(std::span<const ZeroModulus> zs, unsigned n, unsigned mu,
                                  double k, double alpha_mod, double M1, double mk,
                                  PeelOrder order = PeelOrder::given)
{
    detail::check_degree(n);
    detail::check_extrema(M1, mk);
    for (const auto& z : zs)
        if (!(z.mod < 1.0)) throw std::domain_error("composed upper bound needs every |z_j| < 1");
    auto run = [&](std::span<const ZeroModulus> o) {
        return detail::composed_upper_in_order(o, n, mu, k, alpha_mod, M1, mk);
    };
    if (order == PeelOrder::given || zs.size() < 2) return run(zs);
    return detail::best_over_orders({zs.begin(), zs.end()}, /*keep_min=*/true, run);
}

/// Lower-regime counterpart of composed_upper, built on thm8_lower.
inline BoundResult composed_lower(std::span<const ZeroModulus> zs, unsigned n, unsigned mu,
                                  double k, double alpha_mod, double M1, double mk,
                                  PeelOrder order = PeelOrder::given)
{
    detail::check_degree(n);
    detail::check_extrema(M1, mk);
    for (const auto& z : zs)
        if (!(z.mod > k)) throw std::domain_error("composed lower bound needs every |z_j| > k");
    auto run = [&](std::span<const ZeroModulus> o) {
        return detail::composed_lower_in_order(o, n, mu, k, alpha_mod, M1, mk);
    };
    if (order == PeelOrder::given || zs.size() < 2) return run(zs);
    return detail::best_over_orders({zs.begin(), zs.end()}, /*keep_min=*/false, run);
}

}  // namespace polarbound

#endif  // POLARBOUND_BOUNDS_HPP
