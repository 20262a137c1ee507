#ifndef POLARBOUND_ZERO_STRUCTURE_HPP
#define POLARBOUND_ZERO_STRUCTURE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "io.hpp"
#include "polynomial.hpp"
#include "roots.hpp"

namespace polarbound {

inline constexpr double kDefaultMargin = 1e-6;

/// Upper: k >= 1, distinguished zeros in the open unit disk, the rest outside
/// the open disk of radius k. Lower: k <= 1, distinguished zeros outside the
/// closed disk of radius k, the rest inside it.
enum class Regime { upper, lower };

inline std::string to_string(Regime r) { return r == Regime::upper ? "upper" : "lower"; }

inline Regime regime_from_string(const std::string& s)
{
    if (s == "upper") return Regime::upper;
    if (s == "lower") return Regime::lower;
    throw std::invalid_argument("regime must be \"upper\" or \"lower\", got \"" + s + "\"");
}

struct DistinguishedZero {
    cplx z;
    unsigned t;
};

struct ZeroPattern {
    unsigned n = 0;
    std::vector<DistinguishedZero> distinguished;
    unsigned mu = 1;
    double k = 1.0;
    Regime regime = Regime::upper;

    unsigned distinguished_degree() const
    {
        unsigned s = 0;
        for (const auto& d : distinguished) s += d.t;
        return s;
    }
    unsigned base_degree() const { return n - distinguished_degree(); }

    /// Throws std::invalid_argument when an invariant fails.
    void validate() const
    {
        if (!(k > 0.0) || !std::isfinite(k))
            throw std::invalid_argument("k must be a positive finite real");
        for (const auto& d : distinguished)
            if (d.t == 0) throw std::invalid_argument("multiplicity t_j must be positive");
        const unsigned s = distinguished_degree();
        if (n == 0 || s + 1 > n)
            throw std::invalid_argument("need 0 <= sum t_j <= n - 1");
        if (mu < 1 || mu > n - s)
            throw std::invalid_argument("need 1 <= mu <= n - sum t_j");
        if (regime == Regime::upper) {
            if (k < 1.0) throw std::invalid_argument("upper regime requires k >= 1");
            for (const auto& d : distinguished)
                if (!(std::abs(d.z) < 1.0))
                    throw std::invalid_argument("upper regime requires |z_j| < 1");
        } else {
            if (k > 1.0) throw std::invalid_argument("lower regime requires k <= 1");
            for (const auto& d : distinguished)
                if (!(std::abs(d.z) > k))
                    throw std::invalid_argument("lower regime requires |z_j| > k");
        }
    }
};

inline std::string to_json(const ZeroPattern& pat)
{
    std::string out = "{\"n\":" + std::to_string(pat.n) + ",\"k\":" + format_number(pat.k) +
                      ",\"regime\":" + json_string(to_string(pat.regime)) +
                      ",\"mu\":" + std::to_string(pat.mu) + ",\"distinguished\":[";
    for (std::size_t j = 0; j < pat.distinguished.size(); ++j) {
        const auto& d = pat.distinguished[j];
        if (j) out += ',';
        out += '[' + format_number(d.z.real()) + ',' + format_number(d.z.imag()) + ',' +
               std::to_string(d.t) + ']';
    }
    return out + "]}";
}

inline ZeroPattern pattern_from_json(const nlohmann::json& j)
{
    try {
        ZeroPattern pat;
        pat.n = j.at("n").get<unsigned>();
        pat.k = j.at("k").get<double>();
        pat.regime = regime_from_string(j.at("regime").get<std::string>());
        pat.mu = j.value("mu", 1u);
        for (const auto& e : j.value("distinguished", nlohmann::json::array())) {
            if (!e.is_array() || e.size() != 3)
                throw std::invalid_argument("distinguished entries must be [re, im, t]");
            pat.distinguished.push_back(
                {cplx(e[0].get<double>(), e[1].get<double>()), e[2].get<unsigned>()});
        }
        pat.validate();
        return pat;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed pattern JSON: ") + e.what());
    }
}

inline ZeroPattern pattern_from_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed pattern JSON: ") + e.what());
    }
    return pattern_from_json(j);
}

/// Relative coefficient threshold used when reading the gap of a base factor
/// rebuilt from numerically computed roots.
inline constexpr double kClassifyGapEps = 1e-9;

/// Splits the roots of p into distinguished and remaining zeros according to
/// the regime's disk tests. A root within margin of |z| = k is treated as
/// lying on that circle, which both regimes allow for remaining zeros.
///
/// mu is the gap index of the monic base factor, p with the distinguished
/// factors divided out; a remaining zero within margin of the origin forces
/// mu = 1.
inline ZeroPattern classify(const Polynomial& p, double k, Regime regime,
                            double margin = kDefaultMargin,
                            double cluster_tol = kDefaultClusterTol)
{
    if (p.degree() < 1) throw std::invalid_argument("classify needs degree >= 1");
    if (!(k > 0.0)) throw std::invalid_argument("k must be positive");
    if (regime == Regime::upper && k < 1.0)
        throw std::domain_error("hypotheses not satisfied: upper regime requires k >= 1");
    if (regime == Regime::lower && k > 1.0)
        throw std::domain_error("hypotheses not satisfied: lower regime requires k <= 1");

    ZeroPattern pat;
    pat.n = static_cast<unsigned>(p.degree());
    pat.k = k;
    pat.regime = regime;
    std::vector<RootFactor> remaining;

    auto near = [margin](double x, double c) { return std::abs(x - c) <= margin; };
    for (const auto& f : roots(p, cluster_tol)) {
        const double mod = std::abs(f.root);
        if (near(mod, k)) {
            remaining.push_back(f);
            continue;
        }
        if (regime == Regime::upper) {
            if (near(mod, 1.0)) {
                std::ostringstream msg;
                msg << "root within margin of |z| = 1 (|z| = " << mod << ")";
                throw std::domain_error(msg.str());
            }
            if (mod < 1.0) {
                pat.distinguished.push_back({f.root, f.multiplicity});
            } else if (mod > k) {
                remaining.push_back(f);
            } else {
                std::ostringstream msg;
                msg << "hypotheses not satisfied: root with 1 <= |z| = " << mod << " < k";
                throw std::domain_error(msg.str());
            }
        } else {
            if (mod > k) pat.distinguished.push_back({f.root, f.multiplicity});
            else remaining.push_back(f);
        }
    }

    if (remaining.empty())
        throw std::domain_error("hypotheses not satisfied: no remaining zeros for the base factor");

    Polynomial base = p;
    for (const auto& d : pat.distinguished)
        for (unsigned t = 0; t < d.t; ++t) base = deflate(base, d.z, regime == Regime::lower);
    double reach = 0.0;
    for (const auto& f : remaining) reach = std::max(reach, std::abs(f.root));
    for (const auto& f : remaining)
        if (std::abs(f.root) <= margin) {
            pat.mu = 1;
            return pat;
        }
    // Read the gap with the remaining zeros rescaled into the unit disk so
    // small but genuine coefficients are not mistaken for zeros.
    base = compose_scale(base, reach);
    pat.mu = static_cast<unsigned>(base.degree());
    const double cut = kClassifyGapEps * base.max_abs_coeff();
    for (std::size_t v = 1; v <= base.degree(); ++v)
        if (std::abs(base[v]) > cut) {
            pat.mu = static_cast<unsigned>(v);
            break;
        }
    return pat;
}

/// z^s (z + k)^{n-s}
inline Polynomial make_sharp_monomial_family(unsigned n, unsigned s, double k)
{
    if (n < 1 || s > n - 1) throw std::invalid_argument("need 0 <= s <= n - 1");
    if (k < 1.0) throw std::invalid_argument("monomial family requires k >= 1");
    const std::vector<RootFactor> r{{0.0, s}, {-k, n - s}};
    return from_roots(r);
}

/// (z^mu + k^mu)^{n/mu}
inline Polynomial make_sharp_gap_family(unsigned n, unsigned mu, double k)
{
    if (mu < 1 || n < 1 || n % mu != 0) throw std::invalid_argument("mu must divide n");
    if (!(k > 0.0) || k > 1.0) throw std::invalid_argument("gap family requires 0 < k <= 1");
    std::vector<cplx> base(mu + 1, cplx{});
    base[0] = std::pow(k, static_cast<double>(mu));
    base[mu] = 1.0;
    return pow(Polynomial(std::move(base)), n / mu);
}

/// prod_i (z^mu + c_i); roots of each factor have modulus |c_i|^{1/mu}.
inline Polynomial make_gap_product(unsigned mu, std::span<const cplx> cs)
{
    if (mu < 1) throw std::invalid_argument("mu must be positive");
    Polynomial acc = Polynomial::constant(1.0);
    for (const cplx& c : cs) {
        if (c == cplx{}) throw std::invalid_argument("gap product factors need c_i != 0");
        std::vector<cplx> f(mu + 1, cplx{});
        f[0] = c;
        f[mu] = 1.0;
        acc = acc * Polynomial(std::move(f));
    }
    return acc;
}

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Per-instance seed for parallel-safe sweeps.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index)
{
    return splitmix64(splitmix64(base) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

struct SampleOptions {
    /// Distance kept from every disk boundary when sampling moduli.
    double margin = 1e-2;
    /// Largest modulus of a sampled lower-regime distinguished zero.
    double lower_modulus_cap = 2.0;
    /// Remaining upper-regime zeros get modulus in [k + margin, k + upper_spread].
    double upper_spread = 2.0;
    /// When false the pattern's own z_j are used instead of fresh samples.
    bool resample_distinguished = true;
};

/// Random polynomial matching the pattern's regime, k, multiplicities and gap.
/// Deterministic for a given seed.
inline Polynomial sample_instance(const ZeroPattern& pat, std::uint64_t seed,
                                  const SampleOptions& opt = {})
{
    pat.validate();
    const unsigned base_deg = pat.base_degree();
    if (base_deg % pat.mu != 0)
        throw std::invalid_argument("infeasible pattern: base degree " + std::to_string(base_deg) +
                                    " is not a multiple of mu = " + std::to_string(pat.mu));

    std::mt19937_64 rng(splitmix64(seed));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto angle = [&] { return 2.0 * std::numbers::pi * unit(rng); };
    auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };

    const double k = pat.k;
    const double m = opt.margin;
    double dist_lo, dist_hi, rem_lo, rem_hi;
    if (pat.regime == Regime::upper) {
        dist_lo = 0.0;
        dist_hi = 1.0 - m;
        rem_lo = k + m;
        rem_hi = k + opt.upper_spread;
    } else {
        dist_lo = k + m;
        dist_hi = std::max(opt.lower_modulus_cap, k + 2.0 * m);
        rem_lo = 0.0;
        rem_hi = k - m;
    }
    if (rem_hi <= rem_lo || dist_hi <= dist_lo)
        throw std::invalid_argument("infeasible pattern: sampling region is empty");

    std::vector<RootFactor> factors;
    for (const auto& d : pat.distinguished) {
        cplx z = d.z;
        if (opt.resample_distinguished) z = std::polar(uniform(dist_lo, dist_hi), angle());
        factors.push_back({z, d.t});
    }

    const cplx leading = std::polar(uniform(0.5, 2.0), angle());
    Polynomial p = from_roots(factors, leading);
    if (pat.mu == 1) {
        std::vector<RootFactor> rem;
        for (unsigned i = 0; i < base_deg; ++i)
            rem.push_back({std::polar(uniform(rem_lo, rem_hi), angle()), 1});
        p = p * from_roots(rem);
    } else {
        std::vector<cplx> cs;
        for (unsigned i = 0; i < base_deg / pat.mu; ++i) {
            const double rho = uniform(std::max(rem_lo, m), rem_hi);
            cs.push_back(std::polar(std::pow(rho, static_cast<double>(pat.mu)), angle()));
        }
        p = p * make_gap_product(pat.mu, cs);
    }
    return p;
}

/// Degree uniform in [1, max_degree], coefficients standard complex normal.
inline Polynomial random_polynomial(std::uint64_t seed, unsigned max_degree)
{
    if (max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
    std::mt19937_64 rng(splitmix64(seed));
    std::uniform_int_distribution<unsigned> deg(1, max_degree);
    std::normal_distribution<double> normal;
    const unsigned n = deg(rng);
    std::vector<cplx> a(n + 1);
    for (auto& c : a) c = cplx(normal(rng), normal(rng));
    while (a.back() == cplx{}) a.back() = cplx(normal(rng), normal(rng));
    return Polynomial(std::move(a));
}

}  // namespace polarbound

#endif  // POLARBOUND_ZERO_STRUCTURE_HPP
