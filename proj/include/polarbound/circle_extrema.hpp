#ifndef POLARBOUND_CIRCLE_EXTREMA_HPP
#define POLARBOUND_CIRCLE_EXTREMA_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "polynomial.hpp"
#include "roots.hpp"

namespace polarbound {

inline constexpr double kDefaultExtremumTol = 1e-9;

enum class ExtremumKind { max, min };

/// Extremum of |p| on the circle |z| = r.
///
/// value is attained at r*exp(i*witness_angle). The true extremum lies in
/// [value, value + error_radius] for a max and [value - error_radius, value]
/// for a min.
struct ExtremumResult {
    double value = 0.0;
    double witness_angle = 0.0;
    double error_radius = 0.0;
    ExtremumKind kind = ExtremumKind::max;
};

/// L = sum_v v |a_v| r^v bounds |d/dtheta p(r e^{i theta})|, hence the
/// Lipschitz constant of theta -> |p(r e^{i theta})|.
inline double angular_lipschitz_bound(const Polynomial& p, double r)
{
    double L = 0.0;
    double rv = r;
    for (std::size_t v = 1; v <= p.degree(); ++v) {
        L += static_cast<double>(v) * std::abs(p[v]) * rv;
        rv *= r;
    }
    return L;
}

inline double normalize_angle(double theta)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double t = std::fmod(theta, two_pi);
    if (t < 0.0) t += two_pi;
    if (t >= two_pi) t = 0.0;
    return t;
}

namespace detail {

struct CircleSample {
    double theta;
    double g;   // |p|^2
    double dg;  // d/dtheta |p|^2
};

/// g(theta) = |p(r e^{i theta})|^2 is a real trigonometric polynomial
/// sum_{|j|<=n} c_j e^{i j theta}; curvature() = sum j^2 |c_j| bounds |g''|.
class CircleObjective {
public:
    CircleObjective(const Polynomial& p, double r) : p_(p), r_(r)
    {
        const std::size_t n = p.degree();
        std::vector<double> rpow(2 * n + 1, 1.0);
        for (std::size_t i = 1; i < rpow.size(); ++i) rpow[i] = rpow[i - 1] * r;
        for (std::size_t j = 1; j <= n; ++j) {
            cplx c{};
            for (std::size_t v = 0; v + j <= n; ++v)
                c += p[v + j] * std::conj(p[v]) * rpow[2 * v + j];
            curvature_ += 2.0 * static_cast<double>(j * j) * std::abs(c);
        }
        double s = 0.0;
        for (std::size_t v = 0; v <= n; ++v) s += std::abs(p[v]) * rpow[v];
        abs_sum_ = s;
    }

    CircleSample sample(double theta) const
    {
        const cplx z = std::polar(r_, theta);
        const auto [val, der] = eval_with_derivative(p_, z);
        const double g = std::norm(val);
        const double dg = 2.0 * std::real(std::conj(val) * der * cplx(0.0, 1.0) * z);
        return {theta, g, dg};
    }

    double modulus(double theta) const { return std::abs(eval(p_, std::polar(r_, theta))); }

    double curvature() const { return curvature_; }

    /// Horner rounding floor for |p| on the circle.
    double rounding_floor() const
    {
        return 4.0 * static_cast<double>(p_.degree() + 1) *
               std::numeric_limits<double>::epsilon() * abs_sum_;
    }

private:
    const Polynomial& p_;
    double r_;
    double curvature_ = 0.0;
    double abs_sum_ = 0.0;
};

inline constexpr std::size_t kMaxCertificateEvals = 2'000'000;
inline constexpr double kMinCellWidth = 1e-13;

/// Golden-section search for the extremum of |p| inside [a, b]; stops when
/// (b - a) * lipschitz <= tol. Returns the best evaluated point.
inline std::pair<double, double> golden_refine(const CircleObjective& obj, double a, double b,
                                               bool maximize, double lipschitz, double tol)
{
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    auto better = [maximize](double x, double y) { return maximize ? x > y : x < y; };
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = obj.modulus(c);
    double fd = obj.modulus(d);
    double best_t = better(fc, fd) ? c : d;
    double best_f = better(fc, fd) ? fc : fd;
    for (int it = 0; it < 200 && (b - a) * lipschitz > tol && (b - a) > kMinCellWidth; ++it) {
        if (better(fc, fd)) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = obj.modulus(c);
            if (better(fc, best_f)) { best_f = fc; best_t = c; }
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = obj.modulus(d);
            if (better(fd, best_f)) { best_f = fd; best_t = d; }
        }
    }
    return {best_t, best_f};
}

/// Two-phase search plus a branch-and-bound certificate over every grid cell.
///
/// Cell bounds come from the second-order Taylor envelope of g = |p|^2 at
/// each endpoint, using the curvature bound of the trigonometric polynomial.
inline ExtremumResult circle_extremum(const Polynomial& p, double r, double tol, bool maximize)
{
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (!(r > 0.0)) throw std::invalid_argument("radius must be positive");
    const ExtremumKind kind = maximize ? ExtremumKind::max : ExtremumKind::min;
    if (p.degree() == 0)
        return {std::abs(p[0]), 0.0, 0.0, kind};

    constexpr double two_pi = 2.0 * std::numbers::pi;
    const CircleObjective obj(p, r);
    const double lipschitz = angular_lipschitz_bound(p, r);
    const double tol_eff = std::max(tol, obj.rounding_floor());

    // Phase 1: uniform grid.
    const std::size_t m = std::max<std::size_t>(4096, 64 * p.degree());
    const double h = two_pi / static_cast<double>(m);
    std::vector<CircleSample> grid(m + 1);
    for (std::size_t i = 0; i < m; ++i)
        grid[i] = obj.sample(h * static_cast<double>(i));
    grid[m] = grid[0];
    grid[m].theta = two_pi;

    auto better_g = [maximize](double x, double y) { return maximize ? x > y : x < y; };
    std::size_t best_i = 0;
    for (std::size_t i = 1; i < m; ++i)
        if (better_g(grid[i].g, grid[best_i].g)) best_i = i;

    double best_theta = grid[best_i].theta;
    double best_f = std::sqrt(grid[best_i].g);

    // Phase 2: golden-section refinement of the best bracket.
    {
        const double center = grid[best_i].theta;
        auto [t, f] = golden_refine(obj, center - h, center + h, maximize, lipschitz, tol_eff);
        if (maximize ? f > best_f : f < best_f) {
            best_theta = t;
            best_f = f;
        }
    }

    // Phase 3: certificate. A min at or below the tolerance is certified by |p| >= 0.
    const double K = obj.curvature();
    double worst_bound_g = maximize ? 0.0 : std::numeric_limits<double>::infinity();
    bool trivially_certified = !maximize && best_f <= tol_eff;

    if (!trivially_certified) {
        auto threshold = [&]() {
            if (maximize) {
                const double u = best_f + tol_eff;
                return u * u;
            }
            const double l = best_f - tol_eff;
            return l > 0.0 ? l * l : -1.0;
        };
        double T = threshold();

        struct Cell {
            CircleSample a, b;
        };
        std::vector<Cell> stack;
        stack.reserve(256);
        for (std::size_t i = m; i-- > 0;)
            stack.push_back({grid[i], grid[i + 1]});

        std::size_t evals = 0;
        while (!stack.empty()) {
            const Cell cell = stack.back();
            stack.pop_back();
            const double w = cell.b.theta - cell.a.theta;
            double bound;
            if (maximize) {
                const double ua = std::max(cell.a.g, cell.a.g + cell.a.dg * w + 0.5 * K * w * w);
                const double ub = std::max(cell.b.g, cell.b.g - cell.b.dg * w + 0.5 * K * w * w);
                bound = std::min(ua, ub);
            } else {
                const double la = std::min(cell.a.g, cell.a.g + cell.a.dg * w - 0.5 * K * w * w);
                const double lb = std::min(cell.b.g, cell.b.g - cell.b.dg * w - 0.5 * K * w * w);
                bound = std::max(la, lb);
            }
            const bool resolved = maximize ? bound <= T : bound >= T;
            if (resolved || w <= kMinCellWidth || evals >= kMaxCertificateEvals) {
                worst_bound_g = maximize ? std::max(worst_bound_g, bound)
                                         : std::min(worst_bound_g, bound);
                continue;
            }
            const CircleSample mid = obj.sample(0.5 * (cell.a.theta + cell.b.theta));
            ++evals;
            if (better_g(mid.g, best_f * best_f)) {
                best_f = std::sqrt(mid.g);
                best_theta = mid.theta;
                if (!maximize && best_f <= tol_eff) {
                    trivially_certified = true;
                    break;
                }
                T = threshold();
            }
            stack.push_back({mid, cell.b});
            stack.push_back({cell.a, mid});
        }
    }

    ExtremumResult res;
    res.kind = kind;
    res.witness_angle = normalize_angle(best_theta);
    res.value = obj.modulus(res.witness_angle);
    if (maximize) {
        res.error_radius = std::max(0.0, std::sqrt(std::max(0.0, worst_bound_g)) - res.value);
    } else if (trivially_certified) {
        res.error_radius = res.value;
    } else {
        res.error_radius = std::max(0.0, res.value - std::sqrt(std::max(0.0, worst_bound_g)));
    }
    return res;
}

}  // namespace detail

/// Certified max of |p(z)| over |z| = r.
inline ExtremumResult max_modulus(const Polynomial& p, double r, double tol = kDefaultExtremumTol)
{
    return detail::circle_extremum(p, r, tol, /*maximize=*/true);
}

/// Certified min of |p(z)| over |z| = r. A root within tol / max(L, 1) of the
/// circle short-circuits the search: the witness is the root's direction.
inline ExtremumResult min_modulus(const Polynomial& p, double r, double tol = kDefaultExtremumTol)
{
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (p.degree() >= 1) {
        const double reach = tol / std::max(angular_lipschitz_bound(p, r), 1.0);
        for (const auto& f : roots(p)) {
            if (std::abs(std::abs(f.root) - r) <= reach) {
                ExtremumResult res;
                res.kind = ExtremumKind::min;
                res.witness_angle = normalize_angle(std::arg(f.root));
                res.value = std::abs(eval(p, std::polar(r, res.witness_angle)));
                res.error_radius = std::max(tol, res.value);
                return res;
            }
        }
    }
    return detail::circle_extremum(p, r, tol, /*maximize=*/false);
}

}  // namespace polarbound

#endif  // POLARBOUND_CIRCLE_EXTREMA_HPP
