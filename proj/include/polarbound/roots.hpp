#ifndef POLARBOUND_ROOTS_HPP
#define POLARBOUND_ROOTS_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>

#include "polynomial.hpp"

namespace polarbound {

inline constexpr double kDefaultClusterTol = 1e-4;

/// All roots of p, without clustering, from the companion matrix of the
/// monic normalization.
inline std::vector<cplx> raw_roots(const Polynomial& p)
{
    const std::size_t n = p.degree();
    if (n == 0)
        throw std::invalid_argument("roots of a constant are undefined");
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    const cplx lead = p.leading();
    for (std::size_t i = 1; i < n; ++i)
        companion(i, i - 1) = 1.0;
    for (std::size_t i = 0; i < n; ++i)
        companion(i, n - 1) = -p[i] / lead;

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("companion eigenvalue iteration failed");
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

/// Relative size below which the low-order Taylor coefficients of p at a
/// cluster centroid count as zero.
inline constexpr double kMultiplicityEps = 1e-10;

namespace detail {

/// Coefficients of p(c + w) in powers of w, lowest first.
inline std::vector<cplx> taylor_shift(std::vector<cplx> a, cplx c)
{
    const std::size_t n = a.size();
    for (std::size_t j = 0; j + 1 < n; ++j)
        for (std::size_t i = n - 1; i > j; --i) a[i - 1] += c * a[i];
    return a;
}

/// True when p has a root of multiplicity m at c up to rounding: the Taylor
/// coefficients of order below m are negligible next to the same expansion
/// of sum |a_i| x^i at |c|.
inline bool is_multiple_root(const Polynomial& p, cplx c, std::size_t m)
{
    std::vector<cplx> mag(p.degree() + 1);
    for (std::size_t i = 0; i <= p.degree(); ++i) mag[i] = std::abs(p[i]);
    const auto b = taylor_shift({p.coeffs().begin(), p.coeffs().end()}, c);
    const auto s = taylor_shift(mag, std::abs(c));
    for (std::size_t j = 0; j < m; ++j)
        if (std::abs(b[j]) > kMultiplicityEps * s[j].real()) return false;
    return true;
}

/// Single-linkage components of the points idx, with distance measured
/// relative to max(1, |z|).
inline std::vector<std::vector<std::size_t>> link(const std::vector<cplx>& r,
                                                  const std::vector<std::size_t>& idx, double tol)
{
    const std::size_t n = idx.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx a = r[idx[i]], b = r[idx[j]];
            if (std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)}))
                parent[find(i)] = find(j);
        }
    std::vector<std::vector<std::size_t>> groups;
    std::vector<std::size_t> owner(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t g = find(i);
        if (owner[g] == n) {
            owner[g] = groups.size();
            groups.emplace_back();
        }
        groups[owner[g]].push_back(idx[i]);
    }
    return groups;
}

inline cplx centroid(const std::vector<cplx>& r, const std::vector<std::size_t>& g)
{
    cplx c = 0.0;
    for (std::size_t i : g) c += r[i];
    return c / static_cast<double>(g.size());
}

}  // namespace detail

/// Roots with multiplicity.
///
/// The eigenvalues of an m-fold root scatter on a circle of radius about
/// eps^{1/m}, so nearby eigenvalues are grouped at coarse radii first and a
/// group is kept when p has a numerically exact m-fold root at its centroid;
/// otherwise it is split at a tenth of the radius. Below that, eigenvalues
/// within cluster_tol (relative to max(1, |z|)) always merge. Each root is
/// reported at its group centroid, which is far more accurate than the
/// individual perturbed eigenvalues.
///
/// Output is sorted by modulus, then argument.
namespace detail {

/// Newton on p^(m-1), where a root of multiplicity m is simple. Steps are
/// kept only while they shrink the residual and stay near the centroid.
inline cplx polish(const Polynomial& p, cplx c, unsigned m)
{
    if (m < 2 || m > p.degree()) return c;
    Polynomial q = p;
    for (unsigned j = 1; j < m; ++j) q = derivative(q);
    const Polynomial dq = derivative(q);
    const double reach = 1e-6 * std::max(1.0, std::abs(c));
    cplx z = c;
    double res = std::abs(eval(q, z));
    for (int it = 0; it < 8 && res > 0.0; ++it) {
        const cplx d = eval(dq, z);
        if (d == cplx{}) break;
        const cplx next = z - eval(q, z) / d;
        const double nres = std::abs(eval(q, next));
        if (!(nres < res) || std::abs(next - c) > reach) break;
        z = next;
        res = nres;
    }
    return z;
}

}  // namespace detail

inline std::vector<RootFactor> roots(const Polynomial& p,
                                     double cluster_tol = kDefaultClusterTol)
{
    const std::vector<cplx> r = raw_roots(p);
    std::vector<std::size_t> all(r.size());
    std::iota(all.begin(), all.end(), std::size_t{0});

    std::vector<RootFactor> out;
    std::vector<std::pair<std::vector<std::size_t>, double>> work{{all, 1e-1}};
    while (!work.empty()) {
        auto [idx, tol] = std::move(work.back());
        work.pop_back();
        if (tol <= cluster_tol) {
            for (const auto& g : detail::link(r, idx, cluster_tol))
                out.push_back({detail::polish(p, detail::centroid(r, g), static_cast<unsigned>(g.size())),
                               static_cast<unsigned>(g.size())});
            continue;
        }
        for (auto& g : detail::link(r, idx, tol)) {
            const cplx c = detail::centroid(r, g);
            if (g.size() == 1 || detail::is_multiple_root(p, c, g.size()))
                out.push_back({detail::polish(p, c, static_cast<unsigned>(g.size())),
                               static_cast<unsigned>(g.size())});
            else
                work.push_back({std::move(g), tol / 10.0});
        }
    }

    std::sort(out.begin(), out.end(), [](const RootFactor& a, const RootFactor& b) {
        const double ma = std::abs(a.root), mb = std::abs(b.root);
        if (ma != mb) return ma < mb;
        return std::arg(a.root) < std::arg(b.root);
    });
    return out;
}

}  // namespace polarbound

#endif  // POLARBOUND_ROOTS_HPP
