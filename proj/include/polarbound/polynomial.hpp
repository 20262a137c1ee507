#ifndef POLARBOUND_POLYNOMIAL_HPP
#define POLARBOUND_POLYNOMIAL_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace polarbound {

using cplx = std::complex<double>;

/// Relative threshold below which a coefficient counts as zero.
inline constexpr double kDefaultCoeffEps = 1e-12;

/// Univariate polynomial with complex coefficients, ascending powers.
///
/// The leading coefficient is always nonzero and every coefficient is finite.
/// The zero polynomial cannot be represented; constructing one throws.
class Polynomial {
public:
    explicit Polynomial(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs))
    {
        for (const auto& c : coeffs_) {
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
                throw std::invalid_argument("polynomial coefficient is not finite");
        }
        while (!coeffs_.empty() && coeffs_.back() == cplx{})
            coeffs_.pop_back();
        if (coeffs_.empty())
            throw std::invalid_argument("zero polynomial is not representable");
    }

    Polynomial(std::initializer_list<cplx> coeffs)
        : Polynomial(std::vector<cplx>(coeffs)) {}

    static Polynomial constant(cplx c) { return Polynomial({c}); }

    /// c * z^n
    static Polynomial monomial(std::size_t n, cplx c = 1.0)
    {
        std::vector<cplx> a(n + 1, cplx{});
        a[n] = c;
        return Polynomial(std::move(a));
    }

    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    std::span<const cplx> coeffs() const noexcept { return coeffs_; }
    const cplx& operator[](std::size_t v) const { return coeffs_.at(v); }
    const cplx& leading() const noexcept { return coeffs_.back(); }

    double max_abs_coeff() const noexcept
    {
        double m = 0.0;
        for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
        return m;
    }

    /// Drops trailing coefficients with |a_v| <= eps_rel * max|a|.
    Polynomial trimmed(double eps_rel = kDefaultCoeffEps) const
    {
        const double cut = eps_rel * max_abs_coeff();
        std::vector<cplx> a = coeffs_;
        while (a.size() > 1 && std::abs(a.back()) <= cut)
            a.pop_back();
        return Polynomial(std::move(a));
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<cplx> coeffs_;
};

/// Nested (Horner) evaluation.
inline cplx eval(const Polynomial& p, cplx z) noexcept
{
    const auto a = p.coeffs();
    cplx acc = a.back();
    for (std::size_t v = a.size() - 1; v-- > 0;)
        acc = acc * z + a[v];
    return acc;
}

/// Evaluates p and p' together in one Horner pass.
inline std::pair<cplx, cplx> eval_with_derivative(const Polynomial& p, cplx z) noexcept
{
    const auto a = p.coeffs();
    cplx val = a.back();
    cplx der{};
    for (std::size_t v = a.size() - 1; v-- > 0;) {
        der = der * z + val;
        val = val * z + a[v];
    }
    return {val, der};
}

inline Polynomial derivative(const Polynomial& p)
{
    const std::size_t n = p.degree();
    if (n == 0)
        throw std::invalid_argument("constant has zero derivative");
    std::vector<cplx> b(n);
    for (std::size_t v = 1; v <= n; ++v)
        b[v - 1] = static_cast<double>(v) * p[v];
    return Polynomial(std::move(b));
}

/// D_alpha p(z) = n p(z) + (alpha - z) p'(z), computed coefficientwise.
///
/// The z^n contributions n*a_n and -n*a_n cancel exactly, so the result has
/// degree at most n-1. Trailing coefficients below eps_rel * max|b| are
/// trimmed. Throws if the polar derivative vanishes identically, which
/// happens exactly for p = c (z - alpha)^n.
inline Polynomial polar_derivative(const Polynomial& p, cplx alpha,
                                   double eps_rel = kDefaultCoeffEps)
{
    const std::size_t n = p.degree();
    if (n == 0)
        throw std::invalid_argument("polar derivative of a constant is undefined");
    const double nd = static_cast<double>(n);
    std::vector<cplx> b(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double jd = static_cast<double>(j);
        b[j] = (nd - jd) * p[j] + alpha * (jd + 1.0) * p[j + 1];
    }
    double scale = 0.0;
    for (const auto& c : b) scale = std::max(scale, std::abs(c));
    if (scale <= eps_rel * nd * (1.0 + std::abs(alpha)) * p.max_abs_coeff())
        throw std::domain_error("polar derivative vanishes identically");
    while (b.size() > 1 && std::abs(b.back()) <= eps_rel * scale)
        b.pop_back();
    return Polynomial(std::move(b));
}

/// q(z) = z^n * conj(p(1 / conj(z))), i.e. reversed conjugated coefficients.
inline Polynomial conjugate_reciprocal(const Polynomial& p)
{
    const std::size_t n = p.degree();
    std::vector<cplx> q(n + 1);
    for (std::size_t j = 0; j <= n; ++j)
        q[j] = std::conj(p[n - j]);
    return Polynomial(std::move(q));
}

inline Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs)
{
    const auto a = lhs.coeffs();
    const auto b = rhs.coeffs();
    std::vector<cplx> c(a.size() + b.size() - 1, cplx{});
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    return Polynomial(std::move(c));
}

inline Polynomial operator*(cplx c, const Polynomial& p)
{
    if (c == cplx{})
        throw std::invalid_argument("scaling by zero gives the zero polynomial");
    std::vector<cplx> a(p.coeffs().begin(), p.coeffs().end());
    for (auto& x : a) x *= c;
    return Polynomial(std::move(a));
}

/// p(w z): coefficient a_v becomes a_v w^v.
inline Polynomial compose_scale(const Polynomial& p, cplx w)
{
    std::vector<cplx> a(p.coeffs().begin(), p.coeffs().end());
    cplx wv = 1.0;
    for (auto& x : a) {
        x *= wv;
        wv *= w;
    }
    return Polynomial(std::move(a));
}

inline Polynomial pow(const Polynomial& base, unsigned e)
{
    Polynomial acc = Polynomial::constant(1.0);
    for (unsigned i = 0; i < e; ++i) acc = acc * base;
    return acc;
}

struct RootFactor {
    cplx root;
    unsigned multiplicity;
};

/// leading * prod (z - r_i)^{m_i}
inline Polynomial from_roots(std::span<const RootFactor> roots, cplx leading = 1.0)
{
    if (leading == cplx{})
        throw std::invalid_argument("leading coefficient must be nonzero");
    std::vector<cplx> c{leading};
    for (const auto& [r, m] : roots) {
        for (unsigned i = 0; i < m; ++i) {
            c.push_back(cplx{});
            for (std::size_t v = c.size() - 1; v > 0; --v)
                c[v] = c[v - 1] - r * c[v];
            c[0] = -r * c[0];
        }
    }
    return Polynomial(std::move(c));
}

inline Polynomial from_roots(std::initializer_list<RootFactor> roots, cplx leading = 1.0)
{
    return from_roots(std::span<const RootFactor>(roots.begin(), roots.size()), leading);
}

/// Smallest v >= 1 with a non-negligible coefficient, for p = a_0 + sum_{v>=mu} a_v z^v.
/// Quotient of p by (z - r), discarding the remainder. Forward division runs
/// from the leading coefficient and is stable when r is smaller in modulus
/// than the other roots; backward division runs from the constant term and is
/// stable when r is larger.
inline Polynomial deflate(const Polynomial& p, cplx r, bool backward = false)
{
    const std::size_t n = p.degree();
    if (n < 1) throw std::invalid_argument("cannot deflate a constant");
    std::vector<cplx> q(n);
    if (!backward) {
        q[n - 1] = p[n];
        for (std::size_t j = n - 1; j >= 1; --j) q[j - 1] = p[j] + r * q[j];
    } else {
        if (r == cplx{}) throw std::invalid_argument("backward deflation needs r != 0");
        q[0] = -p[0] / r;
        for (std::size_t j = 1; j < n; ++j) q[j] = (q[j - 1] - p[j]) / r;
    }
    return Polynomial(std::move(q));
}

inline std::size_t gap_index(const Polynomial& p, double eps_rel = kDefaultCoeffEps)
{
    const double cut = eps_rel * p.max_abs_coeff();
    if (std::abs(p[0]) <= cut)
        throw std::domain_error("gap form requires a_0 != 0");
    if (p.degree() == 0)
        throw std::domain_error("gap form requires degree >= 1");
    for (std::size_t v = 1; v <= p.degree(); ++v)
        if (std::abs(p[v]) > cut) return v;
    return p.degree();  // unreachable: leading coefficient is nonzero
}

}  // namespace polarbound

#endif  // POLARBOUND_POLYNOMIAL_HPP
