#include "abscat/amplitude.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "abscat/errors.hpp"
#include "abscat/quadrature.hpp"

namespace abscat
{
namespace
{
constexpr double pi = std::numbers::pi;
constexpr Complex I{0.0, 1.0};

double reduce_angle(double phi)
{
    return std::remainder(phi, 2 * pi);
}

void check_angle(double phi, double phi_min, char const* who)
{
    if (!std::isfinite(phi))
    {
        throw DomainError(std::string(who) + ": angle must be finite");
    }
    if (std::abs(reduce_angle(phi)) < phi_min)
    {
        throw DomainError(std::string(who)
                          + ": |phi| below phi_min (forward divergence)");
    }
}

// e^{x + iy} - 1 without cancellation near zero
Complex expm1c(double x, double y)
{
    double const em1 = std::expm1(x);
    double const s = std::sin(0.5 * y);
    double const re = em1 * std::cos(y) - 2 * s * s;
    double const im = (em1 + 1) * std::sin(y);
    return {re, im};
}

// chi(u) = u - sqrt(u^2 - A), written to keep precision when chi is small
double chi_of(double u, double coupling)
{
    double const disc = std::max(0.0, (u - std::sqrt(coupling))
                                          * (u + std::sqrt(coupling)));
    return coupling / (u + std::sqrt(disc));
}

// b(u) = e^{i pi chi} - 1
Complex coefficient(double u, double coupling)
{
    double const half = 0.5 * pi * chi_of(u, coupling);
    return 2.0 * I * std::polar(std::sin(half), half);
}

//! One side of f_w: sum_{k >= first} b(k - shift) e^{i k theta}.
struct Side
{
    double coupling;
    double shift;
    long first;
    double theta;
};

SeriesResult sum_lerch_tail(Side const& side, double tol)
{
    SeriesResult r;
    double const coupling = side.coupling;
    double const root = std::sqrt(coupling);
    double const alpha_min = std::max(4 * root + 10, 0.5 * pi * coupling);
    long const n_split = std::max(
        side.first, static_cast<long>(std::ceil(side.shift + alpha_min)));
    for (long k = side.first; k < n_split; ++k)
    {
        r.value += coefficient(k - side.shift, coupling)
                   * std::polar(1.0, k * side.theta);
    }
    r.terms_used = n_split - side.first;

    double const alpha = n_split - side.shift;
    double const budget = 0.25 * tol;
    int const order = detail::exp_chi_order(coupling, alpha, budget);
    auto const e = detail::exp_chi_series(coupling, alpha, order);
    double const q = 2 * root / alpha;
    double const log_m = detail::exp_chi_log_bound(coupling);

    double const theta = side.theta;
    auto integrand = [&](double s) -> Complex {
        Complex q_sum = 0;
        double pw = 1;
        for (int n = 1; n <= order; ++n)
        {
            q_sum += e[n] * pw;
            pw *= s / n;
        }
        return -q_sum * std::exp(-s) / expm1c(-s / alpha, theta);
    };

    double const abs_theta = std::abs(theta);
    double const dmin = abs_theta < 0.5 * pi ? std::sin(abs_theta) : 1.0;
    double const s_max
        = std::max(order + 50.0,
                   (log_m + std::log(q / ((1 - q) * dmin * budget)) + 5)
                       / (1 - q));
    std::vector<double> breaks{0.0};
    double x = alpha * abs_theta;
    while (x < 1)
    {
        breaks.push_back(x);
        x *= 2;
    }
    for (x = 1; x < s_max; x += 4)
    {
        breaks.push_back(x);
    }
    breaks.push_back(s_max);

    auto const quad = integrate(integrand, breaks, budget, 1e-14, 2000);
    r.value += std::polar(1.0, n_split * theta) * quad.value;
    r.terms_used += order;
    r.tail_bound = detail::exp_chi_truncation(coupling, alpha, order)
                   + quad.error + budget * 1e-3;
    return r;
}

// Sum of a_k e^{ik theta} from k = first with terms O(1/k^2); returns when
// the summation-by-parts bound 2|a_k|/|sin(theta/2)| drops below tol
template<class Term>
SeriesResult sum_to_tolerance(Term&& term,
                              long first,
                              double theta,
                              long monotone_from,
                              double tol,
                              long m_cap)
{
    SeriesResult r;
    double const denom = std::abs(std::sin(0.5 * theta));
    for (long k = first;; ++k)
    {
        if (k - first >= m_cap)
        {
            throw ConvergenceError(
                "f_w: channel cap " + std::to_string(m_cap)
                + " reached before the tail bound met tol (last m = "
                + std::to_string(k) + ")");
        }
        Complex const a = term(k);
        r.value += a * std::polar(1.0, k * theta);
        ++r.terms_used;
        if (k >= monotone_from)
        {
            double const bound = 2 * std::abs(a) / denom;
            if (bound < tol)
            {
                r.tail_bound = bound;
                return r;
            }
        }
    }
}

SeriesResult sum_side(Side const& side, SumSpec const& spec, double tol)
{
    if (side.coupling == 0)
    {
        return {};
    }
    long const monotone_from = static_cast<long>(
        std::ceil(side.shift + side.coupling + 10));
    Complex const c = I * (0.5 * pi * side.coupling);
    Complex const z = std::polar(1.0, side.theta);
    switch (spec.accel)
    {
        case Accel::lerch_tail:
            return sum_lerch_tail(side, tol);
        case Accel::none:
            return sum_to_tolerance(
                [&](long k) { return coefficient(k - side.shift, side.coupling); },
                side.first,
                side.theta,
                monotone_from,
                tol,
                spec.m_cap);
        case Accel::log_subtraction: {
            Complex head = 0;
            long k = side.first;
            for (; k < 1; ++k)
            {
                head += coefficient(k - side.shift, side.coupling)
                        * std::polar(1.0, k * side.theta);
            }
            Complex back = -std::log(-expm1c(0, side.theta));
            for (long j = 1; j < k; ++j)
            {
                back -= std::polar(1.0, j * side.theta) / static_cast<double>(j);
            }
            auto r = sum_to_tolerance(
                [&](long m) {
                    return coefficient(m - side.shift, side.coupling)
                           - c / static_cast<double>(m);
                },
                k,
                side.theta,
                monotone_from,
                tol,
                spec.m_cap);
            r.value += head + c * back;
            r.terms_used += k - side.first;
            return r;
        }
        case Accel::digamma_formula: {
            auto r = sum_to_tolerance(
                [&](long m) {
                    double const u = m - side.shift;
                    return coefficient(u, side.coupling) - c / u;
                },
                side.first,
                side.theta,
                monotone_from,
                tol,
                spec.m_cap);
            r.value += c * std::pow(z, side.first)
                       * lerch_digamma(side.first - side.shift, side.theta);
            return r;
        }
    }
    return {};
}
}  // namespace

namespace detail
{
double exp_chi_log_bound(double coupling)
{
    // |chi| <= 2 sqrt(A) (1 - sqrt(3/4)) on the circle |w| = 1/(2 sqrt A)
    return std::log1p(
        std::exp(2 * pi * std::sqrt(coupling) * (1 - std::sqrt(0.75))));
}

double exp_chi_truncation(double coupling, double alpha, int order)
{
    double const q = 2 * std::sqrt(coupling) / alpha;
    return std::exp(exp_chi_log_bound(coupling) + (order + 1) * std::log(q))
           / (1 - q) * (1 + alpha / order);
}

int exp_chi_order(double coupling, double alpha, double budget)
{
    int order = 1;
    while (exp_chi_truncation(coupling, alpha, order) > budget && order < 400)
    {
        ++order;
    }
    return order;
}

std::vector<Complex> exp_chi_series(double coupling, double alpha, int order)
{
    std::vector<Complex> g(order + 1, 0.0);
    double c = 0.5;
    double const t = coupling / (alpha * alpha);
    double power = coupling / alpha;
    for (int k = 1; 2 * k - 1 <= order; ++k)
    {
        g[2 * k - 1] = I * (pi * c * power);
        c *= (2.0 * k - 1) / (2.0 * k + 2);
        power *= t;
    }
    std::vector<Complex> e(order + 1, 0.0);
    e[0] = 1;
    for (int n = 1; n <= order; ++n)
    {
        Complex acc = 0;
        for (int k = 1; k <= n; ++k)
        {
            acc += static_cast<double>(k) * g[k] * e[n - k];
        }
        e[n] = acc / static_cast<double>(n);
    }
    return e;
}
}  // namespace detail

Complex amplitude_prefactor(double p)
{
    if (!(p > 0) || !std::isfinite(p))
    {
        throw DomainError("wavenumber p must be positive");
    }
    return std::polar(1.0 / std::sqrt(2 * pi * p), -0.25 * pi);
}

Complex f_ab_exact(double beta, double phi, double p)
{
    check_angle(phi, default_phi_min, "f_ab_exact");
    Complex const pref = amplitude_prefactor(p);
    double const n = std::floor(beta) + 1;
    double const frac = beta - std::floor(beta);
    // sin(pi beta) with the integer part as a sign, exact zero at integers
    double const s = (static_cast<long>(n - 1) % 2 == 0 ? 1.0 : -1.0)
                     * std::sin(pi * frac);
    return -pref * std::polar(1.0, (n - 0.5) * phi) * s
           / std::sin(0.5 * phi);
}

Complex ab_phase(int m, double beta)
{
    double const md = m;
    return std::polar(1.0, pi * (md - std::abs(md - beta)));
}

Complex f_ab_mod(ScatterParams const& params,
                 ChannelBounds const& bounds,
                 double phi,
                 double p)
{
    check_angle(phi, default_phi_min, "f_ab_mod");
    Complex const pref = amplitude_prefactor(p);
    double const beta = params.beta;
    double const lo = bounds.lo;
    double const hi = bounds.hi;
    if (lo - 1 < beta && beta < hi + 1)
    {
        double const width = hi - lo + 1;
        return -pref * std::polar(1.0, 0.5 * (hi + lo) * phi)
               * std::sin(pi * beta + 0.5 * width * phi)
               / std::sin(0.5 * phi);
    }
    Complex removed = 0;
    for (int m = bounds.lo; m <= bounds.hi; ++m)
    {
        removed += ab_phase(m, beta) * std::polar(1.0, m * phi);
    }
    return f_ab_exact(beta, phi, p) - pref * removed;
}

SeriesResult f_w(ScatterParams const& params,
                 ChannelBounds const& bounds,
                 double phi,
                 double p,
                 SumSpec const& spec)
{
    if (!(spec.tol > 0))
    {
        throw DomainError("f_w: tol must be positive");
    }
    check_angle(phi, spec.phi_min, "f_w");
    Complex const pref = amplitude_prefactor(p);
    double const theta = reduce_angle(phi);
    double const coupling = params.coupling_strength();
    double const side_tol = 0.5 * spec.tol / std::abs(pref);

    Side const upper{coupling, params.beta, bounds.hi + 1L, theta};
    Side const lower{coupling, -params.beta, 1L - bounds.lo, -theta};
    auto const a = sum_side(upper, spec, side_tol);
    auto const b = sum_side(lower, spec, side_tol);

    SeriesResult r;
    r.value = pref
              * (std::polar(1.0, pi * params.beta) * a.value
                 + std::polar(1.0, -pi * params.beta) * b.value);
    r.terms_used = a.terms_used + b.terms_used;
    r.tail_bound = std::abs(pref) * (a.tail_bound + b.tail_bound);
    double const floor = 1e-13 * (1 + std::abs(r.value));
    if (r.tail_bound > spec.tol && r.tail_bound > floor)
    {
        throw ConvergenceError("f_w: tail bound "
                               + std::to_string(r.tail_bound)
                               + " exceeds tol at phi = "
                               + std::to_string(phi));
    }
    return r;
}

AmplitudeBreakdown f_total(ScatterParams const& params,
                           ChannelBounds const& bounds,
                           WireModel const& wire,
                           double phi,
                           double p,
                           SumSpec const& spec)
{
    validate(wire);
    if (!is_absorbing(wire))
    {
        throw DomainError(
            "f_total: the split amplitude needs an absorbing wire");
    }
    AmplitudeBreakdown out;
    out.phi = phi;
    auto const w = f_w(params, bounds, phi, p, spec);
    out.f_ab_mod = f_ab_mod(params, bounds, phi, p);
    out.f_w = w.value;
    out.f_total = out.f_ab_mod + out.f_w;
    out.terms_used = w.terms_used;
    out.tail_bound = w.tail_bound;
    return out;
}

Complex lerch_digamma(double alpha, double phi)
{
    if (!(alpha > 0))
    {
        throw DomainError("lerch_digamma: alpha must be positive");
    }
    double const theta = reduce_angle(phi);
    if (theta == 0)
    {
        throw DomainError("lerch_digamma: divergent at phi = 0");
    }
    if (theta < 0)
    {
        return std::conj(lerch_digamma(alpha, -theta));
    }
    double const b = 0.5 * (digamma(0.5 * (alpha + 1)) - digamma(0.5 * alpha));
    Complex const head = b * std::polar(1.0, alpha * (pi - theta));

    auto integrand = [&](double t) {
        return std::polar(1.0, -alpha * theta + (alpha - 0.5) * t)
               / std::sin(0.5 * t);
    };
    // geometric grading toward the 1/t end, then one piece per half period
    std::vector<double> breaks{theta};
    for (double x = 2 * theta; x < 1; x *= 2)
    {
        breaks.push_back(x);
    }
    double const step = pi / std::max(1.0, std::abs(alpha - 0.5));
    for (double x = std::max(1.0, breaks.back()) + step; x < pi; x += step)
    {
        if (x > breaks.back())
        {
            breaks.push_back(x);
        }
    }
    if (breaks.back() < pi)
    {
        breaks.push_back(pi);
    }
    auto const quad = integrate(integrand, breaks, 1e-15, 1e-14, 400);
    return head + 0.5 * quad.value;
}
}  // namespace abscat
