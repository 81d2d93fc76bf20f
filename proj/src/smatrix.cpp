#include "abscat/smatrix.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "abscat/errors.hpp"

namespace abscat
{
namespace
{
constexpr double pi = std::numbers::pi;

Complex unimodular(double phase)
{
    return std::polar(1.0, phase);
}

//! (J - iY)/(J + iY) for real order: unimodular, robust when Y overflows.
Complex hankel_ratio(BesselJY const& jy)
{
    if (std::abs(jy.y) >= std::abs(jy.j))
    {
        double const t = jy.j / jy.y;
        return Complex{t, -1.0} / Complex{t, 1.0};
    }
    double const s = jy.y / jy.j;
    return Complex{1.0, -s} / Complex{1.0, s};
}

//! J/(J + iY) for real order.
Complex hankel_mu(BesselJY const& jy)
{
    if (std::abs(jy.y) >= std::abs(jy.j))
    {
        double const t = jy.j / jy.y;
        return t / Complex{t, 1.0};
    }
    double const s = jy.y / jy.j;
    return 1.0 / Complex{1.0, s};
}

// log of an upper bound on |mu| = |J/H1| for nu >> a, used to skip
// Bessel evaluations that cannot change S in double precision
double log_mu_estimate(double nu, double a)
{
    return std::log(pi) + 2 * nu * std::log(0.5 * a) - std::lgamma(nu)
           - std::lgamma(nu + 1);
}

bool mu_negligible(double nu, double a)
{
    return nu > a * a + 10 && log_mu_estimate(nu, a) < -45;
}

PhaseEntry absorbing_entry(OrderNu const& order, bool absorbed)
{
    PhaseEntry e;
    e.m = order.m;
    if (absorbed)
    {
        e.kind = ChannelKind::absorbed;
        e.s = 0;
        return e;
    }
    e.kind = order.kind == ChannelKind::threshold ? ChannelKind::threshold
                                                  : ChannelKind::elastic;
    // nu = 0 at threshold: the nu -> 0 limit of e^{i pi (m - nu)}
    double const delta = 0.5 * pi * (order.m - order.magnitude);
    e.s = unimodular(2 * delta);
    e.delta = delta;
    return e;
}

PhaseEntry reflecting_entry(OrderNu const& order, double a)
{
    PhaseEntry e;
    e.m = order.m;
    e.kind = order.kind;
    double const m = order.m;
    if (order.kind == ChannelKind::absorbed)
    {
        // nu = +i|nu|; S does not depend on the sign of Im nu
        Complex const integral = imag_order_integral(order.magnitude, a);
        e.s = unimodular(pi * m) * std::conj(integral) / integral;
    }
    else if (mu_negligible(order.magnitude, a))
    {
        e.s = unimodular(pi * (m - order.magnitude));
    }
    else
    {
        // S = -e^{i pi (m - nu)} H2/H1 with H2 = conj(H1) for real nu, a
        auto const jy = bessel_jy(order.magnitude, a);
        e.s = -unimodular(pi * (m - order.magnitude)) * hankel_ratio(jy);
    }
    e.delta = 0.5 * std::arg(e.s);
    return e;
}
}  // namespace

PhaseEntry s_matrix(int m, ScatterParams const& params, WireModel const& wire)
{
    validate(wire);
    auto const order = order_nu(m, params);
    if (std::holds_alternative<ThinAbsorbing>(wire))
    {
        return absorbing_entry(order, order.kind == ChannelKind::absorbed);
    }
    if (auto const* f = std::get_if<FiniteAbsorbing>(&wire))
    {
        int const n = static_cast<int>(std::floor(f->a));
        bool const absorbed = order.kind == ChannelKind::absorbed
                              || std::abs(m) <= n;
        return absorbing_entry(order, absorbed);
    }
    return reflecting_entry(order, std::get<Reflecting>(wire).a);
}

Complex hardcore_mu(int m, ScatterParams const& params, double a)
{
    if (!(a > 0))
    {
        throw DomainError("hardcore_mu: a must be positive");
    }
    auto const order = order_nu(m, params);
    if (order.kind == ChannelKind::absorbed)
    {
        throw DomainError("hardcore_mu: channel m = " + std::to_string(m)
                          + " has nu^2 < 0");
    }
    if (mu_negligible(order.magnitude, a))
    {
        return 0;
    }
    return hankel_mu(bessel_jy(order.magnitude, a));
}

double low_energy_delta(int m, ScatterParams const& params, double a)
{
    auto const order = order_nu(m, params);
    double const md = m;
    if (order.kind != ChannelKind::absorbed)
    {
        return 0.5 * pi * (md - order.magnitude);
    }
    double const nu = order.magnitude;
    return 0.5 * pi * md
           + std::atan(std::tan(nu * std::log(0.5 * a))
                       * std::tan(0.5 * pi * nu));
}

double low_energy_delta_limit(int m, ScatterParams const& params, double a)
{
    auto const order = order_nu(m, params);
    double const md = m;
    if (order.kind != ChannelKind::absorbed)
    {
        return 0.5 * pi * (md - order.magnitude);
    }
    double const nu = order.magnitude;
    double const phase = nu * std::log(0.5 * a) - arg_gamma_one_plus_i(nu);
    // atan(tanh(.) cot(phase)) written with atan2 to survive phase = k pi
    return 0.5 * pi * md
           + std::atan(std::tanh(0.5 * pi * nu) * std::cos(phase)
                       / std::sin(phase));
}

double arg_gamma_one_plus_i(double y)
{
    // Im ln Gamma(z) for z = 1 + iy: shift by N, then Stirling
    constexpr int shift = 12;
    Complex const z{1.0, y};
    double correction = 0;
    for (int k = 0; k < shift; ++k)
    {
        correction += std::atan2(y, 1.0 + k);
    }
    Complex const w = z + static_cast<double>(shift);
    Complex const inv = 1.0 / w;
    Complex const inv2 = inv * inv;
    Complex const series
        = inv
          * (1.0 / 12
             - inv2 * (1.0 / 360 - inv2 * (1.0 / 1260 - inv2 * (1.0 / 1680))));
    Complex const lg = (w - 0.5) * std::log(w) - w
                       + 0.5 * std::log(2 * pi) + series;
    return lg.imag() - correction;
}

double phase_diff_mod_pi(double a, double b)
{
    double d = std::fmod(a - b, pi);
    if (d >= 0.5 * pi)
    {
        d -= pi;
    }
    else if (d < -0.5 * pi)
    {
        d += pi;
    }
    return d;
}
}  // namespace abscat
