#include "abscat/params.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "abscat/errors.hpp"

namespace abscat
{
namespace
{
double coupling_tolerance(int m, ScatterParams const& params)
{
    double const g = params.coupling == CouplingMode::exact
                         ? params.gamma
                         : params.gamma_tilde;
    double const md = m;
    return 1e-12 * std::max({1.0, md * md, g * g});
}

bool is_absorbed(int m, ScatterParams const& params)
{
    return order_nu(m, params).kind == ChannelKind::absorbed;
}
}  // namespace

ScatterParams ScatterParams::exact(double beta, double gamma)
{
    if (!(gamma >= 0) || !std::isfinite(beta) || !std::isfinite(gamma))
    {
        throw DomainError("gamma must be finite and nonnegative");
    }
    ScatterParams p;
    p.beta = beta;
    p.gamma = gamma;
    p.epsilon = gamma > 0 ? beta * beta / (gamma * gamma) : 0;
    p.coupling = CouplingMode::exact;
    return p;
}

ScatterParams ScatterParams::decoupled(double beta, double gamma_tilde)
{
    if (!(gamma_tilde >= 0) || !std::isfinite(beta)
        || !std::isfinite(gamma_tilde))
    {
        throw DomainError("gamma_tilde must be finite and nonnegative");
    }
    ScatterParams p;
    p.beta = beta;
    p.gamma = 0;
    p.gamma_tilde = gamma_tilde;
    p.coupling = CouplingMode::decoupled;
    return p;
}

double ScatterParams::coupling_strength() const
{
    if (coupling == CouplingMode::exact)
    {
        return beta * beta + gamma * gamma;
    }
    return gamma_tilde * gamma_tilde;
}

ScatterParams ScatterParams::mirrored() const
{
    ScatterParams p = *this;
    p.beta = -beta;
    return p;
}

bool is_absorbing(WireModel const& wire)
{
    return !std::holds_alternative<Reflecting>(wire);
}

void validate(WireModel const& wire)
{
    auto check = [](double a) {
        if (!(a > 0) || !std::isfinite(a))
        {
            throw DomainError("wire radius parameter a = p rho0 must be > 0");
        }
    };
    if (auto const* f = std::get_if<FiniteAbsorbing>(&wire))
    {
        check(f->a);
    }
    else if (auto const* r = std::get_if<Reflecting>(&wire))
    {
        check(r->a);
    }
}

ScatterParams derive_params(PhysicalInputs const& phys)
{
    if (!(phys.alpha > 0))
    {
        throw DomainError("polarizability alpha must be positive");
    }
    if (!(phys.m0 > 0))
    {
        throw DomainError("rest mass M0 must be positive");
    }
    if (!(phys.b_field >= 0))
    {
        throw DomainError("magnetic field B must be nonnegative");
    }
    if (phys.rho0 && !(*phys.rho0 > 0))
    {
        throw DomainError("wire radius rho0 must be positive");
    }
    if (phys.kappa.has_value() == phys.field_at_surface.has_value())
    {
        throw DomainError(
            "exactly one of kappa and field_at_surface must be given");
    }

    double kappa = 0;
    if (phys.kappa)
    {
        kappa = *phys.kappa;
    }
    else
    {
        if (!phys.rho0)
        {
            throw DomainError("field_at_surface requires rho0");
        }
        kappa = 2 * std::numbers::pi * *phys.rho0 * *phys.field_at_surface;
    }
    if (!(kappa >= 0))
    {
        throw DomainError("kappa must be nonnegative");
    }

    double const two_pi_hbar = 2 * std::numbers::pi * hbar_si;
    ScatterParams p;
    p.coupling = CouplingMode::exact;
    p.beta = phys.alpha * kappa * phys.b_field / two_pi_hbar;
    p.gamma = std::sqrt(phys.alpha * kappa * kappa * phys.m0) / two_pi_hbar;
    // SI magnetic mass is alpha B^2 (the Gaussian form carries 1/c^2)
    p.epsilon = phys.alpha * phys.b_field * phys.b_field / phys.m0;
    return p;
}

double nu_squared(int m, ScatterParams const& params)
{
    double const md = m;
    if (params.coupling == CouplingMode::exact)
    {
        return md * md - 2 * md * params.beta - params.gamma * params.gamma;
    }
    double const shifted = md - params.beta;
    return shifted * shifted - params.gamma_tilde * params.gamma_tilde;
}

OrderNu order_nu(int m, ScatterParams const& params)
{
    OrderNu result;
    result.m = m;
    result.nu_sq = nu_squared(m, params);
    if (std::abs(result.nu_sq) < coupling_tolerance(m, params))
    {
        result.kind = ChannelKind::threshold;
        result.magnitude = 0;
    }
    else
    {
        result.kind = result.nu_sq > 0 ? ChannelKind::elastic
                                       : ChannelKind::absorbed;
        result.magnitude = std::sqrt(std::abs(result.nu_sq));
    }
    return result;
}

ChannelBounds channel_bounds(ScatterParams const& params, WireModel const& wire)
{
    validate(wire);

    // nu^2 is a parabola in m with its minimum at m = beta, so the absorbed
    // set is a contiguous run of integers around beta.
    ChannelBounds b;
    int const floor_beta = static_cast<int>(std::floor(params.beta));
    int seed = floor_beta;
    if (!is_absorbed(seed, params))
    {
        seed = floor_beta + 1;
    }
    if (!is_absorbed(seed, params))
    {
        b.lo = floor_beta + 1;
        b.hi = floor_beta;
    }
    else
    {
        b.lo = seed;
        b.hi = seed;
        while (is_absorbed(b.hi + 1, params))
        {
            ++b.hi;
        }
        while (is_absorbed(b.lo - 1, params))
        {
            --b.lo;
        }
    }

    if (auto const* f = std::get_if<FiniteAbsorbing>(&wire))
    {
        // All partial waves with |m - beta| < p rho0 hit the wire; the
        // integer part of p rho0 replaces m_+ and m_-. Channels that fall to
        // the center are absorbed regardless.
        int const n = static_cast<int>(std::floor(f->a));
        if (b.empty())
        {
            b.lo = -n;
            b.hi = n;
        }
        else
        {
            if (b.lo > n + 1 || b.hi < -n - 1)
            {
                throw DomainError(
                    "finite wire: fall-to-center channels are disjoint from "
                    "the |m| <= floor(a) set");
            }
            b.lo = std::min(b.lo, -n);
            b.hi = std::max(b.hi, n);
        }
    }
    return b;
}
}  // namespace abscat
