#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "abscat/amplitude.hpp"
#include "abscat/errors.hpp"

namespace abscat
{
namespace
{
// r^M below this leaves no trace of a unit-size coefficient
constexpr double log_cutoff = 42.0;

long channel_reach(double r)
{
    return static_cast<long>(std::ceil(log_cutoff / -std::log(r)));
}

//! Neville extrapolation of T(h) to h = 0 through the given points.
Complex extrapolate(std::vector<double> const& h, std::vector<Complex> t)
{
    std::size_t const n = h.size();
    for (std::size_t level = 1; level < n; ++level)
    {
        for (std::size_t i = n - 1; i >= level; --i)
        {
            double const hi = h[i];
            double const hj = h[i - level];
            t[i] = (hj * t[i] - hi * t[i - 1]) / (hj - hi);
        }
    }
    return t.back();
}
}  // namespace

AbelSchedule AbelSchedule::powers_of_two(int k_first, int k_last, int order)
{
    AbelSchedule s;
    for (int k = k_first; k <= k_last; ++k)
    {
        s.radii.push_back(1 - std::ldexp(1.0, -k));
    }
    s.order = order;
    return s;
}

AbelResult abel_sum(PhaseSource const& s_values,
                    double phi,
                    double p,
                    AbelSchedule const& schedule)
{
    if (std::abs(std::remainder(phi, 2 * std::numbers::pi)) < default_phi_min)
    {
        throw DomainError("abel_sum: phi must be nonzero mod 2 pi");
    }
    auto const& radii = schedule.radii;
    int const order = schedule.order;
    if (order < 1 || static_cast<int>(radii.size()) < order + 1)
    {
        throw DomainError("abel_sum: schedule needs at least order + 1 radii");
    }
    for (std::size_t i = 0; i < radii.size(); ++i)
    {
        if (!(radii[i] > 0 && radii[i] < 1)
            || (i > 0 && !(radii[i] > radii[i - 1])))
        {
            throw DomainError(
                "abel_sum: radii must increase strictly inside (0, 1)");
        }
    }
    Complex const pref = amplitude_prefactor(p);

    long const reach = channel_reach(radii.back());
    // w[m + reach] = (S_m - 1) e^{i m phi}
    std::vector<Complex> w(2 * reach + 1);
    for (long m = -reach; m <= reach; ++m)
    {
        int const mi = static_cast<int>(m);
        w[m + reach] = (s_values(mi) - 1.0) * std::polar(1.0, m * phi);
    }

    AbelResult out;
    std::vector<double> h;
    for (double r : radii)
    {
        long const mr = std::min(reach, channel_reach(r));
        Complex sum = w[reach];
        double rk = 1;
        for (long m = 1; m <= mr; ++m)
        {
            rk *= r;
            sum += rk * (w[reach + m] + w[reach - m]);
        }
        out.partial.push_back(pref * sum);
        h.push_back(1 - r);
    }

    std::size_t const n = h.size();
    std::size_t const k = static_cast<std::size_t>(order);
    auto window = [&](std::size_t end) {
        std::vector<double> hh(h.begin() + (end - k), h.begin() + end);
        std::vector<Complex> tt(out.partial.begin() + (end - k),
                                out.partial.begin() + end);
        return extrapolate(hh, tt);
    };
    out.value = window(n);
    out.residual = std::abs(out.value - window(n - 1));
    return out;
}

Complex abel_partial_wave(PhaseSource const& s_values,
                          double phi,
                          double p,
                          AbelSchedule const& schedule)
{
    auto const r = abel_sum(s_values, phi, p, schedule);
    if (r.residual > schedule.max_residual)
    {
        throw ConvergenceError("abel_partial_wave: extrapolation residual "
                               + std::to_string(r.residual)
                               + " exceeds limit at phi = "
                               + std::to_string(phi));
    }
    return r.value;
}
}  // namespace abscat
