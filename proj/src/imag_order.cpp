#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "abscat/errors.hpp"
#include "abscat/quadrature.hpp"
#include "abscat/specfun.hpp"

namespace abscat
{
namespace
{
constexpr double half_pi = 0.5 * std::numbers::pi;
// Integrand modulus e^{-decay_cutoff} is dropped at the path ends
constexpr double decay_cutoff = 50.0;

//! Integrand of I_nu(a) on t = t* + u + i(pi/2) tanh(u).
class SaddlePath
{
  public:
    SaddlePath(double nu, double a)
        : nu_(nu), a_(a), t_star_(-std::asinh(nu / a))
    {
    }

    // cos and sin of theta = (pi/2) tanh(u), accurate as |theta| -> pi/2
    static void angle(double u, double& cos_t, double& sin_t)
    {
        // pi/2 - |theta| = (pi/2)(1 - tanh|u|) = pi / (e^{2|u|} + 1)
        double const gap = std::numbers::pi / (std::exp(2 * std::abs(u)) + 1);
        cos_t = std::sin(gap);
        sin_t = std::copysign(std::cos(gap), u);
    }

    double decay(double u) const
    {
        double cos_t, sin_t;
        angle(u, cos_t, sin_t);
        double const theta = half_pi * std::tanh(u);
        return a_ * std::sinh(t_star_ + u) * sin_t + nu_ * theta;
    }

    Complex operator()(double u) const
    {
        double cos_t, sin_t;
        angle(u, cos_t, sin_t);
        double const x = t_star_ + u;
        double const theta = half_pi * std::tanh(u);
        double const sech = 1.0 / std::cosh(u);
        double const modulus
            = std::exp(-(a_ * std::sinh(x) * sin_t + nu_ * theta));
        double const phase = a_ * std::cosh(x) * cos_t + nu_ * x;
        Complex const dt{1.0, half_pi * sech * sech};
        return std::polar(modulus, phase) * dt;
    }

    //! Symmetric-ish truncation window where the integrand is negligible.
    void window(double& lower, double& upper) const
    {
        constexpr double step = 0.25;
        constexpr double limit = 80.0;
        upper = step;
        while (upper < limit && decay(upper) < decay_cutoff)
        {
            upper += step;
        }
        lower = -step;
        while (lower > -limit && decay(lower) < decay_cutoff)
        {
            lower -= step;
        }
    }

  private:
    double nu_;
    double a_;
    double t_star_;
};

void check_domain(double nu_abs, double a)
{
    if (!(nu_abs >= 0) || !std::isfinite(nu_abs))
    {
        throw DomainError("imag_order_integral: |nu| must be >= 0, got "
                          + std::to_string(nu_abs));
    }
    if (!(a > 0) || !std::isfinite(a))
    {
        throw DomainError("imag_order_integral: a must be > 0, got "
                          + std::to_string(a));
    }
}
}  // namespace

Complex imag_order_integral(double nu_abs, double a)
{
    check_domain(nu_abs, a);
    SaddlePath const path(nu_abs, a);
    double lower, upper;
    path.window(lower, upper);

    std::vector<double> breaks;
    for (double u = lower; u < upper; u += 1.0)
    {
        breaks.push_back(u);
    }
    breaks.push_back(upper);

    auto const result = integrate(path, breaks, 1e-15, 1e-13, 2000);
    if (!result.converged || result.error > 1e-10 * std::abs(result.value))
    {
        throw AccuracyError(
            "imag_order_integral: quadrature error estimate "
            + std::to_string(result.error) + " too large at |nu| = "
            + std::to_string(nu_abs) + ", a = " + std::to_string(a));
    }
    return result.value;
}

Complex imag_order_integral_fixed(double nu_abs, double a, int panels)
{
    check_domain(nu_abs, a);
    SaddlePath const path(nu_abs, a);
    double lower, upper;
    path.window(lower, upper);
    return gauss_legendre(path, lower, upper, panels);
}
}  // namespace abscat
