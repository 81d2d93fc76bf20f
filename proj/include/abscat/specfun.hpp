#pragma once

#include <complex>

namespace abscat
{
using Complex = std::complex<double>;

//! Cylinder functions of real order nu at x with first derivatives.
struct BesselJY
{
    double j{};
    double y{};
    double jp{};
    double yp{};
};

// J, Y and derivatives for nu >= 0, x > 0 (Temme series / Steed's method)
BesselJY bessel_jy(double nu, double x);

// Bessel function of the first kind J_nu(x), nu >= 0, x > 0
double bessel_j(double nu, double x);

// Bessel function of the second kind Y_nu(x), nu >= 0, x > 0
double bessel_y(double nu, double x);

/*!
 * Hankel function of the first kind, H1 = J + iY.
 *
 * For real order and argument the second kind is its conjugate,
 * H2_nu(x) = conj(H1_nu(x)).
 */
Complex hankel1(double nu, double x);

/*!
 * Oscillatory integral for imaginary Bessel order,
 * \f[
 *   I_\nu(a) = \int_{-\infty}^{\infty} e^{i(a\cosh t + |\nu| t)}\,dt
 *            = 2\int_0^\infty e^{ia\cosh t}\cos(|\nu|t)\,dt .
 * \f]
 *
 * Evaluated on the deformed path t = t* + u + i(pi/2) tanh(u) through the
 * real saddle t* = -asinh(|nu|/a); on that path the integrand modulus never
 * exceeds |dt/du|. Throws AccuracyError if the quadrature estimate exceeds
 * 1e-10 relative.
 */
Complex imag_order_integral(double nu_abs, double a);

// Same integral with a fixed composite Gauss-Legendre rule (for refinement
// checks); panels are spread evenly over the truncated contour.
Complex imag_order_integral_fixed(double nu_abs, double a, int panels);

// Digamma function psi(x) for x > 0
double digamma(double x);
}  // namespace abscat
