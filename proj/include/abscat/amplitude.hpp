#pragma once

#include <functional>
#include <vector>

#include "params.hpp"
#include "specfun.hpp"

namespace abscat
{
//! Tail treatment for the correction series f_w.
enum class Accel
{
    lerch_tail,  //!< asymptotic 1/u expansion summed through a Lerch integral
    log_subtraction,  //!< subtract c/m, add back -ln(1 - e^{i phi})
    digamma_formula,  //!< subtract c/(m - beta), add back via psi functions
    none  //!< plain partial sums with an Abel-test remainder bound
};

//! Truncation control for f_w.
struct SumSpec
{
    double tol{1e-8};
    long m_cap{20'000'000};
    Accel accel{Accel::lerch_tail};
    double phi_min{1e-6};
};

//! Value of a truncated series with a remainder bound.
struct SeriesResult
{
    Complex value{};
    long terms_used{0};
    double tail_bound{0};
};

//! Split amplitude at one angle: f_total = f_ab_mod + f_w.
struct AmplitudeBreakdown
{
    double phi{};
    Complex f_ab_mod{};
    Complex f_w{};
    Complex f_total{};
    long terms_used{0};
    double tail_bound{0};
};

inline constexpr double default_phi_min = 1e-6;

// Partial-wave prefactor e^{-i pi/4} / sqrt(2 pi p)
Complex amplitude_prefactor(double p);

// Aharonov-Bohm amplitude for any real beta
Complex f_ab_exact(double beta, double phi, double p);

// AB amplitude with the channels of \c bounds removed (closed form)
Complex f_ab_mod(ScatterParams const& params,
                 ChannelBounds const& bounds,
                 double phi,
                 double p);

// Correction series between the absorbing-wire and AB phase functions
SeriesResult f_w(ScatterParams const& params,
                 ChannelBounds const& bounds,
                 double phi,
                 double p,
                 SumSpec const& spec = {});

// Total amplitude for an absorbing wire
AmplitudeBreakdown f_total(ScatterParams const& params,
                           ChannelBounds const& bounds,
                           WireModel const& wire,
                           double phi,
                           double p,
                           SumSpec const& spec = {});

// Lerch sum sum_{m>=0} e^{i m phi}/(m + alpha) from the digamma formula
Complex lerch_digamma(double alpha, double phi);

//---------------------------------------------------------------------------//
// Abel-summation oracle
//---------------------------------------------------------------------------//

using PhaseSource = std::function<Complex(int)>;

struct AbelSchedule
{
    std::vector<double> radii;
    int order{3};
    double max_residual{1e-6};

    static AbelSchedule powers_of_two(int k_first, int k_last, int order = 3);
};

struct AbelResult
{
    Complex value{};
    double residual{0};
    std::vector<Complex> partial;
};

// Abel-regularized sum pref * sum_m (S_m - 1) r^|m| e^{i m phi}, r -> 1
AbelResult abel_sum(PhaseSource const& s_values,
                    double phi,
                    double p,
                    AbelSchedule const& schedule
                    = AbelSchedule::powers_of_two(4, 12));

// Extrapolated value only; throws ConvergenceError on a large residual
Complex abel_partial_wave(PhaseSource const& s_values,
                          double phi,
                          double p,
                          AbelSchedule const& schedule
                          = AbelSchedule::powers_of_two(4, 12));

// Pure AB phases e^{i pi (m - |m - beta|)}
Complex ab_phase(int m, double beta);

namespace detail
{
/*!
 * Taylor coefficients of exp(i pi chi(w)) in powers of w/alpha, where
 * chi(w) = (1 - sqrt(1 - A w^2))/w and w = 1/u. Entry n is d_n alpha^{-n}.
 */
std::vector<Complex> exp_chi_series(double coupling, double alpha, int order);

// log of the Cauchy bound on |exp(i pi chi)| for |w| = 1/(2 sqrt A)
double exp_chi_log_bound(double coupling);

// Bound on sum_{j > order} |d_j| sum_{i>=0} (alpha + i)^{-j}
double exp_chi_truncation(double coupling, double alpha, int order);

// Smallest order whose truncation bound is below budget (capped at 400)
int exp_chi_order(double coupling, double alpha, double budget);
}  // namespace detail
}  // namespace abscat
