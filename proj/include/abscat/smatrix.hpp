#pragma once

#include <optional>

#include "params.hpp"
#include "specfun.hpp"

namespace abscat
{
//---------------------------------------------------------------------------//
/*!
 * Phase function S_m = e^{2 i delta_m} of one partial wave.
 *
 * \c delta is empty for absorbed channels of the absorbing models. For the
 * reflecting wire it is reported on the principal branch (-pi/2, pi/2].
 */
struct PhaseEntry
{
    int m{};
    Complex s{};
    std::optional<double> delta;
    ChannelKind kind{ChannelKind::elastic};
};

// Phase function for channel m under the given wire model
PhaseEntry s_matrix(int m, ScatterParams const& params, WireModel const& wire);

// Hard-core factor mu_m(a) = J_nu(a) / H1_nu(a); requires nu^2 >= 0
Complex hardcore_mu(int m, ScatterParams const& params, double a);

//! Small-a phase shift in the published closed form.
double low_energy_delta(int m, ScatterParams const& params, double a);

/*!
 * Leading small-a phase shift derived from the integral representation.
 *
 * Differs from low_energy_delta only for nu^2 < 0, where
 * delta = pi m/2 + atan[tanh(pi|nu|/2) cot(|nu| ln(a/2) - arg Gamma(1+i|nu|))].
 */
double low_energy_delta_limit(int m, ScatterParams const& params, double a);

// arg Gamma(1 + i y), continuous in y (not reduced mod 2 pi)
double arg_gamma_one_plus_i(double y);

// Signed distance between two phases modulo pi, in [-pi/2, pi/2)
double phase_diff_mod_pi(double a, double b);
}  // namespace abscat
