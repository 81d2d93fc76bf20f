#pragma once

#include <optional>
#include <variant>

namespace abscat
{
//---------------------------------------------------------------------------//
// Physical constants (SI, CODATA 2018 exact/recommended values)
//---------------------------------------------------------------------------//
inline constexpr double hbar_si = 1.054571817e-34;  // J s
inline constexpr double c_light_si = 299792458.0;  // m/s

//---------------------------------------------------------------------------//
/*!
 * Laboratory inputs in SI units.
 *
 * The wire field is E(rho) = kappa / (2 pi rho). Either \c kappa or
 * \c field_at_surface (together with \c rho0) must be given.
 */
struct PhysicalInputs
{
    double alpha{};  //!< polarizability [C m^2 / V]
    std::optional<double> kappa;  //!< wire voltage parameter [V]
    double b_field{};  //!< magnetic flux density [T]
    double m0{};  //!< atom rest mass [kg]
    std::optional<double> rho0;  //!< wire radius [m]
    std::optional<double> field_at_surface;  //!< E at rho0 [V/m]
};

enum class CouplingMode
{
    exact,  //!< nu^2 = m^2 - 2 m beta - gamma^2
    decoupled,  //!< nu^2 = (m - beta)^2 - gamma_tilde^2
};

//---------------------------------------------------------------------------//
/*!
 * Dimensionless field parameters.
 *
 * In decoupled mode \c gamma_tilde replaces sqrt(gamma^2 + beta^2), which
 * drops the magnetic mass and makes every observable periodic in beta.
 */
struct ScatterParams
{
    double beta{0};
    double gamma{0};
    double epsilon{0};  //!< magnetic-mass ratio beta^2 / gamma^2
    CouplingMode coupling{CouplingMode::exact};
    double gamma_tilde{0};

    static ScatterParams exact(double beta, double gamma);
    static ScatterParams decoupled(double beta, double gamma_tilde);

    //! Numerator beta^2 + gamma^2 (or gamma_tilde^2) of the effective
    //! inverse-square coupling.
    double coupling_strength() const;

    //! Same parameters with beta negated.
    ScatterParams mirrored() const;
};

enum class ChannelKind
{
    elastic,
    threshold,
    absorbed,
};

struct OrderNu
{
    int m{};
    double nu_sq{};
    ChannelKind kind{ChannelKind::elastic};
    double magnitude{};  //!< sqrt(|nu^2|)
};

//---------------------------------------------------------------------------//
/*!
 * Contiguous set of absorbed channels [lo, hi].
 *
 * The conventional labels are m_minus = -lo and m_plus = hi. An empty set
 * is stored as hi == lo - 1 with lo - 1 < beta < lo.
 */
struct ChannelBounds
{
    int lo{1};
    int hi{0};

    int m_minus() const { return -lo; }
    int m_plus() const { return hi; }
    int absorbed_count() const { return hi >= lo ? hi - lo + 1 : 0; }
    bool empty() const { return hi < lo; }
    bool contains(int m) const { return m >= lo && m <= hi; }
};

struct ThinAbsorbing
{
};
struct FiniteAbsorbing
{
    double a;  //!< p rho0
};
struct Reflecting
{
    double a;  //!< p rho0
};

using WireModel = std::variant<ThinAbsorbing, FiniteAbsorbing, Reflecting>;

bool is_absorbing(WireModel const& wire);

//---------------------------------------------------------------------------//
// Operations
//---------------------------------------------------------------------------//

// Convert SI inputs to dimensionless parameters (exact coupling)
ScatterParams derive_params(PhysicalInputs const& phys);

// Effective squared Bessel order for channel m
double nu_squared(int m, ScatterParams const& params);

// Order and channel classification for channel m
OrderNu order_nu(int m, ScatterParams const& params);

// Absorbed channel interval for a wire model
ChannelBounds channel_bounds(ScatterParams const& params,
                             WireModel const& wire = ThinAbsorbing{});

// Validate the wire model (a > 0 where present)
void validate(WireModel const& wire);
}  // namespace abscat
