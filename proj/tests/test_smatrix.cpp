#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "abscat/errors.hpp"
#include "abscat/smatrix.hpp"

using namespace abscat;

namespace
{
constexpr double pi = std::numbers::pi;
}

TEST_CASE("thin absorbing wire phases")
{
    auto const p = ScatterParams::exact(0.5, 5.1);
    auto const e0 = s_matrix(0, p, ThinAbsorbing{});
    CHECK(e0.s == Complex(0, 0));
    CHECK(e0.kind == ChannelKind::absorbed);
    CHECK_FALSE(e0.delta.has_value());

    auto const e6 = s_matrix(6, p, ThinAbsorbing{});
    double const nu = std::sqrt(3.99);
    CHECK(std::abs(e6.s - std::polar(1.0, pi * (6 - nu))) < 1e-15);
    REQUIRE(e6.delta.has_value());
    CHECK(*e6.delta == doctest::Approx(pi * (6 - nu) / 2));
    CHECK(std::abs(std::polar(1.0, 2 * *e6.delta) - e6.s) < 1e-14);
    CHECK(std::abs(e6.s) == 1.0);

    // threshold channel of the free problem: S = e^{i pi m}
    auto const t = s_matrix(0, ScatterParams::exact(0, 0), ThinAbsorbing{});
    CHECK(t.kind == ChannelKind::threshold);
    CHECK(std::abs(t.s - 1.0) < 1e-15);
}

TEST_CASE("finite absorbing wire removes |m| <= floor(a)")
{
    auto const p = ScatterParams::exact(0.2, 1.0);
    for (int m = -9; m <= 9; ++m)
    {
        auto const e = s_matrix(m, p, FiniteAbsorbing{7.9});
        if (std::abs(m) <= 7)
        {
            CHECK(e.s == Complex(0, 0));
        }
        else
        {
            double const nu = std::sqrt(nu_squared(m, p));
            CHECK(std::abs(e.s - std::polar(1.0, pi * (m - nu))) < 1e-14);
        }
    }
}

TEST_CASE("reflecting wire at half order")
{
    auto const p = ScatterParams::exact(0, std::sqrt(3.0) / 2);
    CHECK(order_nu(1, p).magnitude == doctest::Approx(0.5).epsilon(1e-15));
    for (double a : {0.1, 1.0, 5.0})
    {
        auto const e = s_matrix(1, p, Reflecting{a});
        Complex const expect = Complex(0, 1) * std::polar(1.0, -2 * a);
        CHECK(std::abs(e.s - expect) < 1e-10);
        REQUIRE(e.delta.has_value());
        CHECK(std::abs(phase_diff_mod_pi(*e.delta, pi / 4 - a)) < 1e-8);

        Complex const mu = Complex(0, 1) * std::sin(a) * std::polar(1.0, -a);
        CHECK(std::abs(hardcore_mu(1, p, a) - mu) < 1e-10);
    }
}

TEST_CASE("hard-core factor relations")
{
    auto const p = ScatterParams::exact(0.3, 1.7);
    for (double a : {0.05, 0.8, 3.0, 12.0})
    {
        for (int m = 3; m <= 12; ++m)
        {
            auto const o = order_nu(m, p);
            REQUIRE(o.kind == ChannelKind::elastic);
            auto const s = s_matrix(m, p, Reflecting{a}).s;
            Complex const mu = hardcore_mu(m, p, a);
            Complex const from_s
                = 0.5 * (1.0 - std::polar(1.0, -pi * (m - o.magnitude)) * s);
            CHECK(std::abs(mu - from_s) < 1e-12);
        }
    }
    // small radius and growing order both suppress mu
    CHECK(std::abs(hardcore_mu(5, p, 1e-4)) < 1e-20);
    double last = INFINITY;
    for (int m = 3; m <= 40; ++m)
    {
        double const now = std::abs(hardcore_mu(m, p, 1.0));
        CHECK((now < last || now == 0));
        last = now;
    }
    CHECK_THROWS_AS(hardcore_mu(0, p, 1.0), DomainError);
}

TEST_CASE("reflecting wire is unitary in every channel")
{
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> beta(-2, 2);
    std::uniform_real_distribution<double> gamma(0, 12);
    std::uniform_real_distribution<double> radius(0.1, 20);
    for (int i = 0; i < 25; ++i)
    {
        auto const p = ScatterParams::exact(beta(rng), gamma(rng));
        double const a = radius(rng);
        auto const b = channel_bounds(p);
        int const reach = std::max(b.m_plus(), b.m_minus()) + 20;
        for (int m = -reach; m <= reach; ++m)
        {
            auto const e = s_matrix(m, p, Reflecting{a});
            CHECK(std::abs(std::abs(e.s) - 1) < 1e-6);
        }
    }
}

TEST_CASE("reflecting wire approaches the thin wire for small radius")
{
    auto const p = ScatterParams::exact(0.4, 3.3);
    auto const b = channel_bounds(p);
    for (int m = b.hi + 1; m <= b.hi + 8; ++m)
    {
        auto const thin = s_matrix(m, p, ThinAbsorbing{}).s;
        auto const hard = s_matrix(m, p, Reflecting{1e-4}).s;
        CHECK(std::abs(std::arg(hard / thin)) < 1e-3);
        double const delta = *s_matrix(m, p, Reflecting{1e-4}).delta;
        CHECK(std::abs(phase_diff_mod_pi(delta, low_energy_delta(m, p, 1e-4)))
              < 1e-3);
    }
}

TEST_CASE("derived small-radius limit of absorbed-interval channels")
{
    auto const p = ScatterParams::exact(0.5, 5.1);
    auto const b = channel_bounds(p);
    for (int m = b.lo; m <= b.hi; ++m)
    {
        double const delta = *s_matrix(m, p, Reflecting{1e-3}).delta;
        CHECK(std::abs(
                  phase_diff_mod_pi(delta, low_energy_delta_limit(m, p, 1e-3)))
              < 1e-3);
    }
}

TEST_CASE("published small-radius formula")
{
    auto const p = ScatterParams::exact(0.5, 5.1);
    // elastic channels: independent of a
    CHECK(low_energy_delta(7, p, 1e-3) == low_energy_delta(7, p, 1e-6));
    double const nu7 = std::sqrt(nu_squared(7, p));
    CHECK(low_energy_delta(7, p, 1e-3) == doctest::Approx(pi * (7 - nu7) / 2));

    // absorbed channel: log-periodic in a with period pi/|nu|
    double const nu = order_nu(2, p).magnitude;
    for (double a : {1e-3, 3e-4, 1e-5})
    {
        double const shifted = a * std::exp(pi / nu);
        CHECK(std::abs(phase_diff_mod_pi(low_energy_delta(2, p, a),
                                         low_energy_delta(2, p, shifted)))
              < 1e-9);
    }

    // |nu| -> 0: the arctan term vanishes
    auto const q = ScatterParams::exact(0.0, 1e-7);
    CHECK(std::abs(low_energy_delta(0, q, 1e-3)) < 1e-6);
}

TEST_CASE("arg Gamma(1 + iy)")
{
    // arg Gamma(1 + iy) = -euler y + sum_k (y/k - atan(y/k)) for small y
    double const euler = 0.57721566490153286;
    for (double y : {0.1, 0.5, 1.0})
    {
        double s = -euler * y;
        for (int k = 1; k < 2000000; ++k)
        {
            s += y / k - std::atan(y / k);
        }
        CHECK(arg_gamma_one_plus_i(y) == doctest::Approx(s).epsilon(1e-9));
    }
    // value from an arbitrary-precision log-gamma
    CHECK(arg_gamma_one_plus_i(5.0)
          == doctest::Approx(3.81589857461492).epsilon(1e-12));
}

TEST_CASE("mirror symmetry of the phase function")
{
    auto const p = ScatterParams::exact(0.37, 4.2);
    WireModel const wires[] = {ThinAbsorbing{}, FiniteAbsorbing{3.4},
                               Reflecting{2.1}};
    for (auto const& w : wires)
    {
        for (int m = -12; m <= 12; ++m)
        {
            auto const s = s_matrix(m, p, w).s;
            auto const t = s_matrix(-m, p.mirrored(), w).s;
            CHECK(std::abs(s - t) < 1e-12);
        }
    }
}
