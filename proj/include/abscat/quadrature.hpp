#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <queue>
#include <type_traits>
#include <utility>
#include <vector>

namespace abscat
{
template<class T>
struct QuadResult
{
    T value{};
    double error{0};
    int evaluations{0};
    bool converged{true};
};

namespace detail
{
// Kronrod 15-point extension of the 7-point Gauss rule (QUADPACK qk15)
inline constexpr std::array<double, 8> kronrod15_nodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
inline constexpr std::array<double, 8> kronrod15_weights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
inline constexpr std::array<double, 4> gauss7_weights = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

inline constexpr std::array<double, 5> gauss10_nodes = {
    0.1488743389816312108848260,
    0.4333953941292471907992659,
    0.6794095682990244062343274,
    0.8650633666889845107320967,
    0.9739065285171717200779640,
};
inline constexpr std::array<double, 5> gauss10_weights = {
    0.2955242247147528701738930,
    0.2692667193099963550912269,
    0.2190863625159820439955349,
    0.1494513491505805931457763,
    0.0666713443086881375935688,
};

template<class T>
struct Panel
{
    double a;
    double b;
    T value;
    double error;

    bool operator<(Panel const& other) const { return error < other.error; }
};

template<class F>
auto kronrod15(F& f, double a, double b)
{
    using T = std::decay_t<decltype(f(a))>;
    double const center = 0.5 * (a + b);
    double const half = 0.5 * (b - a);

    T const fc = f(center);
    T kronrod = fc * kronrod15_weights[7];
    T gauss = fc * gauss7_weights[3];
    for (std::size_t j = 0; j < 7; ++j)
    {
        double const dx = half * kronrod15_nodes[j];
        T const sum = f(center - dx) + f(center + dx);
        kronrod += sum * kronrod15_weights[j];
        if (j % 2 == 1)
        {
            gauss += sum * gauss7_weights[j / 2];
        }
    }
    kronrod *= half;
    gauss *= half;
    return Panel<T>{a, b, kronrod, std::abs(kronrod - gauss)};
}
}  // namespace detail

//---------------------------------------------------------------------------//
/*!
 * Globally adaptive Gauss-Kronrod (7/15) quadrature on [a, b].
 *
 * The panel with the largest error estimate is bisected until the summed
 * estimate drops below max(abs_tol, rel_tol * |I|). The error estimate is
 * the raw |K15 - G7| difference, which overstates the K15 error for smooth
 * integrands. Works for real and complex valued integrands.
 */
template<class F>
auto integrate(F&& f,
               double a,
               double b,
               double abs_tol,
               double rel_tol,
               int max_panels = 4000)
{
    using T = std::decay_t<decltype(f(a))>;
    using PanelT = detail::Panel<T>;

    QuadResult<T> result;
    if (a == b)
    {
        return result;
    }

    std::priority_queue<PanelT> panels;
    auto first = detail::kronrod15(f, a, b);
    result.value = first.value;
    result.error = first.error;
    result.evaluations = 15;
    panels.push(first);

    while (result.error > std::max(abs_tol, rel_tol * std::abs(result.value)))
    {
        if (static_cast<int>(panels.size()) >= max_panels)
        {
            result.converged = false;
            break;
        }
        PanelT worst = panels.top();
        panels.pop();
        double const mid = 0.5 * (worst.a + worst.b);
        auto left = detail::kronrod15(f, worst.a, mid);
        auto right = detail::kronrod15(f, mid, worst.b);
        result.evaluations += 30;
        result.value += left.value + right.value - worst.value;
        result.error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }

    // Resum to shed the drift of incremental updates
    T total{};
    double err = 0;
    while (!panels.empty())
    {
        total += panels.top().value;
        err += panels.top().error;
        panels.pop();
    }
    result.value = total;
    result.error = err;
    return result;
}

//! Adaptive integration over consecutive breakpoints.
template<class F>
auto integrate(F&& f,
               std::vector<double> const& breaks,
               double abs_tol,
               double rel_tol,
               int max_panels_each = 4000)
{
    using T = std::decay_t<decltype(f(breaks.front()))>;
    QuadResult<T> result;
    std::size_t const n = breaks.size() > 1 ? breaks.size() - 1 : 1;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
    {
        auto piece = integrate(f,
                               breaks[i],
                               breaks[i + 1],
                               abs_tol / static_cast<double>(n),
                               rel_tol,
                               max_panels_each);
        result.value += piece.value;
        result.error += piece.error;
        result.evaluations += piece.evaluations;
        result.converged = result.converged && piece.converged;
    }
    return result;
}

//! Composite 10-point Gauss-Legendre rule with equal panels.
template<class F>
auto gauss_legendre(F&& f, double a, double b, int panels)
{
    using T = std::decay_t<decltype(f(a))>;
    T total{};
    double const width = (b - a) / panels;
    for (int p = 0; p < panels; ++p)
    {
        double const center = a + (p + 0.5) * width;
        double const half = 0.5 * width;
        T sum{};
        for (std::size_t j = 0; j < detail::gauss10_nodes.size(); ++j)
        {
            double const dx = half * detail::gauss10_nodes[j];
            sum += (f(center - dx) + f(center + dx))
                   * detail::gauss10_weights[j];
        }
        total += sum * half;
    }
    return total;
}
}  // namespace abscat
