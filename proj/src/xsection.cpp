#include "abscat/xsection.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>

#include "abscat/errors.hpp"
#include "abscat/quadrature.hpp"

namespace abscat
{
namespace
{
constexpr double pi = std::numbers::pi;

// Bernoulli numbers B_2k / (2k)!
constexpr double bernoulli_scaled[] = {
    1.0 / 12, -1.0 / 720, 1.0 / 30240, -1.0 / 1209600, 1.0 / 47900160,
};

// sum_{j>=0} (alpha / (alpha + j))^n for n >= 2 (Euler-Maclaurin)
double scaled_hurwitz(int n, double alpha)
{
    int const direct = n + 20;
    double sum = 0;
    for (int j = 0; j < direct; ++j)
    {
        sum += std::pow(alpha / (alpha + j), n);
    }
    double const x = alpha + direct;
    double tail = x / (n - 1) + 0.5;
    double rising = n;  // n (n+1) ... (n + 2k - 2)
    double xp = 1 / x;
    for (int k = 0; k < 5; ++k)
    {
        tail += bernoulli_scaled[k] * rising * xp;
        rising *= (n + 2.0 * k + 1) * (n + 2.0 * k + 2);
        xp /= x * x;
    }
    return sum + std::pow(alpha / x, n) * tail;
}

// sum_{k >= first} |e^{i pi chi(k - shift)} - 1|^2
double side_norm(double coupling, double shift, long first)
{
    if (coupling == 0)
    {
        return 0;
    }
    double const root = std::sqrt(coupling);
    double const alpha_min
        = std::max({4 * root + 10, 0.5 * pi * coupling, 50.0});
    long const n_split = std::max(
        first, static_cast<long>(std::ceil(shift + alpha_min)));
    double sum = 0;
    for (long k = first; k < n_split; ++k)
    {
        double const u = k - shift;
        double const disc = std::max(0.0, (u - root) * (u + root));
        double const s = std::sin(0.5 * pi * coupling / (u + std::sqrt(disc)));
        sum += 4 * s * s;
    }
    // |b|^2 = 2 - 2 cos(pi chi) = -2 sum_n Re(d_n) u^{-n}
    double const alpha = n_split - shift;
    int const order = detail::exp_chi_order(coupling, alpha, 1e-18);
    auto const e = detail::exp_chi_series(coupling, alpha, order);
    for (int n = 2; n <= order; ++n)
    {
        sum += -2 * e[n].real() * scaled_hurwitz(n, alpha);
    }
    return sum;
}

// Same error type with the failing angle prepended
std::exception_ptr annotate(std::exception_ptr e, double phi)
{
    std::string const at = "phi = " + std::to_string(phi) + ": ";
    try
    {
        std::rethrow_exception(e);
    }
    catch (DomainError const& x)
    {
        return std::make_exception_ptr(DomainError(at + x.what()));
    }
    catch (AccuracyError const& x)
    {
        return std::make_exception_ptr(AccuracyError(at + x.what()));
    }
    catch (ConvergenceError const& x)
    {
        return std::make_exception_ptr(ConvergenceError(at + x.what()));
    }
    catch (...)
    {
        return e;
    }
}

double f_w_norm_sq(ScatterParams const& params,
                   ChannelBounds const& bounds,
                   double phi,
                   double p,
                   SumSpec const& spec)
{
    return std::norm(f_w(params, bounds, phi, p, spec).value);
}
}  // namespace

double scaled_dcs(ScatterParams const& params,
                  ChannelBounds const& bounds,
                  WireModel const& wire,
                  double phi,
                  double p,
                  SumSpec const& spec)
{
    auto const f = f_total(params, bounds, wire, phi, p, spec);
    return 2 * pi * p * std::norm(f.f_total);
}

double sigma_absorption(ScatterParams const&,
                        ChannelBounds const& bounds,
                        WireModel const& wire,
                        double p)
{
    validate(wire);
    if (!is_absorbing(wire))
    {
        throw DomainError("sigma_absorption: the reflecting wire is elastic");
    }
    if (!(p > 0))
    {
        throw DomainError("sigma_absorption: p must be positive");
    }
    return bounds.absorbed_count() / p;
}

double coefficient_norm(ScatterParams const& params,
                        ChannelBounds const& bounds,
                        double p)
{
    if (!(p > 0))
    {
        throw DomainError("coefficient_norm: p must be positive");
    }
    double const a = params.coupling_strength();
    return (side_norm(a, params.beta, bounds.hi + 1L)
            + side_norm(a, -params.beta, 1L - bounds.lo))
           / p;
}

ParsevalReport parseval_check(ScatterParams const& params,
                              ChannelBounds const& bounds,
                              double p,
                              SumSpec const& spec,
                              double phi_min)
{
    ParsevalReport r;
    r.coefficient_sum = coefficient_norm(params, bounds, p);
    if (params.coupling_strength() == 0)
    {
        return r;
    }
    SumSpec inner = spec;
    inner.phi_min = std::min(spec.phi_min, 0.5 * phi_min);

    // log-graded panels toward the |ln phi|^2 singularity at 0
    std::vector<double> breaks;
    for (double x = phi_min; x < 0.5; x *= 4)
    {
        breaks.push_back(x);
    }
    for (double x = 0.5; x < pi; x += 0.5)
    {
        breaks.push_back(x);
    }
    breaks.push_back(pi);

    double const tol = 1e-10 * r.coefficient_sum;
    auto upper = [&](double phi) {
        return f_w_norm_sq(params, bounds, phi, p, inner);
    };
    auto lower = [&](double phi) {
        return f_w_norm_sq(params, bounds, -phi, p, inner);
    };
    auto const qa = integrate(upper, breaks, tol, 1e-10, 200);
    auto const qb = integrate(lower, breaks, tol, 1e-10, 200);
    r.integral = qa.value + qb.value;
    r.integral_error = qa.error + qb.error;

    // |f_w|^2 ~ c^2 ln^2 phi near 0: int_0^h = h c^2 (L^2 - 2L + 2)
    double const l = std::log(phi_min);
    double const edge = upper(phi_min) + lower(phi_min);
    r.sliver = phi_min * edge * (l * l - 2 * l + 2) / (l * l);
    r.integral += r.sliver;

    r.gap = r.coefficient_sum > 0
                ? std::abs(r.integral - r.coefficient_sum) / r.coefficient_sum
                : 0;
    return r;
}

double parseval_gap(ScatterParams const& params,
                    ChannelBounds const& bounds,
                    double p,
                    SumSpec const& spec)
{
    return parseval_check(params, bounds, p, spec).gap;
}

AngularScan angular_scan(ScatterParams const& params,
                         WireModel const& wire,
                         double p,
                         std::vector<double> const& grid,
                         SumSpec const& spec,
                         unsigned threads)
{
    AngularScan scan;
    scan.params = params;
    scan.wire = wire;
    scan.p = p;
    scan.grid = grid;
    scan.rows.resize(grid.size());
    auto const bounds = channel_bounds(params, wire);

    if (threads == 0)
    {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = std::min<unsigned>(threads, std::max<std::size_t>(1, grid.size()));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++)
        {
            try
            {
                auto const f = f_total(params, bounds, wire, grid[i], p, spec);
                ScanRow& row = scan.rows[i];
                row.phi = grid[i];
                row.f = f.f_total;
                row.f_ab_mod = f.f_ab_mod;
                row.f_w = f.f_w;
                row.tail_bound = f.tail_bound;
                row.y = 2 * pi * p * std::norm(f.f_total);
            }
            catch (...)
            {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure)
                {
                    failure = annotate(std::current_exception(), grid[i]);
                }
                next = grid.size();
            }
        }
    };
    if (threads == 1)
    {
        worker();
    }
    else
    {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
        {
            pool.emplace_back(worker);
        }
        for (auto& t : pool)
        {
            t.join();
        }
    }
    if (failure)
    {
        std::rethrow_exception(failure);
    }
    return scan;
}

std::vector<double> linear_grid(double lo, double hi, int n)
{
    if (n < 2 || !(hi > lo))
    {
        throw DomainError("grid needs n >= 2 and hi > lo");
    }
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i)
    {
        g[i] = lo + (hi - lo) * i / (n - 1);
    }
    g.back() = hi;
    return g;
}

std::vector<double> log_grid(double lo, double hi, int n)
{
    if (n < 2 || !(hi > lo) || !(lo > 0))
    {
        throw DomainError("log grid needs n >= 2 and 0 < lo < hi");
    }
    std::vector<double> g(n);
    double const ratio = std::log(hi / lo);
    for (int i = 0; i < n; ++i)
    {
        g[i] = lo * std::exp(ratio * i / (n - 1));
    }
    g.front() = lo;
    g.back() = hi;
    return g;
}
}  // namespace abscat
