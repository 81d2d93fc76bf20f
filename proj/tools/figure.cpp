#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace abscat::cli
{
namespace
{
constexpr double figure_phi_lo = 0.01;
constexpr double figure_phi_hi = 1.5;
constexpr double extrema_lo = 0.3;

double y_at(double beta, double gamma, double phi, SumSpec const& spec)
{
    auto const params = ScatterParams::exact(beta, gamma);
    auto const bounds = channel_bounds(params);
    return scaled_dcs(params, bounds, ThinAbsorbing{}, phi, 1.0, spec);
}

std::string beta_tag(double beta)
{
    return beta == 0 ? "0" : "0.5";
}

void write_file(std::string const& path, std::string const& text)
{
    std::ofstream out(path);
    out << text;
    if (!out)
    {
        throw IoError("cannot write '" + path + "'");
    }
}
}  // namespace

std::vector<Extremum> local_extrema(AngularScan const& scan,
                                    double lo,
                                    double hi)
{
    std::vector<Extremum> out;
    auto const& r = scan.rows;
    for (std::size_t i = 1; i + 1 < r.size(); ++i)
    {
        if (r[i].phi < lo || r[i].phi > hi)
        {
            continue;
        }
        bool const max = r[i].y > r[i - 1].y && r[i].y > r[i + 1].y;
        bool const min = r[i].y < r[i - 1].y && r[i].y < r[i + 1].y;
        if (max || min)
        {
            out.push_back({r[i].phi, r[i].y, max});
        }
    }
    return out;
}

int alternating_count(std::vector<Extremum> const& extrema)
{
    int best = extrema.empty() ? 0 : 1;
    int run = best;
    for (std::size_t i = 1; i < extrema.size(); ++i)
    {
        run = extrema[i].maximum != extrema[i - 1].maximum ? run + 1 : 1;
        best = std::max(best, run);
    }
    return best;
}

std::optional<double> dominance_threshold(double gamma,
                                          double phi_floor,
                                          double phi_ceil,
                                          SumSpec const& spec)
{
    auto excess = [&](double phi) {
        return y_at(0.5, gamma, phi, spec) - y_at(0.0, gamma, phi, spec);
    };
    auto const grid = log_grid(phi_floor, phi_ceil, 400);
    if (!(excess(grid.front()) > 0))
    {
        return std::nullopt;
    }
    for (std::size_t i = 1; i < grid.size(); ++i)
    {
        if (!(excess(grid[i]) > 0))
        {
            double lo = grid[i - 1];
            double hi = grid[i];
            for (int it = 0; it < 50; ++it)
            {
                double const mid = std::sqrt(lo * hi);
                (excess(mid) > 0 ? lo : hi) = mid;
            }
            return lo;
        }
    }
    return phi_ceil;
}

FigureResult figure_command(char which,
                            int n_points,
                            double tol,
                            unsigned threads)
{
    FigureResult fig;
    fig.which = which;
    fig.gamma = which == 'a' ? 5.1 : 50.1;
    SumSpec spec;
    spec.tol = tol;
    auto const grid = linear_grid(figure_phi_lo, figure_phi_hi, n_points);
    fig.grid_spacing = grid[1] - grid[0];
    for (double beta : {0.0, 0.5})
    {
        FigureCurve c;
        c.beta = beta;
        c.scan = angular_scan(ScatterParams::exact(beta, fig.gamma),
                              ThinAbsorbing{},
                              1.0,
                              grid,
                              spec,
                              threads);
        c.extrema = local_extrema(c.scan, extrema_lo, figure_phi_hi);
        fig.curves.push_back(std::move(c));
    }
    auto const& zero = fig.curves[0];
    auto const& half = fig.curves[1];
    fig.alternating_extrema_beta0 = alternating_count(zero.extrema);

    fig.phi_star = dominance_threshold(fig.gamma, 1e-5, figure_phi_hi, spec);
    fig.half_above_below_star = fig.phi_star.has_value();
    if (fig.phi_star)
    {
        for (std::size_t i = 0; i < grid.size(); ++i)
        {
            if (grid[i] < *fig.phi_star
                && !(half.scan.rows[i].y > zero.scan.rows[i].y))
            {
                fig.half_above_below_star = false;
            }
        }
    }

    // median distance from each beta=0 extremum to the nearest beta=1/2
    // extremum of the same type
    std::vector<double> shifts;
    for (auto const& e : zero.extrema)
    {
        double best = INFINITY;
        for (auto const& f : half.extrema)
        {
            if (f.maximum == e.maximum)
            {
                best = std::min(best, std::abs(f.phi - e.phi));
            }
        }
        if (std::isfinite(best))
        {
            shifts.push_back(best);
        }
    }
    if (!shifts.empty())
    {
        std::sort(shifts.begin(), shifts.end());
        fig.max_extremum_shift = shifts[shifts.size() / 2];
    }
    return fig;
}

void write_figure(FigureResult const& fig,
                  std::string const& dir,
                  bool plot,
                  std::string const& comment)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
    {
        throw IoError("cannot create directory '" + dir + "'");
    }
    std::string const stem = dir + "/figure_" + fig.which;
    for (auto const& c : fig.curves)
    {
        RunConfig scan_cfg;
        scan_cfg.mode = "scan";
        scan_cfg.beta = c.beta;
        scan_cfg.gamma = fig.gamma;
        scan_cfg.phi_min = c.scan.grid.front();
        scan_cfg.phi_max = c.scan.grid.back();
        scan_cfg.n_points = static_cast<int>(c.scan.grid.size());
        std::ostringstream os;
        write_scan_table(os, c.scan, comment + "; " + echo_config(scan_cfg));
        write_file(stem + "_beta" + beta_tag(c.beta) + ".csv", os.str());
    }

    std::ostringstream s;
    s << "figure=" << fig.which << "\n";
    s << "gamma=" << format_number(fig.gamma) << "\n";
    s << "grid_spacing=" << format_number(fig.grid_spacing) << "\n";
    s << "phi_star="
      << (fig.phi_star ? format_number(*fig.phi_star) : std::string("none"))
      << "\n";
    s << "beta_half_above_beta0_below_phi_star="
      << (fig.half_above_below_star ? "true" : "false") << "\n";
    s << "alternating_extrema_beta0=" << fig.alternating_extrema_beta0 << "\n";
    s << "median_extremum_shift=" << format_number(fig.max_extremum_shift)
      << "\n";
    for (auto const& c : fig.curves)
    {
        for (auto const& e : c.extrema)
        {
            s << "extremum beta=" << beta_tag(c.beta)
              << " kind=" << (e.maximum ? "max" : "min")
              << " phi=" << format_number(e.phi)
              << " y=" << format_number(e.y) << "\n";
        }
    }
    write_file(stem + "_summary.txt", s.str());

    if (plot)
    {
        std::vector<PlotSeries> series;
        for (auto const& c : fig.curves)
        {
            PlotSeries ps;
            ps.label = "beta=" + beta_tag(c.beta);
            ps.width = c.beta == 0 ? 1.0 : 2.6;
            for (auto const& r : c.scan.rows)
            {
                ps.x.push_back(r.phi);
                ps.y.push_back(r.y);
            }
            series.push_back(std::move(ps));
        }
        write_file(stem + ".svg",
                   svg_plot(series,
                            "thin absorbing wire, gamma=" + format_number(fig.gamma),
                            "phi (rad)",
                            "y = 2 pi p |f|^2",
                            true));
    }
}
}  // namespace abscat::cli
