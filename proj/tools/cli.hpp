#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "abscat/amplitude.hpp"
#include "abscat/params.hpp"
#include "abscat/xsection.hpp"

namespace abscat::cli
{
//! Invalid or inconsistent run configuration (exit code 2).
class ConfigError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//! Unreadable input or unwritable output (exit code 4).
class IoError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

enum ExitCode
{
    exit_ok = 0,
    exit_config = 2,
    exit_compute = 3,
    exit_io = 4
};

using KeyValues = std::map<std::string, std::string>;

struct RunConfig
{
    std::string mode{"scan"};

    std::optional<double> beta;
    std::optional<double> gamma;
    std::optional<double> gamma_tilde;
    std::string coupling{"exact"};

    // physical inputs (SI)
    std::optional<double> alpha;
    std::optional<double> kappa;
    std::optional<double> b_field;
    std::optional<double> m0;
    std::optional<double> rho0;
    std::optional<double> e_field;

    std::string wire{"thin-absorbing"};
    std::optional<double> a;

    double p{1};
    double phi_min{0.01};
    double phi_max{1.5};
    int n_points{200};
    std::string grid{"linear"};
    double tol{1e-8};
    std::string accel{"lerch-tail"};

    std::optional<int> m_min;
    std::optional<int> m_max;
    std::string which{"a"};

    std::string output;
    std::string output_dir{"."};
    bool plot{false};
    unsigned threads{0};
};

// Keys accepted in config files and as --flags
std::vector<std::string> const& config_keys();

// key=value lines; '#' starts a comment. A scan table is also accepted, in
// which case the configuration echoed in its header comment is read.
KeyValues read_config_file(std::string const& path);
KeyValues parse_config_text(std::string const& text);

RunConfig build_config(KeyValues const& values);
bool physical_mode(RunConfig const& cfg);
ScatterParams scatter_params(RunConfig const& cfg);
WireModel wire_model(RunConfig const& cfg);
SumSpec sum_spec(RunConfig const& cfg);
std::vector<double> angle_grid(RunConfig const& cfg);

// Configuration as "key=value; ..." (outputs and threads omitted)
std::string echo_config(RunConfig const& cfg);

std::string format_number(double x);
std::string scan_header();
void write_scan_table(std::ostream& os,
                      AngularScan const& scan,
                      std::string const& comment);

void print_params(std::ostream& os, RunConfig const& cfg);
void print_channels(std::ostream& os, RunConfig const& cfg);
void print_smatrix(std::ostream& os, RunConfig const& cfg);
AngularScan run_scan(RunConfig const& cfg);

//---------------------------------------------------------------------------//
// Figure reproduction
//---------------------------------------------------------------------------//

struct Extremum
{
    double phi;
    double y;
    bool maximum;
};

struct FigureCurve
{
    double beta;
    AngularScan scan;
    std::vector<Extremum> extrema;
};

struct FigureResult
{
    char which{'a'};
    double gamma{};
    std::vector<FigureCurve> curves;
    std::optional<double> phi_star;
    bool half_above_below_star{false};
    int alternating_extrema_beta0{0};
    double max_extremum_shift{0};
    double grid_spacing{0};
};

// Local extrema of y on [lo, hi], in increasing phi
std::vector<Extremum> local_extrema(AngularScan const& scan,
                                    double lo,
                                    double hi);

// Longest alternating max/min run among extrema
int alternating_count(std::vector<Extremum> const& extrema);

/*!
 * Largest phi* such that y(beta=1/2) > y(beta=0) on (0, phi*).
 *
 * Scans a logarithmic grid from phi_floor and refines the first crossing by
 * bisection; empty when beta=1/2 is not larger at phi_floor.
 */
std::optional<double> dominance_threshold(double gamma,
                                          double phi_floor,
                                          double phi_ceil,
                                          SumSpec const& spec);

FigureResult figure_command(char which,
                            int n_points,
                            double tol,
                            unsigned threads);

void write_figure(FigureResult const& fig,
                  std::string const& dir,
                  bool plot,
                  std::string const& comment);

//! Poly-line curve for the SVG writer.
struct PlotSeries
{
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    double width{1};
};

std::string svg_plot(std::vector<PlotSeries> const& series,
                     std::string const& title,
                     std::string const& x_label,
                     std::string const& y_label,
                     bool log_y);
}  // namespace abscat::cli
