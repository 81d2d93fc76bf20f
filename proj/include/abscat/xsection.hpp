#pragma once

#include <vector>

#include "amplitude.hpp"
#include "params.hpp"

namespace abscat
{
//! One angle of a scan; y = 2 pi p |f|^2.
struct ScanRow
{
    double phi{};
    double y{};
    Complex f{};
    Complex f_ab_mod{};
    Complex f_w{};
    double tail_bound{0};
};

struct AngularScan
{
    ScatterParams params;
    WireModel wire;
    double p{1};
    std::vector<double> grid;
    std::vector<ScanRow> rows;
};

// Scaled differential cross section y = 2 pi p |f_total(phi)|^2
double scaled_dcs(ScatterParams const& params,
                  ChannelBounds const& bounds,
                  WireModel const& wire,
                  double phi,
                  double p,
                  SumSpec const& spec = {});

// Absorption cross section: absorbed channel count / p
double sigma_absorption(ScatterParams const& params,
                        ChannelBounds const& bounds,
                        WireModel const& wire,
                        double p);

//! Both sides of the Parseval identity for f_w.
struct ParsevalReport
{
    double integral{0};  //!< int |f_w|^2 dphi over |phi| >= phi_min
    double integral_error{0};
    double sliver{0};  //!< estimate for |phi| < phi_min, added to integral
    double coefficient_sum{0};  //!< (1/p) sum_m |c_m|^2
    double gap{0};
};

ParsevalReport parseval_check(ScatterParams const& params,
                              ChannelBounds const& bounds,
                              double p,
                              SumSpec const& spec = {},
                              double phi_min = 1e-10);

// Relative Parseval mismatch for f_w
double parseval_gap(ScatterParams const& params,
                    ChannelBounds const& bounds,
                    double p,
                    SumSpec const& spec = {});

// (1/p) sum_m |c_m|^2 of the correction series, tail summed analytically
double coefficient_norm(ScatterParams const& params,
                        ChannelBounds const& bounds,
                        double p);

// Per-angle evaluation, parallel over angles; rows follow the grid order
AngularScan angular_scan(ScatterParams const& params,
                         WireModel const& wire,
                         double p,
                         std::vector<double> const& grid,
                         SumSpec const& spec = {},
                         unsigned threads = 0);

std::vector<double> linear_grid(double lo, double hi, int n);
std::vector<double> log_grid(double lo, double hi, int n);
}  // namespace abscat
