#include <cmath>
#include <cstdio>

#include "abscat/errors.hpp"
#include "abscat/smatrix.hpp"
#include "cli.hpp"

namespace abscat::cli
{
namespace
{
char const* kind_name(ChannelKind k)
{
    switch (k)
    {
        case ChannelKind::elastic:
            return "elastic";
        case ChannelKind::threshold:
            return "threshold";
        case ChannelKind::absorbed:
            return "absorbed";
    }
    return "?";
}

std::pair<int, int> channel_range(RunConfig const& cfg,
                                  ChannelBounds const& b)
{
    int const lo = cfg.m_min.value_or(std::min(b.lo, b.hi + 1) - 5);
    int const hi = cfg.m_max.value_or(std::max(b.hi, b.lo - 1) + 5);
    return {lo, hi};
}
}  // namespace

std::string scan_header()
{
    return "phi,y,re_f,im_f,re_f_abmod,im_f_abmod,re_f_w,im_f_w,tail_bound";
}

void print_params(std::ostream& os, RunConfig const& cfg)
{
    auto const p = scatter_params(cfg);
    os << "beta=" << format_number(p.beta) << "\n";
    if (p.coupling == CouplingMode::exact)
    {
        os << "gamma=" << format_number(p.gamma) << "\n";
        os << "epsilon=" << format_number(p.epsilon) << "\n";
        os << "coupling=exact\n";
    }
    else
    {
        os << "gamma_tilde=" << format_number(p.gamma_tilde) << "\n";
        os << "coupling=decoupled\n";
    }
    os << "coupling_strength=" << format_number(p.coupling_strength()) << "\n";
}

void print_channels(std::ostream& os, RunConfig const& cfg)
{
    auto const p = scatter_params(cfg);
    auto const b = channel_bounds(p, wire_model(cfg));
    os << "# m_minus=" << b.m_minus() << " m_plus=" << b.m_plus()
       << " absorbed_count=" << b.absorbed_count() << "\n";
    os << "m,nu_sq,kind,nu_abs,removed\n";
    auto const [lo, hi] = channel_range(cfg, b);
    for (int m = lo; m <= hi; ++m)
    {
        auto const o = order_nu(m, p);
        os << m << "," << format_number(o.nu_sq) << "," << kind_name(o.kind)
           << "," << format_number(o.magnitude) << ","
           << (b.contains(m) ? 1 : 0) << "\n";
    }
}

void print_smatrix(std::ostream& os, RunConfig const& cfg)
{
    auto const p = scatter_params(cfg);
    auto const wire = wire_model(cfg);
    auto const b = channel_bounds(p, wire);
    os << "m,kind,re_s,im_s,abs_s,delta\n";
    auto const [lo, hi] = channel_range(cfg, b);
    for (int m = lo; m <= hi; ++m)
    {
        PhaseEntry e;
        try
        {
            e = s_matrix(m, p, wire);
        }
        catch (std::exception const& ex)
        {
            throw AccuracyError("channel m = " + std::to_string(m) + ": "
                                + ex.what());
        }
        os << m << "," << kind_name(e.kind) << "," << format_number(e.s.real())
           << "," << format_number(e.s.imag()) << ","
           << format_number(std::abs(e.s)) << ","
           << (e.delta ? format_number(*e.delta) : std::string("nan"))
           << "\n";
    }
}

void write_scan_table(std::ostream& os,
                      AngularScan const& scan,
                      std::string const& comment)
{
    os << scan_header();
    if (!comment.empty())
    {
        os << " # " << comment;
    }
    os << "\n";
    for (auto const& r : scan.rows)
    {
        os << format_number(r.phi) << "," << format_number(r.y) << ","
           << format_number(r.f.real()) << "," << format_number(r.f.imag())
           << "," << format_number(r.f_ab_mod.real()) << ","
           << format_number(r.f_ab_mod.imag()) << ","
           << format_number(r.f_w.real()) << "," << format_number(r.f_w.imag())
           << "," << format_number(r.tail_bound) << "\n";
    }
}

AngularScan run_scan(RunConfig const& cfg)
{
    auto const p = scatter_params(cfg);
    auto const wire = wire_model(cfg);
    if (!is_absorbing(wire))
    {
        throw ConfigError(
            "scan needs an absorbing wire; use smatrix for the reflecting "
            "model");
    }
    return angular_scan(
        p, wire, cfg.p, angle_grid(cfg), sum_spec(cfg), cfg.threads);
}
}  // namespace abscat::cli
