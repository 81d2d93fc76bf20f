#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "abscat/errors.hpp"
#include "cli.hpp"

using namespace abscat;
using namespace abscat::cli;

namespace
{
std::map<std::string, std::string> const help = {
    {"beta", "magnetic field parameter"},
    {"gamma", "wire parameter (exact coupling)"},
    {"gamma-tilde", "independent coupling (decoupled mode)"},
    {"coupling", "exact | decoupled"},
    {"alpha", "polarizability [C m^2/V]"},
    {"kappa", "wire voltage parameter [V]"},
    {"b-field", "magnetic flux density [T]"},
    {"m0", "atom rest mass [kg]"},
    {"rho0", "wire radius [m]"},
    {"e-field", "field at the wire surface [V/m]"},
    {"wire", "thin-absorbing | finite-absorbing | reflecting"},
    {"a", "dimensionless wire radius p rho0"},
    {"p", "wavenumber (default 1)"},
    {"phi-min", "smallest scan angle [rad]"},
    {"phi-max", "largest scan angle [rad], at most pi"},
    {"n-points", "number of grid angles"},
    {"grid", "linear | log"},
    {"tol", "absolute tolerance on the correction series"},
    {"accel", "lerch-tail | log-subtraction | digamma-formula | none"},
    {"m-min", "first channel listed"},
    {"m-max", "last channel listed"},
    {"which", "figure panel a | b"},
    {"output", "output table path (default stdout)"},
    {"output-dir", "directory for figure outputs"},
    {"threads", "worker threads, 0 = all cores"},
};

struct Flags
{
    std::string config;
    KeyValues values;
    bool plot{false};
};

std::string svg_path(std::string const& table)
{
    std::filesystem::path p(table);
    p.replace_extension(".svg");
    return p.string();
}

std::string version_tag()
{
    return std::string("abscat ") + ABSCAT_VERSION;
}

int run(std::string const& mode, Flags& flags, CLI::App const& sub)
{
    KeyValues merged;
    if (!flags.config.empty())
    {
        merged = read_config_file(flags.config);
    }
    for (auto const& [key, value] : flags.values)
    {
        if (sub.count("--" + key) > 0)
        {
            merged[key] = value;
        }
    }
    if (sub.count("--plot") > 0)
    {
        merged["plot"] = flags.plot ? "true" : "false";
    }
    merged["mode"] = mode;
    if (mode == "figure" && !merged.count("n-points"))
    {
        merged["n-points"] = "600";
    }
    RunConfig const cfg = build_config(merged);

    if (mode == "params")
    {
        print_params(std::cout, cfg);
        return exit_ok;
    }
    if (mode == "channels")
    {
        print_channels(std::cout, cfg);
        return exit_ok;
    }
    if (mode == "smatrix")
    {
        print_smatrix(std::cout, cfg);
        return exit_ok;
    }
    if (mode == "figure")
    {
        auto const fig = figure_command(
            cfg.which[0], cfg.n_points, cfg.tol, cfg.threads);
        write_figure(fig,
                     cfg.output_dir,
                     cfg.plot,
                     version_tag() + "; figure=" + cfg.which);
        std::cout << "phi_star="
                  << (fig.phi_star ? format_number(*fig.phi_star) : "none")
                  << " alternating_extrema_beta0="
                  << fig.alternating_extrema_beta0
                  << " median_extremum_shift="
                  << format_number(fig.max_extremum_shift) << "\n";
        return exit_ok;
    }

    // scan
    if (cfg.plot && cfg.output.empty())
    {
        throw ConfigError("--plot needs --output");
    }
    std::ofstream file;
    if (!cfg.output.empty())
    {
        file.open(cfg.output);
        if (!file)
        {
            throw IoError("cannot write '" + cfg.output + "'");
        }
    }
    std::ostream& out = cfg.output.empty() ? std::cout : file;
    if (physical_mode(cfg))
    {
        std::ostream& note = cfg.output.empty() ? std::cerr : std::cout;
        print_params(note, cfg);
    }
    auto const scan = run_scan(cfg);
    write_scan_table(out, scan, version_tag() + "; " + echo_config(cfg));
    out.flush();
    if (!out)
    {
        throw IoError("write failed for '" + cfg.output + "'");
    }
    if (cfg.plot)
    {
        PlotSeries s;
        s.label = "y";
        s.width = 1.5;
        for (auto const& r : scan.rows)
        {
            s.x.push_back(r.phi);
            s.y.push_back(r.y);
        }
        std::ofstream svg(svg_path(cfg.output));
        svg << svg_plot({s}, "scaled cross section", "phi (rad)",
                        "y = 2 pi p |f|^2", true);
        if (!svg)
        {
            throw IoError("cannot write plot next to '" + cfg.output + "'");
        }
    }
    return exit_ok;
}
}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Scattering of polarizable atoms off a charged wire in a "
                 "magnetic field"};
    app.set_version_flag("--version", version_tag());
    app.require_subcommand(1);

    std::map<std::string, Flags> flags;
    std::map<std::string, CLI::App*> subs;
    std::vector<std::pair<std::string, std::string>> const modes = {
        {"params", "print the dimensionless parameters"},
        {"channels", "list channel orders and the absorbed interval"},
        {"smatrix", "phase functions S_m for a channel range"},
        {"scan", "angular scan of the scaled cross section"},
        {"figure", "reproduce the two-panel cross section figure"},
    };
    for (auto const& [mode, text] : modes)
    {
        auto* sub = app.add_subcommand(mode, text);
        Flags& f = flags[mode];
        sub->add_option("--config", f.config, "key=value file or scan table");
        for (auto const& key : config_keys())
        {
            if (key == "mode" || key == "plot")
            {
                continue;
            }
            sub->add_option("--" + key, f.values[key], help.at(key));
        }
        sub->add_flag("--plot,!--no-plot", f.plot, "also write an SVG plot");
        subs[mode] = sub;
    }

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const& e)
    {
        int const rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_config;
    }

    std::string mode;
    for (auto const& [name, sub] : subs)
    {
        if (sub->parsed())
        {
            mode = name;
        }
    }
    try
    {
        return run(mode, flags[mode], *subs[mode]);
    }
    catch (ConfigError const& e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config;
    }
    catch (IoError const& e)
    {
        std::cerr << "i/o error: " << e.what() << "\n";
        return exit_io;
    }
    catch (std::exception const& e)
    {
        std::cerr << "computation error: " << e.what() << "\n";
        return exit_compute;
    }
}
