#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include "abscat/errors.hpp"
#include "cli.hpp"

namespace abscat::cli
{
namespace
{
std::string trim(std::string const& s)
{
    auto const first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
    {
        return {};
    }
    auto const last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

void add_pair(KeyValues& out, std::string const& item, std::string const& where)
{
    auto const eq = item.find('=');
    if (eq == std::string::npos)
    {
        throw ConfigError("expected key=value " + where + ": '" + item + "'");
    }
    std::string const key = trim(item.substr(0, eq));
    std::string const value = trim(item.substr(eq + 1));
    auto const& keys = config_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
    {
        throw ConfigError("unknown config key '" + key + "' " + where);
    }
    out[key] = value;
}

double to_double(KeyValues const& v, std::string const& key)
{
    std::string const& s = v.at(key);
    char* end = nullptr;
    errno = 0;
    double const x = std::strtod(s.c_str(), &end);
    if (s.empty() || *end != '\0' || errno == ERANGE || !std::isfinite(x))
    {
        throw ConfigError(key + ": not a finite number: '" + s + "'");
    }
    return x;
}

long to_long(KeyValues const& v, std::string const& key)
{
    std::string const& s = v.at(key);
    char* end = nullptr;
    errno = 0;
    long const x = std::strtol(s.c_str(), &end, 10);
    if (s.empty() || *end != '\0' || errno == ERANGE)
    {
        throw ConfigError(key + ": not an integer: '" + s + "'");
    }
    return x;
}

bool to_bool(KeyValues const& v, std::string const& key)
{
    std::string const& s = v.at(key);
    if (s == "true" || s == "1" || s == "yes" || s == "on")
    {
        return true;
    }
    if (s == "false" || s == "0" || s == "no" || s == "off")
    {
        return false;
    }
    throw ConfigError(key + ": not a boolean: '" + s + "'");
}

std::string one_of(KeyValues const& v,
                   std::string const& key,
                   std::vector<std::string> const& choices)
{
    std::string const& s = v.at(key);
    if (std::find(choices.begin(), choices.end(), s) == choices.end())
    {
        std::string msg = key + ": '" + s + "' is not one of";
        for (auto const& c : choices)
        {
            msg += " " + c;
        }
        throw ConfigError(msg);
    }
    return s;
}
}  // namespace

std::vector<std::string> const& config_keys()
{
    static std::vector<std::string> const keys = {
        "mode",    "beta",      "gamma",      "gamma-tilde", "coupling",
        "alpha",   "kappa",     "b-field",    "m0",          "rho0",
        "e-field", "wire",      "a",          "p",           "phi-min",
        "phi-max", "n-points",  "grid",       "tol",         "accel",
        "m-min",   "m-max",     "which",      "output",      "output-dir",
        "plot",    "threads",
    };
    return keys;
}

KeyValues parse_config_text(std::string const& text)
{
    KeyValues out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line))
    {
        ++number;
        std::string const where = "(line " + std::to_string(number) + ")";
        if (line.rfind("phi,", 0) == 0)
        {
            // scan table header: "phi,y,... # abscat X; key=value; ..."
            auto const hash = line.find('#');
            if (hash == std::string::npos)
            {
                throw ConfigError("scan header carries no configuration");
            }
            std::istringstream items(line.substr(hash + 1));
            std::string item;
            bool first = true;
            while (std::getline(items, item, ';'))
            {
                item = trim(item);
                if (first)
                {
                    first = false;
                    if (item.find('=') == std::string::npos)
                    {
                        continue;  // version tag
                    }
                }
                if (!item.empty())
                {
                    add_pair(out, item, where);
                }
            }
            break;
        }
        auto const hash = line.find('#');
        if (hash != std::string::npos)
        {
            line.erase(hash);
        }
        line = trim(line);
        if (!line.empty())
        {
            add_pair(out, line, where);
        }
    }
    return out;
}

KeyValues read_config_file(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
    {
        throw IoError("cannot read config file '" + path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    try
    {
        return parse_config_text(text.str());
    }
    catch (ConfigError const& e)
    {
        throw ConfigError(path + ": " + e.what());
    }
}

RunConfig build_config(KeyValues const& v)
{
    RunConfig c;
    auto has = [&](char const* key) { return v.count(key) > 0; };
    auto opt = [&](char const* key, std::optional<double>& slot) {
        if (has(key))
        {
            slot = to_double(v, key);
        }
    };

    if (has("mode"))
    {
        c.mode = one_of(
            v, "mode", {"params", "channels", "smatrix", "scan", "figure"});
    }
    opt("beta", c.beta);
    opt("gamma", c.gamma);
    opt("gamma-tilde", c.gamma_tilde);
    if (has("coupling"))
    {
        c.coupling = one_of(v, "coupling", {"exact", "decoupled"});
    }
    opt("alpha", c.alpha);
    opt("kappa", c.kappa);
    opt("b-field", c.b_field);
    opt("m0", c.m0);
    opt("rho0", c.rho0);
    opt("e-field", c.e_field);
    if (has("wire"))
    {
        c.wire = one_of(
            v, "wire", {"thin-absorbing", "finite-absorbing", "reflecting"});
    }
    opt("a", c.a);
    if (has("p"))
    {
        c.p = to_double(v, "p");
    }
    if (has("phi-min"))
    {
        c.phi_min = to_double(v, "phi-min");
    }
    if (has("phi-max"))
    {
        c.phi_max = to_double(v, "phi-max");
    }
    if (has("n-points"))
    {
        long const n = to_long(v, "n-points");
        if (n > 10'000'000)
        {
            throw ConfigError("n-points: too large");
        }
        c.n_points = static_cast<int>(n);
    }
    if (has("grid"))
    {
        c.grid = one_of(v, "grid", {"linear", "log"});
    }
    if (has("tol"))
    {
        c.tol = to_double(v, "tol");
    }
    if (has("accel"))
    {
        c.accel = one_of(v,
                         "accel",
                         {"lerch-tail", "log-subtraction", "digamma-formula",
                          "none"});
    }
    if (has("m-min"))
    {
        c.m_min = static_cast<int>(to_long(v, "m-min"));
    }
    if (has("m-max"))
    {
        c.m_max = static_cast<int>(to_long(v, "m-max"));
    }
    if (has("which"))
    {
        c.which = one_of(v, "which", {"a", "b"});
    }
    if (has("output"))
    {
        c.output = v.at("output");
    }
    if (has("output-dir"))
    {
        c.output_dir = v.at("output-dir");
    }
    if (has("plot"))
    {
        c.plot = to_bool(v, "plot");
    }
    if (has("threads"))
    {
        long const t = to_long(v, "threads");
        if (t < 0 || t > 1024)
        {
            throw ConfigError("threads: expected 0..1024");
        }
        c.threads = static_cast<unsigned>(t);
    }

    // cross-field checks
    if (!(c.p > 0))
    {
        throw ConfigError("p must be positive");
    }
    if (!(c.tol > 0))
    {
        throw ConfigError("tol must be positive");
    }
    if (c.n_points < 2)
    {
        throw ConfigError("n-points must be at least 2");
    }
    if (!(0 < c.phi_min && c.phi_min < c.phi_max
          && c.phi_max <= std::numbers::pi))
    {
        throw ConfigError("need 0 < phi-min < phi-max <= pi");
    }
    if (c.wire != "thin-absorbing" && !c.a)
    {
        throw ConfigError("wire '" + c.wire + "' needs a = p rho0");
    }
    if (c.a && !(*c.a > 0))
    {
        throw ConfigError("a must be positive");
    }
    bool const physical = c.alpha || c.kappa || c.b_field || c.m0 || c.e_field;
    if (physical && (c.beta || c.gamma || c.gamma_tilde))
    {
        throw ConfigError(
            "give either dimensionless (beta, gamma) or physical inputs");
    }
    if (physical && c.coupling != "exact")
    {
        throw ConfigError("physical inputs imply coupling=exact");
    }
    if (c.coupling == "decoupled" && c.gamma)
    {
        throw ConfigError("decoupled coupling takes gamma-tilde, not gamma");
    }
    if (c.coupling == "exact" && c.gamma_tilde)
    {
        throw ConfigError("gamma-tilde needs coupling=decoupled");
    }
    if (c.m_min && c.m_max && *c.m_min > *c.m_max)
    {
        throw ConfigError("m-min exceeds m-max");
    }
    if (c.mode != "figure")
    {
        if (physical)
        {
            if (!c.alpha || !c.m0 || !c.b_field)
            {
                throw ConfigError("physical inputs need alpha, b-field, m0");
            }
        }
        else if (!c.beta || (c.coupling == "exact" ? !c.gamma
                                                   : !c.gamma_tilde))
        {
            throw ConfigError(c.coupling == "exact"
                                  ? "need beta and gamma"
                                  : "need beta and gamma-tilde");
        }
    }
    return c;
}

bool physical_mode(RunConfig const& cfg)
{
    return static_cast<bool>(cfg.alpha);
}

ScatterParams scatter_params(RunConfig const& cfg)
{
    try
    {
        if (physical_mode(cfg))
        {
            PhysicalInputs phys;
            phys.alpha = *cfg.alpha;
            phys.kappa = cfg.kappa;
            phys.b_field = *cfg.b_field;
            phys.m0 = *cfg.m0;
            phys.rho0 = cfg.rho0;
            phys.field_at_surface = cfg.e_field;
            return derive_params(phys);
        }
        if (cfg.coupling == "decoupled")
        {
            return ScatterParams::decoupled(*cfg.beta, *cfg.gamma_tilde);
        }
        return ScatterParams::exact(*cfg.beta, *cfg.gamma);
    }
    catch (DomainError const& e)
    {
        throw ConfigError(e.what());
    }
}

WireModel wire_model(RunConfig const& cfg)
{
    if (cfg.wire == "finite-absorbing")
    {
        return FiniteAbsorbing{*cfg.a};
    }
    if (cfg.wire == "reflecting")
    {
        return Reflecting{*cfg.a};
    }
    return ThinAbsorbing{};
}

SumSpec sum_spec(RunConfig const& cfg)
{
    SumSpec spec;
    spec.tol = cfg.tol;
    if (cfg.accel == "log-subtraction")
    {
        spec.accel = Accel::log_subtraction;
    }
    else if (cfg.accel == "digamma-formula")
    {
        spec.accel = Accel::digamma_formula;
    }
    else if (cfg.accel == "none")
    {
        spec.accel = Accel::none;
    }
    return spec;
}

std::vector<double> angle_grid(RunConfig const& cfg)
{
    return cfg.grid == "log" ? log_grid(cfg.phi_min, cfg.phi_max, cfg.n_points)
                             : linear_grid(cfg.phi_min, cfg.phi_max,
                                           cfg.n_points);
}

std::string format_number(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string echo_config(RunConfig const& c)
{
    std::vector<std::pair<std::string, std::string>> items;
    auto num = [&](char const* key, double x) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        items.emplace_back(key, buf);
    };
    auto opt = [&](char const* key, std::optional<double> const& x) {
        if (x)
        {
            num(key, *x);
        }
    };
    items.emplace_back("mode", c.mode);
    opt("beta", c.beta);
    opt("gamma", c.gamma);
    opt("gamma-tilde", c.gamma_tilde);
    items.emplace_back("coupling", c.coupling);
    opt("alpha", c.alpha);
    opt("kappa", c.kappa);
    opt("b-field", c.b_field);
    opt("m0", c.m0);
    opt("rho0", c.rho0);
    opt("e-field", c.e_field);
    items.emplace_back("wire", c.wire);
    opt("a", c.a);
    num("p", c.p);
    num("phi-min", c.phi_min);
    num("phi-max", c.phi_max);
    items.emplace_back("n-points", std::to_string(c.n_points));
    items.emplace_back("grid", c.grid);
    num("tol", c.tol);
    items.emplace_back("accel", c.accel);
    if (c.m_min)
    {
        items.emplace_back("m-min", std::to_string(*c.m_min));
    }
    if (c.m_max)
    {
        items.emplace_back("m-max", std::to_string(*c.m_max));
    }
    if (c.mode == "figure")
    {
        items.emplace_back("which", c.which);
    }

    std::string out;
    for (auto const& [k, v] : items)
    {
        if (!out.empty())
        {
            out += "; ";
        }
        out += k + "=" + v;
    }
    return out;
}
}  // namespace abscat::cli
