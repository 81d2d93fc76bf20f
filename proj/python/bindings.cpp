#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "abscat/amplitude.hpp"
#include "abscat/errors.hpp"
#include "abscat/params.hpp"
#include "abscat/smatrix.hpp"
#include "abscat/specfun.hpp"
#include "abscat/xsection.hpp"

namespace py = pybind11;
using namespace abscat;

namespace
{
WireModel make_wire(std::string const& kind, double a)
{
    if (kind == "thin-absorbing")
    {
        return ThinAbsorbing{};
    }
    if (kind == "finite-absorbing")
    {
        return FiniteAbsorbing{a};
    }
    if (kind == "reflecting")
    {
        return Reflecting{a};
    }
    throw py::value_error("wire must be thin-absorbing, finite-absorbing "
                          "or reflecting");
}

Accel make_accel(std::string const& name)
{
    if (name == "lerch-tail")
    {
        return Accel::lerch_tail;
    }
    if (name == "log-subtraction")
    {
        return Accel::log_subtraction;
    }
    if (name == "digamma-formula")
    {
        return Accel::digamma_formula;
    }
    if (name == "none")
    {
        return Accel::none;
    }
    throw py::value_error("unknown accel '" + name + "'");
}

SumSpec make_spec(double tol, std::string const& accel)
{
    SumSpec s;
    s.tol = tol;
    s.accel = make_accel(accel);
    return s;
}

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
}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Partial-wave scattering of polarizable atoms off a charged wire";
    m.attr("__version__") = ABSCAT_VERSION;

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<AccuracyError>(m, "AccuracyError",
                                          PyExc_ArithmeticError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError",
                                             PyExc_ArithmeticError);

    py::class_<ScatterParams>(m, "ScatterParams")
        .def_static("exact", &ScatterParams::exact, py::arg("beta"),
                    py::arg("gamma"))
        .def_static("decoupled", &ScatterParams::decoupled, py::arg("beta"),
                    py::arg("gamma_tilde"))
        .def_readonly("beta", &ScatterParams::beta)
        .def_readonly("gamma", &ScatterParams::gamma)
        .def_readonly("gamma_tilde", &ScatterParams::gamma_tilde)
        .def_readonly("epsilon", &ScatterParams::epsilon)
        .def("coupling_strength", &ScatterParams::coupling_strength)
        .def("__repr__", [](ScatterParams const& p) {
            return "ScatterParams(beta=" + std::to_string(p.beta)
                   + ", gamma=" + std::to_string(p.gamma) + ")";
        });

    py::class_<ChannelBounds>(m, "ChannelBounds")
        .def_readonly("lo", &ChannelBounds::lo)
        .def_readonly("hi", &ChannelBounds::hi)
        .def_property_readonly("m_minus", &ChannelBounds::m_minus)
        .def_property_readonly("m_plus", &ChannelBounds::m_plus)
        .def_property_readonly("absorbed_count",
                               &ChannelBounds::absorbed_count);

    m.def(
        "derive_params",
        [](double alpha, double b_field, double m0,
           std::optional<double> kappa, std::optional<double> rho0,
           std::optional<double> e_field) {
            PhysicalInputs phys;
            phys.alpha = alpha;
            phys.b_field = b_field;
            phys.m0 = m0;
            phys.kappa = kappa;
            phys.rho0 = rho0;
            phys.field_at_surface = e_field;
            return derive_params(phys);
        },
        py::arg("alpha"), py::arg("b_field"), py::arg("m0"),
        py::arg("kappa") = py::none(), py::arg("rho0") = py::none(),
        py::arg("e_field") = py::none());

    m.def("nu_squared", &nu_squared, py::arg("m"), py::arg("params"));
    m.def(
        "channel_bounds",
        [](ScatterParams const& p, std::string const& wire, double a) {
            return channel_bounds(p, make_wire(wire, a));
        },
        py::arg("params"), py::arg("wire") = "thin-absorbing",
        py::arg("a") = 1.0);

    m.def("bessel_j", &bessel_j, py::arg("nu"), py::arg("x"));
    m.def("bessel_y", &bessel_y, py::arg("nu"), py::arg("x"));
    m.def("hankel1", &hankel1, py::arg("nu"), py::arg("x"));
    m.def("imag_order_integral", &imag_order_integral, py::arg("nu_abs"),
          py::arg("a"));
    m.def("digamma", &digamma, py::arg("x"));

    m.def(
        "s_matrix",
        [](int mm, ScatterParams const& p, std::string const& wire, double a) {
            auto const e = s_matrix(mm, p, make_wire(wire, a));
            return py::make_tuple(e.s, e.delta, kind_name(e.kind));
        },
        py::arg("m"), py::arg("params"), py::arg("wire") = "thin-absorbing",
        py::arg("a") = 1.0,
        "Returns (S_m, delta or None, channel kind).");

    m.def("f_ab_exact", &f_ab_exact, py::arg("beta"), py::arg("phi"),
          py::arg("p") = 1.0);
    m.def(
        "f_ab_mod",
        [](ScatterParams const& p, double phi, double k) {
            return f_ab_mod(p, channel_bounds(p), phi, k);
        },
        py::arg("params"), py::arg("phi"), py::arg("p") = 1.0);
    m.def(
        "f_w",
        [](ScatterParams const& p, double phi, double k, double tol,
           std::string const& accel) {
            auto const r
                = f_w(p, channel_bounds(p), phi, k, make_spec(tol, accel));
            return py::make_tuple(r.value, r.terms_used, r.tail_bound);
        },
        py::arg("params"), py::arg("phi"), py::arg("p") = 1.0,
        py::arg("tol") = 1e-8, py::arg("accel") = "lerch-tail",
        "Returns (value, terms_used, tail_bound).");
    m.def(
        "f_total",
        [](ScatterParams const& p, double phi, double k, std::string const& wire,
           double a, double tol) {
            auto const w = make_wire(wire, a);
            auto const r = f_total(p, channel_bounds(p, w), w, phi, k,
                                   make_spec(tol, "lerch-tail"));
            return r.f_total;
        },
        py::arg("params"), py::arg("phi"), py::arg("p") = 1.0,
        py::arg("wire") = "thin-absorbing", py::arg("a") = 1.0,
        py::arg("tol") = 1e-8);
    m.def(
        "scaled_dcs",
        [](ScatterParams const& p, std::vector<double> const& phis, double k,
           double tol, unsigned threads) {
            auto const scan = angular_scan(p, ThinAbsorbing{}, k, phis,
                                           make_spec(tol, "lerch-tail"),
                                           threads);
            std::vector<double> y;
            for (auto const& r : scan.rows)
            {
                y.push_back(r.y);
            }
            return y;
        },
        py::arg("params"), py::arg("phi"), py::arg("p") = 1.0,
        py::arg("tol") = 1e-8, py::arg("threads") = 0,
        "y = 2 pi p |f|^2 on a list of angles (thin absorbing wire).");
    m.def(
        "sigma_absorption",
        [](ScatterParams const& p, double k, std::string const& wire,
           double a) {
            auto const w = make_wire(wire, a);
            return sigma_absorption(p, channel_bounds(p, w), w, k);
        },
        py::arg("params"), py::arg("p") = 1.0,
        py::arg("wire") = "thin-absorbing", py::arg("a") = 1.0);
    m.def(
        "abel_partial_wave",
        [](std::function<Complex(int)> const& s, double phi, double k) {
            return abel_partial_wave(
                s, phi, k, AbelSchedule::powers_of_two(4, 10));
        },
        py::arg("s_values"), py::arg("phi"), py::arg("p") = 1.0,
        "Abel-summed partial waves (short schedule, k = 4..10).");
}
