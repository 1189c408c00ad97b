#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "isotonic/cli/commands.hpp"
#include "isotonic/error.hpp"
#include "isotonic/nonrel.hpp"
#include "isotonic/oracle.hpp"
#include "isotonic/rel.hpp"
#include "isotonic/specfun.hpp"
#include "isotonic/tables.hpp"

namespace py = pybind11;
using namespace isotonic;

namespace {

nonrel::OscillatorParams oscillator(double g, double M, double omega, double hbar) { return {M, omega, g, hbar}; }

rel::DiracParams dirac(bool spin, double g, double C, double M, double omega, double hbar, double c) {
    auto p = spin ? rel::DiracParams::spin(M, omega, g, C) : rel::DiracParams::pseudospin(M, omega, g, C);
    p.hbar = hbar;
    p.c = c;
    return p;
}

py::list table(std::span<const tables::Column> cols) {
    py::list out;
    for (const auto& c : cols) {
        out.append(py::dict(py::arg("C") = c.C, py::arg("g") = c.g,
                            py::arg("energies") = std::vector<double>(c.energies.begin(), c.energies.end())));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bound states of the isotonic oscillator";

    auto base = py::register_exception<Error>(m, "IsotonicError", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<UnphysicalRegime>(m, "UnphysicalRegime", PyExc_ValueError);
    py::register_exception<NoRootInRange>(m, "NoRootInRange", base.ptr());
    py::register_exception<NoConvergence>(m, "NoConvergence", base.ptr());
    py::register_exception<GridTooCoarse>(m, "GridTooCoarse", base.ptr());
    py::register_exception<ToleranceNotMet>(m, "ToleranceNotMet", base.ptr());
    py::register_exception<DivergenceError>(m, "DivergenceError", base.ptr());
    py::register_exception<DegenerateEnergy>(m, "DegenerateEnergy", base.ptr());

    m.def("laguerre", py::vectorize(&specfun::laguerre), py::arg("n"), py::arg("alpha"), py::arg("z"));
    m.def("kummer_1f1", py::vectorize(&specfun::kummer_1f1), py::arg("a"), py::arg("b"), py::arg("z"));
    m.def("hermite", py::vectorize(&specfun::hermite), py::arg("n"), py::arg("y"));
    m.def("log_gamma", py::vectorize(&specfun::log_gamma), py::arg("x"));

    m.def("classify_regime", [](double alpha) { return std::string(nonrel::to_string(nonrel::classify_regime(alpha))); },
          py::arg("alpha"));

    m.def(
        "energy", [](int n, double g, double M, double omega, double hbar) {
            return nonrel::energy(n, oscillator(g, M, omega, hbar)).value;
        },
        py::arg("n"), py::arg("g") = 0.0, py::arg("M") = 1.0, py::arg("omega") = 1.0, py::arg("hbar") = 1.0,
        "Isotonic-oscillator energy hbar omega (2n + 1 + sqrt(1 + 4 M g / hbar^2) / 2).");
    m.def(
        "wavefunction",
        [](int n, py::array_t<double> x, double g, double M, double omega, double hbar) {
            const auto p = oscillator(g, M, omega, hbar);
            return py::vectorize([&](double xi) { return nonrel::wavefunction(n, p, xi); })(x);
        },
        py::arg("n"), py::arg("x"), py::arg("g") = 0.0, py::arg("M") = 1.0, py::arg("omega") = 1.0,
        py::arg("hbar") = 1.0, "Normalized eigenfunction on x > 0.");
    m.def(
        "harmonic_wavefunction",
        [](int n, py::array_t<double> x, double M, double omega, double hbar) {
            const auto p = oscillator(0.0, M, omega, hbar);
            return py::vectorize([&](double xi) { return nonrel::harmonic_wavefunction(n, p, xi); })(x);
        },
        py::arg("n"), py::arg("x"), py::arg("M") = 1.0, py::arg("omega") = 1.0, py::arg("hbar") = 1.0);


    m.def(
        "spin_energy", [](int n, double g, double cs, double M, double omega, double hbar, double c) {
            return rel::solve_spin_energy(n, dirac(true, g, cs, M, omega, hbar, c)).value;
        },
        py::arg("n"), py::arg("g") = 0.0, py::arg("cs") = 0.0, py::arg("M") = 1.0, py::arg("omega") = 1.0,
        py::arg("hbar") = 1.0, py::arg("c") = 1.0);
    m.def(
        "pseudospin_energy", [](int n, double g, double cps, double M, double omega, double hbar, double c) {
            return rel::solve_pseudospin_energy(n, dirac(false, g, cps, M, omega, hbar, c)).value;
        },
        py::arg("n"), py::arg("g") = 0.0, py::arg("cps") = 0.0, py::arg("M") = 1.0, py::arg("omega") = 1.0,
        py::arg("hbar") = 1.0, py::arg("c") = 1.0);
    m.def(
        "klein_gordon_energy", [](int n, double g, double M, double omega, double hbar, double c) {
            return rel::klein_gordon_energy(n, dirac(true, g, 0.0, M, omega, hbar, c)).value;
        },
        py::arg("n"), py::arg("g") = 0.0, py::arg("M") = 1.0, py::arg("omega") = 1.0, py::arg("hbar") = 1.0,
        py::arg("c") = 1.0);

    m.def(
        "spin_spinor",
        [](int n, py::array_t<double> x, double g, double cs) {
            const auto p = dirac(true, g, cs, 1.0, 1.0, 1.0, 1.0);
            const double E = rel::solve_spin_energy(n, p).value;
            auto upper = py::vectorize([&](double xi) { return rel::spin_upper_spinor(n, p, E, xi); })(x);
            auto lower = py::vectorize([&](double xi) { return rel::spin_lower_spinor(n, p, E, xi); })(x);
            return py::make_tuple(E, upper, lower);
        },
        py::arg("n"), py::arg("x"), py::arg("g") = 0.0, py::arg("cs") = 0.0,
        "(E, F, G) of the spin-symmetric state, natural units.");
    m.def(
        "pseudospin_spinor",
        [](int n, py::array_t<double> x, double g, double cps) {
            const auto p = dirac(false, g, cps, 1.0, 1.0, 1.0, 1.0);
            const double E = rel::solve_pseudospin_energy(n, p).value;
            auto lower = py::vectorize([&](double xi) { return rel::pseudospin_lower_spinor(n, p, E, xi); })(x);
            return py::make_tuple(E, lower);
        },
        py::arg("n"), py::arg("x"), py::arg("g") = 0.0, py::arg("cps") = 0.0,
        "(E, G) of the pseudospin-symmetric state, natural units.");

    m.def(
        "fd_eigenvalues",
        [](const std::function<double(double)>& potential, int count, double x_min, double x_max, int n_points,
           double kinetic) {
            const auto r = oracle::fd_eigenvalues(potential, {x_min, x_max, n_points}, count, kinetic);
            return py::make_tuple(r.eigenvalues, r.richardson_error);
        },
        py::arg("potential"), py::arg("count"), py::arg("x_min") = 1e-4, py::arg("x_max") = 20.0,
        py::arg("n_points") = 16000, py::arg("kinetic") = 0.5,
        "(eigenvalues, richardson_error) of -kinetic d^2/dx^2 + V on a Dirichlet grid.");
    m.def(
        "dirac_selfconsistent",
        [](int n, double g, double cs) {
            oracle::OracleReport r;
            {
                py::gil_scoped_release release;
                r = oracle::dirac_selfconsistent(n, rel::DiracParams::spin(1, 1, g, cs));
            }
            return py::make_tuple(r.eigenvalues.front(), r.richardson_error.front());
        },
        py::arg("n"), py::arg("g") = 0.0, py::arg("cs") = 0.0);

    m.def("spin_table", [] { return table(tables::spin_table()); });
    m.def("pseudospin_table", [] { return table(tables::pseudospin_table()); });

    m.def(
        "validate",
        [](const std::string& suite) {
            std::vector<cli::Check> checks;
            {
                py::gil_scoped_release release;
                checks = cli::validate_suite(suite);
            }
            py::list out;
            for (const auto& c : checks) {
                out.append(py::dict(py::arg("check") = c.check, py::arg("value") = c.value,
                                    py::arg("bound") = c.bound, py::arg("pass") = c.pass));
            }
            return out;
        },
        py::arg("suite") = "all");
}
