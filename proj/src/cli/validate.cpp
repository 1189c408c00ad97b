#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <string>
#include <vector>

#include "isotonic/cli/commands.hpp"
#include "isotonic/cli/format.hpp"
#include "isotonic/error.hpp"
#include "isotonic/nonrel.hpp"
#include "isotonic/nu_core.hpp"
#include "isotonic/oracle.hpp"
#include "isotonic/rel.hpp"
#include "isotonic/specfun.hpp"
#include "isotonic/tables.hpp"

namespace isotonic::cli {

namespace {

using Checks = std::vector<Check>;

void add(Checks& out, std::string name, double value, double bound) {
    out.push_back({std::move(name), value, bound, std::isfinite(value) && value <= bound});
}

std::string tag(const char* key, double v) { return std::string(key) + "=" + significant(v, 6); }

double log_binomial(double top, int k) {
    return specfun::log_gamma(top + 1.0) - specfun::log_gamma(k + 1.0) - specfun::log_gamma(top - k + 1.0);
}

Checks identities() {
    Checks out;
    double kummer = 0.0;
    double recurrence = 0.0;
    for (double alpha : {0.5, 1.5, 2.5}) {
        for (int n = 0; n <= 20; ++n) {
            const double binom = std::exp(log_binomial(n + alpha, n));
            for (int i = 0; i < 100; ++i) {
                const double z = 30.0 * i / 99.0;
                const double L = specfun::laguerre(n, alpha, z);
                const double K = binom * specfun::kummer_1f1(-n, alpha + 1.0, z);
                kummer = std::max(kummer, std::abs(L - K) / std::max(1.0, std::abs(L)));
                if (n >= 1) {
                    const double r = (n + 1) * specfun::laguerre(n + 1, alpha, z) - (2 * n + alpha + 1 - z) * L +
                                     (n + alpha) * specfun::laguerre(n - 1, alpha, z);
                    const double scale = std::max({1.0, std::abs((n + 1) * specfun::laguerre(n + 1, alpha, z)),
                                                   std::abs((2 * n + alpha + 1 - z) * L)});
                    recurrence = std::max(recurrence, std::abs(r) / scale);
                }
            }
        }
    }
    add(out, "identities.kummer_laguerre", kummer, 1e-12);
    add(out, "identities.laguerre_recurrence", recurrence, 1e-12);

    double parity = 0.0;
    for (int n = 0; n <= 20; ++n) {
        for (double y : {0.1, 0.7, 1.3, 2.9, 4.4}) {
            const double h = specfun::hermite(n, y);
            const double sign = n % 2 ? -1.0 : 1.0;
            parity = std::max(parity, std::abs(specfun::hermite(n, -y) - sign * h) / std::max(1.0, std::abs(h)));
        }
    }
    add(out, "identities.hermite_parity", parity, 1e-13);

    double gamma_rec = 0.0;
    for (double x = 0.25; x < 40.0; x *= 1.37) {
        const double lhs = specfun::log_gamma(x + 1.0);
        gamma_rec = std::max(gamma_rec, std::abs(lhs - specfun::log_gamma(x) - std::log(x)) / std::max(1.0, std::abs(lhs)));
    }
    add(out, "identities.log_gamma_recurrence", gamma_rec, 1e-13);

    double nu = 0.0;
    for (double g : {0.5, 2.0, 6.0}) {
        const nonrel::OscillatorParams p{1.0, 1.0, g, 1.0};
        for (int n = 0; n <= 10; ++n) {
            const double E = nonrel::energy(n, p).value;
            const auto red = nu::nu_reduce(nonrel::schrodinger_form(p, 2.0 * E));
            nu = std::max(nu, std::abs(nu::nu_eigencondition(red, n)) / E);
        }
    }
    add(out, "identities.nu_schrodinger_condition", nu, 1e-12);
    return out;
}

double overlap(const std::function<double(double)>& a, const std::function<double(double)>& b) {
    // both factors vanish as x -> 0 and are only defined for x > 0
    return oracle::quadrature_to_infinity([&](double x) { return x > 0.0 ? a(x) * b(x) : 0.0; }, 0.0, 1e-12);
}

Checks orthonormality() {
    Checks out;
    for (double g : {0.5, 2.0, 6.0}) {
        const nonrel::OscillatorParams p{1.0, 1.0, g, 1.0};
        double worst = 0.0;
        for (int m = 0; m <= 6; ++m) {
            for (int n = m; n <= 6; ++n) {
                const double s = overlap([&](double x) { return nonrel::wavefunction(m, p, x); },
                                         [&](double x) { return nonrel::wavefunction(n, p, x); });
                worst = std::max(worst, std::abs(s - (m == n ? 1.0 : 0.0)));
            }
        }
        add(out, "orthonormality.isotonic." + tag("g", g), worst, 1e-9);
    }

    for (const auto& col : tables::spin_table()) {
        const auto p = rel::DiracParams::spin(1.0, 1.0, col.g, col.C);
        double worst = 0.0;
        for (int n = 0; n <= 4; ++n) {
            const double E = rel::solve_spin_energy(n, p).value;
            const auto F = [&](double x) { return rel::spin_upper_spinor(n, p, E, x); };
            worst = std::max(worst, std::abs(overlap(F, F) - 1.0));
        }
        add(out, "orthonormality.spin_upper." + tag("cs", col.C) + "." + tag("g", col.g), worst, 1e-9);
    }
    for (const auto& col : tables::pseudospin_table()) {
        const auto p = rel::DiracParams::pseudospin(1.0, 1.0, col.g, col.C);
        double worst = 0.0;
        for (int n = 0; n <= 4; ++n) {
            const double E = rel::solve_pseudospin_energy(n, p).value;
            const auto G = [&](double x) { return rel::pseudospin_lower_spinor(n, p, E, x); };
            worst = std::max(worst, std::abs(overlap(G, G) - 1.0));
        }
        add(out, "orthonormality.pseudospin_lower." + tag("cps", col.C) + "." + tag("g", col.g), worst, 1e-9);
    }
    return out;
}

const oracle::Grid ode_grid{0.3, 3.0, 1001};

Checks ode() {
    Checks out;
    for (double g : {0.5, 2.0, 6.0}) {
        const nonrel::OscillatorParams p{1.0, 1.0, g, 1.0};
        double worst = 0.0;
        for (int n = 0; n <= 6; ++n) {
            const double E = nonrel::energy(n, p).value;
            const auto f = oracle::sample([&](double x) { return nonrel::wavefunction(n, p, x); }, ode_grid);
            const auto coeff = [&](double x) { return 2.0 * (0.5 * x * x + 0.5 * g / (x * x) - E); };
            worst = std::max(worst, oracle::ode_residual(f, coeff, ode_grid));
        }
        add(out, "ode.schrodinger." + tag("g", g), worst, 1e-6);
    }

    for (const auto& col : tables::spin_table()) {
        const auto p = rel::DiracParams::spin(1.0, 1.0, col.g, col.C);
        double worst = 0.0;
        for (int n = 0; n <= 4; ++n) {
            const double E = rel::solve_spin_energy(n, p).value;
            const auto d = rel::spin_derived(p, E);
            const auto f = oracle::sample([&](double x) { return rel::spin_upper_spinor(n, p, E, x); }, ode_grid);
            const auto coeff = [&](double x) { return d.A_s_sq + d.gamma * (0.5 * x * x + 0.5 * col.g / (x * x)); };
            worst = std::max(worst, oracle::ode_residual(f, coeff, ode_grid));
        }
        add(out, "ode.spin_upper." + tag("cs", col.C) + "." + tag("g", col.g), worst, 1e-6);
    }

    for (const auto& col : tables::pseudospin_table()) {
        const auto p = rel::DiracParams::pseudospin(1.0, 1.0, col.g, col.C);
        double worst = 0.0;
        for (int n = 0; n <= 4; ++n) {
            const double E = rel::solve_pseudospin_energy(n, p).value;
            const auto d = rel::pseudospin_derived(p, E);
            const auto f =
                oracle::sample([&](double x) { return rel::pseudospin_lower_spinor(n, p, E, x); }, ode_grid);
            const auto coeff = [&](double x) {
                return d.A_ps_sq - d.gamma_t * (0.5 * x * x + 0.5 * col.g / (x * x));
            };
            worst = std::max(worst, oracle::ode_residual(f, coeff, ode_grid));
        }
        add(out, "ode.pseudospin_lower." + tag("cps", col.C) + "." + tag("g", col.g), worst, 1e-6);
    }
    return out;
}

// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double k = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

Checks oracle_suite() {
    Checks out;
    for (double g : {0.5, 2.0, 6.0}) {
        const nonrel::OscillatorParams p{1.0, 1.0, g, 1.0};
        const auto V = [g](double x) { return 0.5 * x * x + 0.5 * g / (x * x); };
        const auto report = oracle::fd_eigenvalues(V, {}, 6);
        double ratio = 0.0;
        double error = 0.0;
        for (int n = 0; n < 6; ++n) {
            const double exact = nonrel::energy(n, p).value;
            ratio = std::max(ratio, std::abs(report.eigenvalues[n] - exact) / report.richardson_error[n]);
            error = std::max(error, report.richardson_error[n]);
        }
        add(out, "oracle.fd_within_richardson." + tag("g", g), ratio, 1.0);
        add(out, "oracle.fd_richardson_error." + tag("g", g), error, 1e-5);

        std::vector<double> h;
        std::vector<double> err;
        for (int points : {2000, 4000, 8000, 16000}) {
            const oracle::Grid grid{1e-4, 20.0, points};
            h.push_back(grid.spacing());
            err.push_back(std::abs(oracle::fd_solve(V, grid, 0, 1, 0.5).front() - nonrel::energy(0, p).value));
        }
        add(out, "oracle.fd_order_offset." + tag("g", g), std::abs(loglog_slope(h, err) - 2.0), 0.2);
    }

    struct Cell {
        double C, g;
        int n;
        double deviation = NAN, bound = NAN;
    };
    std::vector<Cell> cells;
    for (const auto& col : tables::spin_table()) {
        for (int n = 0; n <= 3; ++n) cells.push_back({col.C, col.g, n});
    }
    std::vector<std::future<void>> jobs;
    for (auto& c : cells) {
        jobs.push_back(std::async(std::launch::async, [&c] {
            const auto p = rel::DiracParams::spin(1.0, 1.0, c.g, c.C);
            const auto report = oracle::dirac_selfconsistent(c.n, p);
            c.deviation = std::abs(report.eigenvalues.front() - rel::solve_spin_energy(c.n, p).value);
            c.bound = std::max(1e-6, report.richardson_error.front());
        }));
    }
    for (auto& j : jobs) j.get();
    for (const auto& c : cells) {
        add(out, "oracle.selfconsistent." + tag("cs", c.C) + "." + tag("g", c.g) + ".n=" + std::to_string(c.n),
            c.deviation, c.bound);
    }

    std::size_t bad = 0;
    const auto count_roots = [&](const oracle::RealFunction& f, double lo) {
        if (oracle::scan_roots(f, lo, 50.0, 20000).size() != 1) ++bad;
    };
    for (const auto& col : tables::spin_table()) {
        const auto p = rel::DiracParams::spin(1.0, 1.0, col.g, col.C);
        for (int n = 0; n < tables::rows; ++n) {
            count_roots([&](double E) { return rel::spin_energy_residual(E, n, p); },
                        std::max(1.0, col.C - 1.0) + 1e-9);
        }
    }
    for (const auto& col : tables::pseudospin_table()) {
        const auto p = rel::DiracParams::pseudospin(1.0, 1.0, col.g, col.C);
        for (int n = 0; n < tables::rows; ++n) {
            count_roots([&](double E) { return rel::pseudospin_energy_residual(E, n, p); }, 1.0 + col.C);
        }
    }
    add(out, "oracle.scan_roots_cells_without_unique_root", static_cast<double>(bad), 0.0);
    return out;
}

Checks duality() {
    Checks out;
    for (double g : {0.5, 2.0, 6.0}) {
        double worst = 0.0;
        for (int n = 0; n < tables::rows; ++n) {
            const double s = rel::solve_spin_energy(n, rel::DiracParams::spin(1, 1, g, 2.0)).value;
            const double ps = rel::solve_pseudospin_energy(n, rel::DiracParams::pseudospin(1, 1, g, -2.0)).value;
            worst = std::max(worst, std::abs(s - ps - 2.0));
        }
        add(out, "duality.spin_minus_pseudospin." + tag("g", g), worst, 1e-9);
    }

    double kg = 0.0;
    for (const auto& col : tables::spin_table()) {
        if (col.C != 0.0) continue;
        const auto p = rel::DiracParams::spin(1, 1, col.g, 0.0);
        for (int n = 0; n < tables::rows; ++n) {
            kg = std::max(kg, std::abs(rel::klein_gordon_energy(n, p).value - rel::solve_spin_energy(n, p).value));
        }
    }
    add(out, "duality.klein_gordon_vs_spin", kg, 1e-10);

    double map = 0.0;
    for (const auto& col : tables::pseudospin_table()) {
        const auto p = rel::DiracParams::pseudospin(1, 1, col.g, col.C);
        for (int n = 0; n < tables::rows; ++n) map = std::max(map, rel::pseudospin_map_check(n, p));
    }
    add(out, "duality.pseudospin_parameter_map", map, 1e-10);
    return out;
}

Checks limit() {
    Checks out;
    const std::vector<double> c_values{10.0, 100.0, 1000.0};
    for (int n = 0; n <= 2; ++n) {
        const auto dev = rel::nonrel_limit_check(n, rel::DiracParams::spin(1, 1, 2.0, 0.0), c_values);
        const bool decreasing = dev[0] > dev[1] && dev[1] > dev[2];
        add(out, "limit.nonrelativistic_slope_offset.n=" + std::to_string(n),
            decreasing ? std::abs(loglog_slope(c_values, dev) + 2.0) : INFINITY, 0.2);
    }
    return out;
}

Checks tables_suite() {
    Checks out;
    double worst = 0.0;
    for (const auto& col : tables::spin_table()) {
        const auto p = rel::DiracParams::spin(1, 1, col.g, col.C);
        for (int n = 0; n < tables::rows; ++n) {
            worst = std::max(worst, std::abs(rel::solve_spin_energy(n, p).value - col.energies[n]));
        }
    }
    add(out, "tables.table1_max_deviation", worst, 5e-7);
    worst = 0.0;
    for (const auto& col : tables::pseudospin_table()) {
        const auto p = rel::DiracParams::pseudospin(1, 1, col.g, col.C);
        for (int n = 0; n < tables::rows; ++n) {
            worst = std::max(worst, std::abs(rel::solve_pseudospin_energy(n, p).value - col.energies[n]));
        }
    }
    add(out, "tables.table2_max_deviation", worst, 5e-7);
    return out;
}

}  // namespace

std::vector<Check> validate_suite(const std::string& suite) {
    using Suite = Checks (*)();
    const std::pair<const char*, Suite> suites[] = {
        {"identities", identities}, {"orthonormality", orthonormality}, {"ode", ode},
        {"oracle", oracle_suite},   {"duality", duality},               {"limit", limit},
        {"tables", tables_suite},
    };
    Checks out;
    bool found = false;
    for (const auto& [name, fn] : suites) {
        if (suite == "all" || suite == name) {
            found = true;
            auto part = fn();
            out.insert(out.end(), part.begin(), part.end());
        }
    }
    if (!found) throw DomainError("unknown validation suite '" + suite + "'");
    return out;
}

}  // namespace isotonic::cli
