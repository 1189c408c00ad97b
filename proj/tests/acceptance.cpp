// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "isotonic/cli/commands.hpp"
#include "isotonic/cli/format.hpp"
#include "isotonic/nonrel.hpp"
#include "isotonic/oracle.hpp"
#include "isotonic/rel.hpp"
#include "isotonic/specfun.hpp"
#include "isotonic/tables.hpp"

using namespace isotonic;

namespace {

struct Result {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Result()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
        r = body();
    } catch (const std::exception& e) {
        r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!r.pass) ++failures;
    std::printf("[%s] %2d %s: %s (%.2f s)\n", r.pass ? "PASS" : "FAIL", id, title, r.detail.c_str(), secs);
    std::fflush(stdout);
}

std::string sci(double v) { return cli::scientific(v, 2); }

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double k = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += std::log(x[i]);
        sy += std::log(y[i]);
        sxx += std::log(x[i]) * std::log(x[i]);
        sxy += std::log(x[i]) * std::log(y[i]);
    }
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

Result table1() {
    double worst = 0.0;
    int cells = 0;
    for (const auto& col : tables::spin_table()) {
        for (int n = 0; n < tables::rows; ++n, ++cells) {
            const double E = rel::solve_spin_energy(n, rel::DiracParams::spin(1, 1, col.g, col.C)).value;
            worst = std::max(worst, std::abs(E - col.energies[n]));
        }
    }
    return {cells == 55 && worst <= 5e-7, std::to_string(cells) + " cells, max |dE| = " + sci(worst) + " <= 5e-7"};
}

Result table2() {
    double worst = 0.0;
    int cells = 0;
    for (const auto& col : tables::pseudospin_table()) {
        for (int n = 0; n < tables::rows; ++n, ++cells) {
            const double E = rel::solve_pseudospin_energy(n, rel::DiracParams::pseudospin(1, 1, col.g, col.C)).value;
            worst = std::max(worst, std::abs(E - col.energies[n]));
        }
    }
    return {cells == 88 && worst <= 5e-7, std::to_string(cells) + " cells, max |dE| = " + sci(worst) + " <= 5e-7"};
}

Result closed_form_vs_fd() {
    bool ok = true;
    double worst_ratio = 0.0, worst_err = 0.0, worst_order = 0.0;
    for (double g : {0.5, 2.0, 6.0}) {
        const nonrel::OscillatorParams p{1, 1, g, 1};
        const auto V = [g](double x) { return 0.5 * x * x + 0.5 * g / (x * x); };
        const auto r = oracle::fd_eigenvalues(V, {}, 6);
        for (int n = 0; n <= 5; ++n) {
            const double dev = std::abs(r.eigenvalues[n] - nonrel::energy(n, p).value);
            worst_ratio = std::max(worst_ratio, dev / r.richardson_error[n]);
            worst_err = std::max(worst_err, r.richardson_error[n]);
        }
        std::vector<double> h, err;
        for (int points : {2000, 4000, 8000, 16000}) {
            const oracle::Grid grid{1e-4, 20.0, points};
            h.push_back(grid.spacing());
            err.push_back(std::abs(oracle::fd_solve(V, grid, 0, 1, 0.5).front() - nonrel::energy(0, p).value));
        }
        worst_order = std::max(worst_order, std::abs(loglog_slope(h, err) - 2.0));
    }
    ok = worst_ratio <= 1.0 && worst_err <= 1e-5 && worst_order <= 0.2;
    return {ok, "max |fd - exact| / richardson_error = " + cli::significant(worst_ratio, 3) +
                    " <= 1, max richardson_error = " + sci(worst_err) + " <= 1e-5, max |order - 2| = " +
                    cli::significant(worst_order, 3) + " <= 0.2"};
}

Result selfconsistent() {
    struct Cell {
        double C, g;
        int n;
        double dev = NAN, bound = NAN;
    };
    std::vector<Cell> cells;
    for (const auto& col : tables::spin_table()) {
        for (int n = 0; n <= 3; ++n) cells.push_back({col.C, col.g, n});
    }
    std::vector<std::future<void>> jobs;
    for (auto& c : cells) {
        jobs.push_back(std::async(std::launch::async, [&c] {
            const auto p = rel::DiracParams::spin(1, 1, c.g, c.C);
            const auto r = oracle::dirac_selfconsistent(c.n, p);
            c.dev = std::abs(r.eigenvalues[0] - rel::solve_spin_energy(c.n, p).value);
            c.bound = std::max(1e-6, r.richardson_error[0]);
        }));
    }
    for (auto& j : jobs) j.get();
    bool ok = true;
    double worst = 0.0;
    for (const auto& c : cells) {
        ok = ok && c.dev <= c.bound;
        worst = std::max(worst, c.dev / c.bound);
    }
    return {ok, std::to_string(cells.size()) + " cells, max |dE| / max(1e-6, richardson_error) = " +
                    cli::significant(worst, 3) + " <= 1"};
}

Result spacing() {
    double worst = 0.0;
    for (const nonrel::OscillatorParams& p : {nonrel::OscillatorParams{1, 1, 2, 1}, nonrel::OscillatorParams{1, 1, 0.5, 1},
                                              nonrel::OscillatorParams{1, 1, 6, 1}, nonrel::OscillatorParams{2, 0.7, 3, 1.3}}) {
        for (int n = 0; n < 30; ++n) {
            const double step = nonrel::energy(n + 1, p).value - nonrel::energy(n, p).value;
            const double harmonic = nonrel::harmonic_energy(n + 1, p).value - nonrel::harmonic_energy(n, p).value;
            worst = std::max({worst, std::abs(step - 2.0 * p.hbar * p.omega), std::abs(step - 2.0 * harmonic)});
        }
    }
    return {worst <= 1e-12, "max |dE - 2 hbar omega| = " + sci(worst) + " <= 1e-12 (rounding)"};
}

Result g_zero() {
    double worst = 0.0;
    const nonrel::OscillatorParams p{1, 1, 0, 1};
    for (int n = 0; n <= 30; ++n) {
        worst = std::max({worst, std::abs(nonrel::energy(n, p).value - (2 * n + 1.5)),
                          std::abs(nonrel::energy(n, p).value - nonrel::oscillator3d_energy(n, 0, p).value)});
    }
    return {worst == 0.0, "max |E_n(g=0) - (2n + 3/2)| = " + sci(worst) + " == 0"};
}

Result klein_gordon() {
    double worst = 0.0;
    for (const auto& col : tables::spin_table()) {
        if (col.C != 0.0) continue;
        const auto p = rel::DiracParams::spin(1, 1, col.g, 0.0);
        for (int n = 0; n < tables::rows; ++n) {
            worst = std::max(worst, std::abs(rel::klein_gordon_energy(n, p).value - rel::solve_spin_energy(n, p).value));
        }
    }
    return {worst <= 1e-10, "max |E_KG - E_spin| = " + sci(worst) + " <= 1e-10"};
}

Result duality() {
    double worst = 0.0;
    for (double g : {2.0, 6.0}) {
        for (int n = 0; n < tables::rows; ++n) {
            const double s = rel::solve_spin_energy(n, rel::DiracParams::spin(1, 1, g, 2.0)).value;
            const double p = rel::solve_pseudospin_energy(n, rel::DiracParams::pseudospin(1, 1, g, -2.0)).value;
            worst = std::max(worst, std::abs(s - p - 2.0));
        }
    }
    return {worst <= 1e-9, "max |E_spin - E_pseudospin - 2Mc^2| = " + sci(worst) + " <= 1e-9"};
}

Result nonrel_limit() {
    const std::vector<double> cs{10.0, 100.0, 1000.0};
    bool ok = true;
    std::string detail = "slopes";
    for (int n = 0; n <= 2; ++n) {
        const auto dev = rel::nonrel_limit_check(n, rel::DiracParams::spin(1, 1, 2, 0), cs);
        const double slope = loglog_slope(cs, dev);
        ok = ok && dev[0] > dev[1] && dev[1] > dev[2] && std::abs(slope + 2.0) <= 0.2;
        detail += " " + cli::fixed(slope, 3);
    }
    return {ok, detail + " within -2 +- 0.2"};
}

Result function_space() {
    double ortho = 0.0;
    for (double g : {0.5, 2.0, 6.0}) {
        const nonrel::OscillatorParams p{1, 1, g, 1};
        for (int m = 0; m <= 6; ++m) {
            for (int n = m; n <= 6; ++n) {
                const double s = oracle::quadrature_to_infinity(
                    [&](double x) { return x > 0.0 ? nonrel::wavefunction(m, p, x) * nonrel::wavefunction(n, p, x) : 0.0; },
                    0.0, 1e-12);
                ortho = std::max(ortho, std::abs(s - (m == n ? 1.0 : 0.0)));
            }
        }
    }

    const oracle::Grid grid{0.3, 3.0, 1001};
    double ode = 0.0;
    for (double g : {0.5, 2.0, 6.0}) {
        const nonrel::OscillatorParams np{1, 1, g, 1};
        const auto sp = rel::DiracParams::spin(1, 1, g, 0.0);
        const auto ps = rel::DiracParams::pseudospin(1, 1, g, -2.0);
        const auto U = [g](double x) { return 0.5 * x * x + 0.5 * g / (x * x); };
        for (int n = 0; n <= 4; ++n) {
            const double E = nonrel::energy(n, np).value;
            ode = std::max(ode, oracle::ode_residual(oracle::sample([&](double x) { return nonrel::wavefunction(n, np, x); }, grid),
                                                     [&](double x) { return 2.0 * (U(x) - E); }, grid));
            const double Es = rel::solve_spin_energy(n, sp).value;
            const auto ds = rel::spin_derived(sp, Es);
            ode = std::max(ode, oracle::ode_residual(oracle::sample([&](double x) { return rel::spin_upper_spinor(n, sp, Es, x); }, grid),
                                                     [&](double x) { return ds.A_s_sq + ds.gamma * U(x); }, grid));
            const double Ep = rel::solve_pseudospin_energy(n, ps).value;
            const auto dp = rel::pseudospin_derived(ps, Ep);
            ode = std::max(ode, oracle::ode_residual(oracle::sample([&](double x) { return rel::pseudospin_lower_spinor(n, ps, Ep, x); }, grid),
                                                     [&](double x) { return dp.A_ps_sq - dp.gamma_t * U(x); }, grid));
        }
    }

    double kummer = 0.0;
    for (double a : {0.5, 1.5, 2.5}) {
        for (int n = 0; n <= 20; ++n) {
            const double binom = std::exp(specfun::log_gamma(n + a + 1) - specfun::log_gamma(n + 1) - specfun::log_gamma(a + 1));
            for (int i = 0; i < 100; ++i) {
                const double z = 30.0 * i / 99.0;
                const double L = specfun::laguerre(n, a, z);
                kummer = std::max(kummer, std::abs(L - binom * specfun::kummer_1f1(-n, a + 1, z)) / std::max(1.0, std::abs(L)));
            }
        }
    }
    return {ortho <= 1e-9 && ode <= 1e-6 && kummer <= 1e-12,
            "orthonormality " + sci(ortho) + " <= 1e-9, ODE residual " + sci(ode) + " <= 1e-6, Kummer-Laguerre " +
                sci(kummer) + " <= 1e-12"};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Result determinism() {
    namespace fs = std::filesystem;
    const fs::path root = fs::temp_directory_path() / "isotonic_acceptance";
    fs::remove_all(root);
    std::ostringstream sink, err;
    for (const char* run : {"a", "b"}) {
        cli::RunManifest m{"reproduce-tables", {{"out", (root / run).string()}}, cli::Format::Csv};
        if (cli::run(m, sink, err) != cli::Success) return {false, "reproduce-tables failed: " + err.str()};
    }
    bool same = true;
    for (const char* file : {"table1.csv", "table2.csv"}) {
        const std::string a = slurp(root / "a" / file);
        same = same && !a.empty() && a == slurp(root / "b" / file);
    }
    fs::remove_all(root);
    return {same, same ? "table1.csv and table2.csv byte-identical across two runs" : "outputs differ"};
}

}  // namespace

int main() {
    criterion(1, "Table 1 reproduction", table1);
    criterion(2, "Table 2 reproduction", table2);
    criterion(3, "closed form vs finite differences", closed_form_vs_fd);
    criterion(4, "self-consistent Dirac oracle", selfconsistent);
    criterion(5, "spacing 2 hbar omega", spacing);
    criterion(6, "g -> 0 limit", g_zero);
    criterion(7, "Klein-Gordon consistency", klein_gordon);
    criterion(8, "spin-pseudospin duality", duality);
    criterion(9, "nonrelativistic limit O(1/c^2)", nonrel_limit);
    criterion(10, "function-space properties", function_space);
    criterion(11, "determinism", determinism);
    std::printf("%d of 11 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
