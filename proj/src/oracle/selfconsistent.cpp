#include <cmath>
#include <limits>
#include <string>

#include "isotonic/error.hpp"
#include "isotonic/oracle.hpp"

namespace isotonic::oracle {

namespace {

constexpr int max_iterations = 200;
constexpr double energy_tol = 1e-9;

struct Iteration {
    double energy = 0.0;
    int iterations = 0;
};

// Fixed point E -> gamma(E) -> lambda_n(gamma) -> E, where -F'' + gamma Sigma F = lambda F
// and lambda = gamma (E - Mc^2) with gamma = (Mc^2 + E - C_s) / (hbar c)^2.
Iteration iterate(int n, const rel::DiracParams& p, const Grid& grid, double E) {
    const double rest = p.rest_energy();
    const double hbarc_sq = p.hbarc() * p.hbarc();
    const double A = 2.0 * rest - p.C;
    const double half_k = 0.5 * p.M * p.omega * p.omega;

    double damping = 1.0;
    double previous_step = 0.0;
    for (int it = 1; it <= max_iterations; ++it) {
        const double gamma = (rest + E - p.C) / hbarc_sq;
        if (!(gamma > 0.0)) throw NoConvergence("dirac_selfconsistent: iterate left the gamma > 0 domain");
        const auto sigma = [&](double x) { return gamma * (half_k * x * x + 0.5 * p.g / (x * x)); };
        const double lambda = fd_solve(sigma, grid, n, 1, 1.0).front();

        // (A + u) u = lambda (hbar c)^2 with u = E - Mc^2
        const double u = 0.5 * (-A + std::sqrt(A * A + 4.0 * lambda * hbarc_sq));
        const double step = rest + u - E;
        if (std::abs(step) <= energy_tol) return {rest + u, it};
        if (previous_step * step < 0.0) damping = 0.5;
        previous_step = step;
        E += damping * step;
    }
    throw NoConvergence("dirac_selfconsistent: no convergence after " + std::to_string(max_iterations) +
                        " iterations");
}

}  // namespace

OracleReport dirac_selfconsistent(int n, const rel::DiracParams& p, const Grid& grid) {
    p.validate();
    grid.validate();
    if (p.branch != rel::Symmetry::Spin) throw DomainError("dirac_selfconsistent: spin branch only");
    if (n < 0 || n + 1 > grid.n_points / 10) throw DomainError("dirac_selfconsistent: n out of range for grid");

    const double rest = p.rest_energy();
    const double start = rest + std::max(0.0, p.C - 2.0 * rest) + (2.0 * n + 1.5) * p.hbar * p.omega;

    const Iteration coarse = iterate(n, p, grid, start);
    const Iteration fine = iterate(n, p, grid.refined(), coarse.energy);

    OracleReport report;
    report.grid = grid;
    report.method = Method::SelfConsistent;
    report.iterations = fine.iterations;
    const double extrapolated = (4.0 * fine.energy - coarse.energy) / 3.0;
    report.eigenvalues = {extrapolated};
    report.richardson_error = {std::max(std::abs(fine.energy - coarse.energy) / 3.0,
                                        4.0 * std::numeric_limits<double>::epsilon() * std::abs(extrapolated))};
    return report;
}

}  // namespace isotonic::oracle
