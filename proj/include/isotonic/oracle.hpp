#pragma once

#include <functional>
#include <span>
#include <vector>

#include "isotonic/rel.hpp"

// Numerical machinery used to check the closed forms: a finite-difference
// eigensolver, adaptive quadrature, root scanning, a self-consistent Dirac
// iteration and an ODE residual. Nothing here evaluates the analytic energy
// formulas or wavefunctions.

namespace isotonic::oracle {

using RealFunction = std::function<double(double)>;

/// Uniform grid x_i = x_min + i h, i = 0 .. n_points-1, on the half-line.
struct Grid {
    double x_min = 1e-4;
    double x_max = 20.0;
    int n_points = 16000;

    double spacing() const { return (x_max - x_min) / (n_points - 1); }
    double x(int i) const { return x_min + i * spacing(); }
    /// Same end points, half the spacing.
    Grid refined() const { return {x_min, x_max, 2 * n_points - 1}; }
    /// Throws DomainError unless 0 < x_min < x_max and n_points >= 100.
    void validate() const;
};

enum class Method { FiniteDifference, Quadrature, RootScan, SelfConsistent };

struct OracleReport {
    std::vector<double> eigenvalues;  // ascending
    Grid grid;
    std::vector<double> richardson_error;
    Method method = Method::FiniteDifference;
    int iterations = 0;  // self-consistent iterations on the finer grid
};

/// Eigenvalues with indices first .. first+count-1 (ascending order) of the symmetric
/// tridiagonal matrix with diagonal `diag` and off-diagonal `off`, by Sturm-sequence
/// bisection.
std::vector<double> tridiagonal_eigenvalues(std::span<const double> diag, std::span<const double> off,
                                            int first, int count);

/// Single-grid eigenvalues of -kinetic d^2/dx^2 + V(x) with Dirichlet ends.
std::vector<double> fd_solve(const RealFunction& potential, const Grid& grid, int first, int count,
                             double kinetic);

/// Lowest `count` eigenvalues of -kinetic d^2/dx^2 + V(x) (kinetic = hbar^2 / 2M),
/// Richardson-extrapolated from the grid and its half-spacing refinement.
/// Throws GridTooCoarse if any error estimate exceeds 1e-3.
OracleReport fd_eigenvalues(const RealFunction& potential, const Grid& grid, int count,
                            double kinetic = 0.5);

/// Adaptive Simpson integral of f over [a, b] to absolute tolerance `tol`.
/// Throws ToleranceNotMet when the recursion depth limit is hit.
double quadrature(const RealFunction& f, double a, double b, double tol);

/// Integral over [a, inf). Panels are added until the integrand stays below 1e-18
/// of the largest magnitude seen.
double quadrature_to_infinity(const RealFunction& f, double a, double tol);

struct RootBracket {
    double lo = 0.0;
    double hi = 0.0;
    double root = 0.0;
};

/// Every sign change of f on a uniform `steps`-interval grid of [lo, hi], each
/// bisected to 1e-12.
std::vector<RootBracket> scan_roots(const RealFunction& f, double lo, double hi, int steps);

/// Spin-symmetric s-wave energy found without the closed-form energy equation: for
/// fixed E, -F'' + gamma(E) Sigma(x) F = lambda F is a linear eigenproblem, and
/// lambda = gamma(E) (E - Mc^2) fixes the next E. Iterated to |dE| <= 1e-9 on the grid
/// and on its refinement, then Richardson-extrapolated.
/// Throws NoConvergence after 200 iterations.
OracleReport dirac_selfconsistent(int n, const rel::DiracParams& p, const Grid& grid = {});

/// Samples f on the grid nodes.
std::vector<double> sample(const RealFunction& f, const Grid& grid);

/// Max over interior nodes of |f'' - c f| / (local scale + eps), with f'' from the
/// five-point central difference. The local scale is the largest |f''| + |c f| over
/// the five-point stencil, so isolated zeros of both terms (turning points, nodes)
/// do not produce 0/0.
double ode_residual(std::span<const double> f_samples, const RealFunction& coefficient, const Grid& grid);

}  // namespace isotonic::oracle
