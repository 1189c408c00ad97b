#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "isotonic/error.hpp"
#include "isotonic/oracle.hpp"

namespace isotonic::oracle {

namespace {

// Number of eigenvalues strictly below x (LDL^T inertia of T - xI).
int sturm_count(std::span<const double> diag, std::span<const double> off_sq, double x, double pivmin) {
    int count = 0;
    double q = diag[0] - x;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < diag.size(); ++i) {
        q = diag[i] - x - off_sq[i - 1] / q;
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0.0) ++count;
    }
    return count;
}

}  // namespace

void Grid::validate() const {
    if (!(x_min > 0.0) || !(x_max > x_min) || !std::isfinite(x_max)) {
        throw DomainError("grid requires 0 < x_min < x_max");
    }
    if (n_points < 100) throw DomainError("grid requires at least 100 points");
}

std::vector<double> tridiagonal_eigenvalues(std::span<const double> diag, std::span<const double> off,
                                            int first, int count) {
    const auto size = static_cast<int>(diag.size());
    if (size == 0 || static_cast<int>(off.size()) != size - 1) {
        throw DomainError("tridiagonal_eigenvalues: off-diagonal must have size n - 1");
    }
    if (first < 0 || count < 0 || first + count > size) {
        throw DomainError("tridiagonal_eigenvalues: eigenvalue index out of range");
    }

    std::vector<double> off_sq(off.size());
    double max_off_sq = 0.0;
    for (std::size_t i = 0; i < off.size(); ++i) {
        off_sq[i] = off[i] * off[i];
        max_off_sq = std::max(max_off_sq, off_sq[i]);
    }
    const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, max_off_sq);

    // Gershgorin interval
    double lower = std::numeric_limits<double>::infinity();
    double upper = -lower;
    for (int i = 0; i < size; ++i) {
        double radius = 0.0;
        if (i > 0) radius += std::abs(off[i - 1]);
        if (i + 1 < size) radius += std::abs(off[i]);
        lower = std::min(lower, diag[i] - radius);
        upper = std::max(upper, diag[i] + radius);
    }
    const double pad = 2.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lower), std::abs(upper));
    lower -= pad;
    upper += pad;

    std::vector<double> values;
    values.reserve(count);
    double floor = lower;
    for (int k = first; k < first + count; ++k) {
        // invariant: count(lo) <= k < count(hi)
        double lo = floor;
        double hi = upper;
        for (int it = 0; it < 256; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double width = hi - lo;
            const double tol = 2.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi));
            if (width <= tol + pivmin || mid <= lo || mid >= hi) break;
            if (sturm_count(diag, off_sq, mid, pivmin) <= k) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        values.push_back(0.5 * (lo + hi));
        floor = lo;  // eigenvalue k+1 >= eigenvalue k
    }
    return values;
}

std::vector<double> fd_solve(const RealFunction& potential, const Grid& grid, int first, int count,
                             double kinetic) {
    grid.validate();
    if (!(kinetic > 0.0)) throw DomainError("fd_solve: kinetic coefficient must be positive");
    const int interior = grid.n_points - 2;
    const double h = grid.spacing();
    const double coupling = kinetic / (h * h);

    std::vector<double> diag(interior);
    for (int i = 0; i < interior; ++i) {
        const double v = potential(grid.x(i + 1));
        if (!std::isfinite(v)) throw DomainError("fd_solve: potential not finite on the grid");
        diag[i] = 2.0 * coupling + v;
    }
    const std::vector<double> off(interior - 1, -coupling);
    return tridiagonal_eigenvalues(diag, off, first, count);
}

OracleReport fd_eigenvalues(const RealFunction& potential, const Grid& grid, int count, double kinetic) {
    grid.validate();
    if (count < 1 || count > grid.n_points / 10) {
        throw DomainError("fd_eigenvalues: count must be in [1, n_points/10]");
    }
    const std::vector<double> coarse = fd_solve(potential, grid, 0, count, kinetic);
    const std::vector<double> fine = fd_solve(potential, grid.refined(), 0, count, kinetic);

    OracleReport report;
    report.grid = grid;
    report.method = Method::FiniteDifference;
    for (int k = 0; k < count; ++k) {
        // O(h^2) leading error: halving h divides it by 4.
        const double extrapolated = (4.0 * fine[k] - coarse[k]) / 3.0;
        const double error = std::max(std::abs(fine[k] - coarse[k]) / 3.0,
                                      4.0 * std::numeric_limits<double>::epsilon() * std::abs(extrapolated));
        if (error > 1e-3) {
            throw GridTooCoarse("fd_eigenvalues: Richardson error " + std::to_string(error) + " for eigenvalue " +
                                std::to_string(k));
        }
        report.eigenvalues.push_back(extrapolated);
        report.richardson_error.push_back(error);
    }
    return report;
}

}  // namespace isotonic::oracle
