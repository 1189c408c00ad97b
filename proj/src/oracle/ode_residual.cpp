#include <algorithm>
#include <cmath>
#include <limits>

#include "isotonic/error.hpp"
#include "isotonic/oracle.hpp"

namespace isotonic::oracle {

std::vector<double> sample(const RealFunction& f, const Grid& grid) {
    grid.validate();
    std::vector<double> values(grid.n_points);
    for (int i = 0; i < grid.n_points; ++i) values[i] = f(grid.x(i));
    return values;
}

double ode_residual(std::span<const double> f_samples, const RealFunction& coefficient, const Grid& grid) {
    const auto size = static_cast<int>(f_samples.size());
    if (size < 5 || size != grid.n_points) {
        throw DomainError("ode_residual: need >= 5 samples, one per grid node");
    }
    const double h = grid.spacing();
    const double inv = 1.0 / (12.0 * h * h);

    const int first = 2;
    const int last = size - 3;
    std::vector<double> mismatch(size, 0.0);
    std::vector<double> scale(size, 0.0);
    for (int i = first; i <= last; ++i) {
        const double d2 = (-f_samples[i - 2] + 16.0 * f_samples[i - 1] - 30.0 * f_samples[i] +
                           16.0 * f_samples[i + 1] - f_samples[i + 2]) * inv;
        const double cf = coefficient(grid.x(i)) * f_samples[i];
        mismatch[i] = std::abs(d2 - cf);
        scale[i] = std::abs(d2) + std::abs(cf);
    }

    double worst = 0.0;
    for (int i = first; i <= last; ++i) {
        double local = 0.0;
        for (int j = std::max(first, i - 2); j <= std::min(last, i + 2); ++j) local = std::max(local, scale[j]);
        worst = std::max(worst, mismatch[i] / (local + std::numeric_limits<double>::epsilon()));
    }
    return worst;
}

}  // namespace isotonic::oracle
