#include <algorithm>
#include <cmath>
#include <limits>

#include "isotonic/error.hpp"
#include "isotonic/oracle.hpp"

namespace isotonic::oracle {

namespace {

constexpr int max_depth = 50;

double simpson_step(const RealFunction& f, double a, double b, double fa, double fm, double fb, double whole,
                    double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;

    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * std::abs(left + right);
    if (std::abs(delta) <= 15.0 * std::max(tol, floor)) return left + right + delta / 15.0;
    if (depth >= max_depth) throw ToleranceNotMet("quadrature: recursion depth limit reached");
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace

double quadrature(const RealFunction& f, double a, double b, double tol) {
    if (!(a < b)) throw DomainError("quadrature: requires a < b");
    if (!(tol > 0.0)) throw DomainError("quadrature: tolerance must be positive");

    // A coarse uniform start keeps narrow features from hiding between the first
    // three Simpson nodes.
    constexpr int panels = 32;
    const double width = (b - a) / panels;
    double total = 0.0;
    for (int i = 0; i < panels; ++i) {
        const double lo = a + i * width;
        const double hi = i + 1 == panels ? b : lo + width;
        const double fa = f(lo);
        const double fm = f(0.5 * (lo + hi));
        const double fb = f(hi);
        const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
        total += simpson_step(f, lo, hi, fa, fm, fb, whole, tol / panels, 0);
    }
    return total;
}

double quadrature_to_infinity(const RealFunction& f, double a, double tol) {
    if (!(tol > 0.0)) throw DomainError("quadrature_to_infinity: tolerance must be positive");
    constexpr double panel = 1.0;
    constexpr int max_panels = 10000;
    constexpr int probes = 16;
    constexpr double cutoff = 1e-18;

    double total = 0.0;
    double peak = 0.0;
    int quiet = 0;
    for (int k = 0; k < max_panels; ++k) {
        const double lo = a + k * panel;
        const double hi = lo + panel;
        double local = 0.0;
        for (int j = 0; j <= probes; ++j) local = std::max(local, std::abs(f(lo + panel * j / probes)));
        peak = std::max(peak, local);

        if (peak > 0.0 && local < cutoff * peak) return total;
        if (peak == 0.0 && ++quiet >= 8) return total;
        total += quadrature(f, lo, hi, tol / 64.0);
    }
    throw ToleranceNotMet("quadrature_to_infinity: integrand did not decay");
}

}  // namespace isotonic::oracle
