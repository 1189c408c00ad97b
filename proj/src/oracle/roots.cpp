#include <cmath>

#include "isotonic/error.hpp"
#include "isotonic/oracle.hpp"

namespace isotonic::oracle {

namespace {

double bisect(const RealFunction& f, double lo, double hi, double f_lo) {
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double f_mid = f(mid);
        if (f_mid == 0.0) return mid;
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<RootBracket> scan_roots(const RealFunction& f, double lo, double hi, int steps) {
    if (!(lo < hi)) throw DomainError("scan_roots: requires lo < hi");
    if (steps < 2) throw DomainError("scan_roots: requires at least 2 steps");

    std::vector<RootBracket> roots;
    const double h = (hi - lo) / steps;
    double x_prev = lo;
    double f_prev = f(lo);
    if (f_prev == 0.0) roots.push_back({lo, lo, lo});
    for (int i = 1; i <= steps; ++i) {
        const double x = i == steps ? hi : lo + i * h;
        const double fx = f(x);
        if (fx == 0.0) {
            roots.push_back({x, x, x});
        } else if (f_prev != 0.0 && (fx < 0.0) != (f_prev < 0.0)) {
            roots.push_back({x_prev, x, bisect(f, x_prev, x, f_prev)});
        }
        x_prev = x;
        f_prev = fx;
    }
    return roots;
}

}  // namespace isotonic::oracle
