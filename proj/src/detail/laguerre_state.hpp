#pragma once

#include <cmath>

#include "isotonic/specfun.hpp"

namespace isotonic::detail {

inline double laguerre_state_log_norm(int n, double rate, double order) {
    return 0.5 * (std::log(2.0) + (1.0 + order) * std::log(rate) + specfun::log_gamma(n + 1.0) -
                  specfun::log_gamma(n + order + 1.0));
}

/// sqrt(2 rate^(1+order) n! / Gamma(n+order+1)) x^(1/2+order) exp(-rate x^2/2) L_n^order(rate x^2),
/// unit-normalized on (0, inf). x > 0.
inline double laguerre_state(int n, double rate, double order, double x) {
    const double z = rate * x * x;
    const double envelope =
        std::exp(laguerre_state_log_norm(n, rate, order) + (0.5 + order) * std::log(x) - 0.5 * z);
    return envelope * specfun::laguerre(n, order, z);
}

}  // namespace isotonic::detail
