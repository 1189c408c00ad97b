#pragma once

// Real-argument special functions used by the bound-state wavefunctions.
// All functions are pure and reentrant.

namespace isotonic::specfun {

/// Associated Laguerre polynomial L_n^alpha(z), by upward three-term recurrence in n.
/// Throws DomainError for n < 0 or non-finite arguments.
double laguerre(int n, double alpha, double z);

/// d/dz L_n^alpha(z) = -L_{n-1}^{alpha+1}(z); zero for n = 0.
double laguerre_derivative(int n, double alpha, double z);

/// Confluent hypergeometric 1F1(a; b; z) by direct power series.
///
/// A non-positive integer `a` gives the exact terminating polynomial. `b` may be a
/// non-positive integer only when the series terminates before the pole is reached.
/// Throws DivergenceError if 1000 terms do not reach a 1e-15 relative term size or
/// the partial sum overflows.
double kummer_1f1(double a, double b, double z);

/// Physicists' Hermite polynomial H_n(y).
double hermite(int n, double y);

/// ln Gamma(x) for x > 0 (Lanczos, g = 7). Throws DomainError for x <= 0.
double log_gamma(double x);

}  // namespace isotonic::specfun
