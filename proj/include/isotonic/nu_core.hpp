#pragma once

// Nikiforov-Uvarov reduction for the hypergeometric-type family
//
//     psi''(s) + tau~(s)/sigma(s) psi'(s) + sigma~(s)/sigma(s)^2 psi(s) = 0,
//     sigma(s) = 2s,  tau~(s) = 1,  sigma~(s) = a2 s^2 + a1 s + a0,
//
// which is what s = x^2 produces for every inverse-square plus quadratic
// potential treated here. General quadratic sigma is not supported.

namespace isotonic::nu {

/// Coefficients of sigma~(s) = a2 s^2 + a1 s + a0. Bound states need a2 < 0.
struct HypergeometricForm {
    double a2 = -1.0;
    double a1 = 0.0;
    double a0 = 0.0;
};

/// Intermediate objects of the reduction, on the branch with positive constant and
/// negative slope of pi(s):
///
///     pi(s)    = pi_const + pi_slope * s
///     tau(s)   = tau~(s) + 2 pi(s) = tau_const + tau_slope * s
///     lambda   = k + pi'(s)
///     Omega(s) = s^phi_exponent * exp(-decay_rate * s)
///     rho(s)   = s^weight_exponent * exp(-2 decay_rate * s)
struct NUReduction {
    double pi_const = 0.0;
    double pi_slope = 0.0;
    double k = 0.0;
    double tau_const = 0.0;
    double tau_slope = 0.0;
    double lambda = 0.0;
    double weight_exponent = 0.0;
    double phi_exponent = 0.0;
    double decay_rate = 0.0;

    double pi(double s) const { return pi_const + pi_slope * s; }
    double tau(double s) const { return tau_const + tau_slope * s; }
};

/// Throws UnphysicalRegime when a2 >= 0 or 1 - 4 a0 < 0 (no perfect-square k exists,
/// the spectrum is unbounded below).
NUReduction nu_reduce(const HypergeometricForm& form);

/// lambda - lambda_n with lambda_n = -n tau'(s). The -n(n-1)/2 sigma''(s) term is
/// absent because sigma = 2s is linear. Zero exactly at a bound state.
double nu_eigencondition(const NUReduction& red, int n);

}  // namespace isotonic::nu
