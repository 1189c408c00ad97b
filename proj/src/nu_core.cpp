#include "isotonic/nu_core.hpp"

#include <cmath>

#include "isotonic/error.hpp"

namespace isotonic::nu {

NUReduction nu_reduce(const HypergeometricForm& form) {
    if (!(form.a2 < 0.0)) {
        throw UnphysicalRegime("nu_reduce: a2 must be negative for bound states");
    }
    const double disc = 1.0 - 4.0 * form.a0;
    if (!(disc >= 0.0)) {
        throw UnphysicalRegime("nu_reduce: 1 - 4 a0 < 0, spectrum unbounded below");
    }

    // With sigma = 2s, tau~ = 1 the radicand of pi(s) is
    //   -a2 s^2 + (2k - a1) s + (1/4 - a0),
    // a perfect square (q s - r)^2 when 2k - a1 = -2 q r.
    const double q = std::sqrt(-form.a2);
    const double r = 0.5 * std::sqrt(disc);

    NUReduction red;
    red.pi_const = 0.5 + r;
    red.pi_slope = -q;
    red.k = 0.5 * (form.a1 - 2.0 * q * r);
    red.tau_const = 1.0 + 2.0 * red.pi_const;
    red.tau_slope = 2.0 * red.pi_slope;
    red.lambda = red.k + red.pi_slope;
    red.weight_exponent = r;
    red.phi_exponent = 0.25 + 0.5 * r;
    red.decay_rate = 0.5 * q;
    return red;
}

double nu_eigencondition(const NUReduction& red, int n) {
    if (n < 0) throw DomainError("nu_eigencondition: negative n");
    const double lambda_n = -n * red.tau_slope;
    return red.lambda - lambda_n;
}

}  // namespace isotonic::nu
