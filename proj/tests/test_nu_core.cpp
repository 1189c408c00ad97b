#include <doctest.h>

#include <cmath>

#include "isotonic/error.hpp"
#include "isotonic/nu_core.hpp"

using namespace isotonic;
using namespace isotonic::nu;

TEST_CASE("schrodinger form, beta = 1, alpha = 2") {
    const double eps = 7.0;
    const auto r = nu_reduce({-1.0, eps, -2.0});
    CHECK(r.pi_const == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(r.pi_slope == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(r.k == doctest::Approx(0.5 * (eps - 3.0)).epsilon(1e-15));
    CHECK(r.tau_slope < 0.0);
    CHECK(r.weight_exponent == doctest::Approx(1.5));
    CHECK(r.phi_exponent == doctest::Approx(0.25 + 0.75));
}

TEST_CASE("alpha = 0 gives xi = 1/2") {
    const auto r = nu_reduce({-1.0, 3.0, 0.0});
    CHECK(r.pi_const == doctest::Approx(1.0));
    CHECK(r.weight_exponent == doctest::Approx(0.5));
}

TEST_CASE("spin-branch form") {
    const double nu2 = 0.81, A2 = 2.3, b = 1.7;
    const auto r = nu_reduce({-nu2, -A2, -b});
    const double root = std::sqrt(1.0 + 4.0 * b);
    CHECK(r.pi_const == doctest::Approx(0.5 * (1.0 + root)).epsilon(1e-14));
    CHECK(r.k == doctest::Approx(-0.5 * (A2 + std::sqrt(nu2) * root)).epsilon(1e-14));
}

TEST_CASE("eigencondition vanishes on the closed-form spectrum") {
    const double beta = 1.3, alpha = 2.0;
    for (int n = 0; n <= 10; ++n) {
        const double eps = 2.0 * beta * (2 * n + 1) + beta * std::sqrt(1.0 + 4.0 * alpha);
        CHECK(std::abs(nu_eigencondition(nu_reduce({-beta * beta, eps, -alpha}), n)) <= 1e-12 * eps);
    }
}

TEST_CASE("eigencondition is eps/2 shifted off the spectrum") {
    // lambda = k + pi' with k = (eps - ...)/2, so d/d eps (lambda - lambda_n) = +1/2.
    const double beta = 1.0, alpha = 2.0;
    const double eps = 2.0 * beta * 3 + beta * 3.0;
    CHECK(nu_eigencondition(nu_reduce({-1.0, eps + 0.1, -alpha}), 1) == doctest::Approx(0.05).epsilon(1e-12));
}

TEST_CASE("pi satisfies its defining quadratic") {
    // (pi - 1/2)^2 = 1/4 - sigma~(s) + k sigma(s), sigma = 2s
    const HypergeometricForm f{-2.2, 4.1, -0.9};
    const auto r = nu_reduce(f);
    for (double s = 0.1; s <= 10.0; s += 0.37) {
        const double lhs = std::pow(r.pi(s) - 0.5, 2);
        const double rhs = 0.25 - (f.a2 * s * s + f.a1 * s + f.a0) + 2.0 * r.k * s;
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
    }
    // tau = tau~ + 2 pi with tau~ = 1
    CHECK(r.tau_const == 1.0 + 2.0 * r.pi_const);
    CHECK(r.tau_slope == 2.0 * r.pi_slope);
    CHECK(r.lambda == r.k + r.pi_slope);
}

TEST_CASE("unphysical forms are rejected") {
    CHECK_THROWS_AS(nu_reduce({0.0, 1.0, 0.0}), UnphysicalRegime);
    CHECK_THROWS_AS(nu_reduce({1.0, 1.0, 0.0}), UnphysicalRegime);
    CHECK_THROWS_AS(nu_reduce({-1.0, 1.0, 0.3}), UnphysicalRegime);  // 1 - 4 a0 < 0
    CHECK_NOTHROW(nu_reduce({-1.0, 1.0, 0.25}));
}
