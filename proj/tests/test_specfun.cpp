#include <doctest.h>

#include <cmath>

#include "isotonic/error.hpp"
#include "isotonic/specfun.hpp"

using namespace isotonic;
using namespace isotonic::specfun;

namespace {

bool close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max(1.0, std::abs(b)); }

// Term-by-term Kummer series for L_n^alpha(z) = binom(n+alpha, n) 1F1(-n; alpha+1; z),
// written out independently of the library's kummer_1f1.
double laguerre_series(int n, double alpha, double z) {
    double binom = 1.0;
    for (int j = 1; j <= n; ++j) binom *= (alpha + j) / j;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 0; k < n; ++k) {
        term *= (k - n) * z / ((alpha + 1.0 + k) * (k + 1.0));
        sum += term;
    }
    return binom * sum;
}

}  // namespace

TEST_CASE("laguerre low orders") {
    CHECK(laguerre(0, 0.5, 3.7) == 1.0);
    CHECK(laguerre(1, 1.5, 1.0) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(laguerre(2, 0.0, 1.0) == doctest::Approx(-0.5).epsilon(1e-15));
}

TEST_CASE("laguerre matches the Kummer series oracle") {
    const double series = laguerre_series(5, 1.5, 2.0);
    CHECK(series == doctest::Approx(-1.3330729166666667).epsilon(1e-14));
    CHECK(close(laguerre(5, 1.5, 2.0), series, 1e-13));
    CHECK(close(laguerre(12, 0.5, 7.3), -0.19148493924221579, 1e-12));
    CHECK(close(laguerre(20, 2.5, 30.0), 213308.51671958101, 1e-12));
}

TEST_CASE("laguerre derivative") {
    CHECK(laguerre_derivative(0, 2.0, 5.0) == 0.0);
    CHECK(laguerre_derivative(1, 0.5, 1.0) == doctest::Approx(-1.0).epsilon(1e-15));

    const double z = 0.7;
    const double h = 1e-4;
    const double fd = (laguerre(4, 1.5, z + h) - laguerre(4, 1.5, z - h)) / (2 * h);
    CHECK(std::abs(laguerre_derivative(4, 1.5, z) - fd) <= 1e-8 * std::abs(fd));
    CHECK(laguerre_derivative(4, 1.5, z) == doctest::Approx(-7.0653333333333333).epsilon(1e-13));
}

TEST_CASE("kummer_1f1") {
    CHECK(kummer_1f1(-3, 2.5, 0.0) == 1.0);
    CHECK(kummer_1f1(-1, 2.5, 1.0) == doctest::Approx(0.6).epsilon(1e-15));
    // binom(3.5, 2) 1F1(-2; 2.5; 1.5) = L_2^{1.5}(1.5)
    CHECK(close(4.375 * kummer_1f1(-2, 2.5, 1.5), laguerre(2, 1.5, 1.5), 1e-13));
    CHECK(kummer_1f1(-2, 2.5, 1.5) == doctest::Approx(0.057142857142857142).epsilon(1e-14));

    // non-terminating: 1F1(a; a; z) = e^z
    CHECK(close(kummer_1f1(1.3, 1.3, 2.0), std::exp(2.0), 1e-14));
    // 1F1(1; 2; z) = (e^z - 1) / z
    CHECK(close(kummer_1f1(1.0, 2.0, -3.0), (std::exp(-3.0) - 1.0) / -3.0, 1e-13));
}

TEST_CASE("kummer_1f1 rejects a pole in b") {
    CHECK_THROWS_AS(kummer_1f1(0.5, -2.0, 1.0), DomainError);
    CHECK_THROWS_AS(kummer_1f1(-3.0, -2.0, 1.0), DomainError);
    // terminates at k = 2 before reaching the pole at k = 3
    CHECK(kummer_1f1(-2.0, -3.0, 1.0) == doctest::Approx(1.0 + 2.0 / 3.0 + 1.0 / 6.0).epsilon(1e-15));
}

TEST_CASE("kummer_1f1 divergence") {
    CHECK_THROWS_AS(kummer_1f1(0.5, 1.5, 800.0), DivergenceError);
}

TEST_CASE("hermite") {
    CHECK(hermite(0, 2.3) == 1.0);
    CHECK(hermite(1, 1.0) == 2.0);
    CHECK(hermite(2, 1.0) == 2.0);
    CHECK(hermite(3, 0.5) == doctest::Approx(8 * 0.125 - 12 * 0.5));
}

TEST_CASE("log_gamma") {
    CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(close(log_gamma(0.5), 0.57236494292470009, 1e-14));
    CHECK(std::abs(log_gamma(7.5) - log_gamma(6.5) - std::log(6.5)) <= 1e-14 * log_gamma(7.5));
    CHECK(close(log_gamma(7.5), 7.5343642367587330, 1e-13));
    CHECK(close(log_gamma(1e-3), 6.9071788853838537, 1e-13));
    CHECK(close(log_gamma(2.2), 0.096947466790638873, 1e-13));
    CHECK(close(log_gamma(100.3), 360.51470572905812, 1e-13));
    CHECK_THROWS_AS(log_gamma(0.0), DomainError);
    CHECK_THROWS_AS(log_gamma(-1.5), DomainError);
}

TEST_CASE("non-finite and negative-degree input is rejected") {
    CHECK_THROWS_AS(laguerre(-1, 0.5, 1.0), DomainError);
    CHECK_THROWS_AS(laguerre(2, 0.5, NAN), DomainError);
    CHECK_THROWS_AS(hermite(-2, 1.0), DomainError);
    CHECK_THROWS_AS(kummer_1f1(-1, 2.0, INFINITY), DomainError);
}
