#include "isotonic/nonrel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "isotonic/error.hpp"
#include "isotonic/specfun.hpp"
#include "detail/laguerre_state.hpp"

namespace isotonic::nonrel {

namespace {

void require_quantum_number(int n, const char* what) {
    if (n < 0) throw DomainError(std::string(what) + ": negative quantum number");
}

void require_positive_coordinate(double x, const char* what) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError(std::string(what) + ": coordinate must be positive and finite");
    }
}

}  // namespace

void OscillatorParams::validate() const {
    if (!std::isfinite(M) || !std::isfinite(omega) || !std::isfinite(g) || !std::isfinite(hbar)) {
        throw DomainError("oscillator parameters must be finite");
    }
    if (!(M > 0.0) || !(omega > 0.0) || !(hbar > 0.0)) {
        throw DomainError("M, omega and hbar must be positive");
    }
}

std::string_view to_string(Regime r) {
    switch (r) {
        case Regime::Unphysical: return "unphysical";
        case Regime::SelfAdjointExtensionNeeded: return "self-adjoint-extension-needed";
        case Regime::ImpenetrableBarrier: return "impenetrable-barrier";
    }
    return "unknown";
}

Regime classify_regime(double alpha) {
    if (!std::isfinite(alpha)) throw DomainError("classify_regime: non-finite alpha");
    if (alpha < -0.25) return Regime::Unphysical;
    if (alpha < 0.75) return Regime::SelfAdjointExtensionNeeded;
    return Regime::ImpenetrableBarrier;
}

double m_from_g(double g) {
    const double disc = 1.0 + 4.0 * g;
    if (!(disc >= 0.0)) throw DomainError("m_from_g: g < -1/4 has no real m");
    return 0.5 * (std::sqrt(disc) - 1.0);
}

DerivedNonrel derive(const OscillatorParams& p) {
    p.validate();
    DerivedNonrel d;
    d.alpha = p.M * p.g / (p.hbar * p.hbar);
    d.beta = p.M * p.omega / p.hbar;
    d.regime = classify_regime(d.alpha);
    if (d.regime == Regime::Unphysical) {
        throw UnphysicalRegime("alpha = M g / hbar^2 < -1/4: spectrum unbounded below");
    }
    d.xi = 0.5 * std::sqrt(1.0 + 4.0 * d.alpha);
    if (1.0 + 4.0 * p.g >= 0.0) d.m = m_from_g(p.g);
    return d;
}

nu::HypergeometricForm schrodinger_form(const OscillatorParams& p, double eps) {
    p.validate();
    const double alpha = p.M * p.g / (p.hbar * p.hbar);
    const double beta = p.M * p.omega / p.hbar;
    return {-beta * beta, eps, -alpha};
}

EnergyLevel energy(int n, const OscillatorParams& p) {
    require_quantum_number(n, "energy");
    const DerivedNonrel d = derive(p);
    return {n, p.hbar * p.omega * (2.0 * n + 1.0 + d.xi), Branch::NonrelIsotonic, 0.0};
}

double wavefunction(int n, const OscillatorParams& p, double x) {
    require_quantum_number(n, "wavefunction");
    require_positive_coordinate(x, "wavefunction");
    const DerivedNonrel d = derive(p);
    if (!(d.xi > 0.0)) throw DomainError("wavefunction: requires xi > 0 (alpha > -1/4)");
    return detail::laguerre_state(n, d.beta, d.xi, x);
}

std::optional<double> parity_extend(double m, double psi_pos, double x) {
    if (!(x < 0.0)) throw DomainError("parity_extend: x must be negative");
    const double m_int = std::round(m);
    if (std::abs(m - m_int) > 1e-12) return std::nullopt;
    // (-1)^(1+m): symmetric for odd m, antisymmetric for even m.
    const bool odd = std::fmod(std::abs(m_int), 2.0) == 1.0;
    return odd ? psi_pos : -psi_pos;
}

EnergyLevel harmonic_energy(int n, const OscillatorParams& p) {
    require_quantum_number(n, "harmonic_energy");
    p.validate();
    return {n, (n + 0.5) * p.hbar * p.omega, Branch::Harmonic1D, 0.0};
}

double harmonic_wavefunction(int n, const OscillatorParams& p, double x) {
    require_quantum_number(n, "harmonic_wavefunction");
    if (!std::isfinite(x)) throw DomainError("harmonic_wavefunction: non-finite x");
    p.validate();
    const double beta = p.M * p.omega / p.hbar;
    const double y = std::sqrt(beta) * x;
    // [sqrt(beta/pi) / (2^n n!)]^(1/2), in log space
    const double log_norm =
        0.5 * (0.5 * std::log(beta / std::numbers::pi) - n * std::log(2.0) - specfun::log_gamma(n + 1.0));
    return std::exp(log_norm - 0.5 * y * y) * specfun::hermite(n, y);
}

EnergyLevel oscillator3d_energy(int n, int l, const OscillatorParams& p) {
    require_quantum_number(n, "oscillator3d_energy");
    require_quantum_number(l, "oscillator3d_energy");
    p.validate();
    return {n, p.hbar * p.omega * (2.0 * n + l + 1.5), Branch::Oscillator3D, 0.0};
}

double oscillator3d_radial(int n, int l, const OscillatorParams& p, double r) {
    require_quantum_number(n, "oscillator3d_radial");
    require_quantum_number(l, "oscillator3d_radial");
    require_positive_coordinate(r, "oscillator3d_radial");
    p.validate();
    const double beta = p.M * p.omega / p.hbar;
    // N^2 = beta^(l+3/2) 2^(n+l+2) n! / (sqrt(pi) (2n+2l+1)!!)
    double log_double_factorial = 0.0;
    for (int k = 3; k <= 2 * n + 2 * l + 1; k += 2) log_double_factorial += std::log(static_cast<double>(k));
    const double log_norm_sq = (l + 1.5) * std::log(beta) + (n + l + 2.0) * std::log(2.0) +
                               specfun::log_gamma(n + 1.0) - 0.5 * std::log(std::numbers::pi) -
                               log_double_factorial;
    const double z = beta * r * r;
    return std::exp(0.5 * log_norm_sq + l * std::log(r) - 0.5 * z) * specfun::laguerre(n, l + 0.5, z);
}

}  // namespace isotonic::nonrel
