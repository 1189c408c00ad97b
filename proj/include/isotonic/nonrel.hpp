#pragma once

#include <optional>
#include <string_view>

#include "isotonic/nu_core.hpp"
#include "isotonic/types.hpp"

// Schroedinger bound states of the isotonic oscillator
//
//     U(x) = M omega^2 x^2 / 2 + g / (2 x^2),   x > 0,
//
// plus the 1D harmonic oscillator and 3D isotropic oscillator it is compared with.

namespace isotonic::nonrel {

struct OscillatorParams {
    double M = 1.0;
    double omega = 1.0;
    double g = 0.0;
    double hbar = 1.0;

    /// Throws DomainError unless M, omega, hbar are positive and all fields finite.
    void validate() const;
};

enum class Regime {
    Unphysical,                  // alpha < -1/4
    SelfAdjointExtensionNeeded,  // -1/4 <= alpha < 3/4
    ImpenetrableBarrier,         // alpha >= 3/4
};

std::string_view to_string(Regime r);

Regime classify_regime(double alpha);

struct DerivedNonrel {
    double alpha = 0.0;  // M g / hbar^2
    double beta = 0.0;   // M omega / hbar
    double xi = 0.0;     // sqrt(1 + 4 alpha) / 2
    /// Root m >= -1/2 of g = m(m+1); empty when 1 + 4g < 0.
    std::optional<double> m;
    Regime regime = Regime::ImpenetrableBarrier;
};

/// Throws UnphysicalRegime for alpha < -1/4.
DerivedNonrel derive(const OscillatorParams& p);

/// m >= -1/2 with m(m+1) = g. Throws DomainError when g < -1/4.
double m_from_g(double g);

/// The hypergeometric form of the reduced equation at trial eps = 2 M E / hbar^2.
nu::HypergeometricForm schrodinger_form(const OscillatorParams& p, double eps);

/// E_n = hbar omega (2n + 1 + sqrt(1 + 4 M g / hbar^2) / 2).
EnergyLevel energy(int n, const OscillatorParams& p);

/// Normalized half-line eigenfunction
///
///     psi_n(x) = sqrt(2 beta^(1+xi) n! / Gamma(n+xi+1)) x^(1/2+xi) exp(-beta x^2/2) L_n^xi(beta x^2)
///
/// for x > 0. In the self-adjoint-extension regime this is the x^(1/2+xi) branch
/// (check `derive(p).regime`); no extension is constructed.
double wavefunction(int n, const OscillatorParams& p, double x);

/// psi_n(-x) = (-1)^(1+m) psi_n(x) for integer m; empty (not normalizable) otherwise.
/// `x` is the negative coordinate and is only checked for sign.
std::optional<double> parity_extend(double m, double psi_pos, double x);

EnergyLevel harmonic_energy(int n, const OscillatorParams& p);

/// Normalized 1D harmonic-oscillator eigenfunction with Hermite argument sqrt(beta) x.
double harmonic_wavefunction(int n, const OscillatorParams& p, double x);

/// hbar omega (2n + l + 3/2).
EnergyLevel oscillator3d_energy(int n, int l, const OscillatorParams& p);

/// Radial part R_{n,l}(r) of the 3D oscillator, normalized so that the integral of
/// R^2 r^2 over (0, inf) is one. The angular factor is not included.
double oscillator3d_radial(int n, int l, const OscillatorParams& p, double r);

}  // namespace isotonic::nonrel
