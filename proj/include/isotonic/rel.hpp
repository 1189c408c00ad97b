#pragma once

#include <span>
#include <vector>

#include "isotonic/nu_core.hpp"
#include "isotonic/types.hpp"

// s-wave Dirac bound states of the isotonic oscillator under spin symmetry
// (Delta = V - S = C_s, Sigma = U) and pseudospin symmetry (Sigma = C_ps, Delta = U),
// and the Klein-Gordon case V = S.

namespace isotonic::rel {

enum class Symmetry { Spin, Pseudospin };

struct DiracParams {
    double M = 1.0;
    double omega = 1.0;
    double g = 0.0;
    double hbar = 1.0;
    double c = 1.0;
    int kappa = -1;  // -1 for Spin, +1 for Pseudospin; only s-waves are supported
    double C = 0.0;  // C_s or C_ps depending on `branch`
    Symmetry branch = Symmetry::Spin;

    static DiracParams spin(double M, double omega, double g, double C_s);
    static DiracParams pseudospin(double M, double omega, double g, double C_ps);

    double rest_energy() const { return M * c * c; }
    double hbarc() const { return hbar * c; }

    /// Throws DomainError on non-positive M, omega, hbar, c or a kappa that does not
    /// match the branch.
    void validate() const;
};

struct SpinDerived {
    double gamma = 0.0;     // (Mc^2 + E - C_s) / (hbar c)^2
    double A_s_sq = 0.0;    // gamma (Mc^2 - E)
    double beta_spin = 0.0; // g gamma / 2
    double nu = 0.0;        // sqrt(M omega^2 gamma / 2)
    double zeta = 0.0;      // sqrt(1 + 2 g gamma) / 2
};

struct PseudospinDerived {
    double gamma_t = 0.0;  // (Mc^2 - E + C_ps) / (hbar c)^2, <= 0 for bound states
    double A_ps_sq = 0.0;  // gamma_t (Mc^2 + E)
    double beta_t = 0.0;   // g gamma_t / 2
    double nu_hat = 0.0;   // sqrt(M omega^2 |gamma_t| / 2)
    double zeta_t = 0.0;   // sqrt(1 + 2 g (E - Mc^2 - C_ps) / (hbar c)^2) / 2
};

/// Throws DomainError when gamma <= 0 or 1 + 2 g gamma < 0.
SpinDerived spin_derived(const DiracParams& p, double E);
/// Throws DomainError when E < Mc^2 + C_ps or zeta_t is not real.
PseudospinDerived pseudospin_derived(const DiracParams& p, double E);

struct SolveOptions {
    /// Upper end of the bracket scan, as an energy. Zero selects
    /// lower bound + 1e3 * max(Mc^2, hbar omega).
    double e_max = 0.0;
};

/// (E - Mc^2) sqrt(Mc^2 + E - C_s) - hbar c omega sqrt(2M) (2n + 1 + zeta).
/// Throws DomainError if Mc^2 + E - C_s < 0.
double spin_energy_residual(double E, int n, const DiracParams& p);

/// Lowest root above max(Mc^2, C_s - Mc^2). Throws NoRootInRange.
EnergyLevel solve_spin_energy(int n, const DiracParams& p, const SolveOptions& opts = {});

/// Root of the spin energy equation expressed as E - Mc^2. Avoids the cancellation
/// in E - Mc^2 when c is large.
double solve_spin_binding(int n, const DiracParams& p, const SolveOptions& opts = {});

/// (E + Mc^2) sqrt(E - Mc^2 - C_ps) - hbar c omega sqrt(2M) (2n + 1 + zeta_t).
/// Throws DomainError if E - Mc^2 - C_ps < 0.
double pseudospin_energy_residual(double E, int n, const DiracParams& p);

EnergyLevel solve_pseudospin_energy(int n, const DiracParams& p, const SolveOptions& opts = {});

/// Normalized upper component F_{n,-1}(x), x > 0.
double spin_upper_spinor(int n, const DiracParams& p, double E, double x);

/// Lower component G_{n,-1}(x) = hbar c (d/dx + kappa/x) F / (Mc^2 + E - C_s).
/// Throws DegenerateEnergy when |Mc^2 + E - C_s| < 1e-12.
double spin_lower_spinor(int n, const DiracParams& p, double E, double x);

/// Normalized lower component G_{n,1}(x) of the pseudospin branch, x > 0, in the real
/// form with nu_hat = sqrt(M omega^2 |gamma_t| / 2). Throws DegenerateEnergy when
/// gamma_t vanishes.
double pseudospin_lower_spinor(int n, const DiracParams& p, double E, double x);

/// (E^2 - M^2 c^4)(E - Mc^2) - 2 M (hbar c omega)^2 (2n + 1 + sqrt(1 + 2g(Mc^2+E)/(hbar c)^2)/2)^2.
double klein_gordon_residual(double E, int n, const DiracParams& p);

/// Root of the Klein-Gordon energy equation above Mc^2. Requires C = 0.
EnergyLevel klein_gordon_energy(int n, const DiracParams& p, const SolveOptions& opts = {});

/// Spin-branch hypergeometric form at trial energy E.
nu::HypergeometricForm spin_form(const DiracParams& p, double E);

/// The spin energy condition via the NU reduction, rescaled to the units of
/// spin_energy_residual: 2 hbar c / sqrt(gamma) * (lambda - lambda_n).
double spin_nu_residual(double E, int n, const DiracParams& p);

/// Applies E -> -E, C_s -> -C_ps, omega^2 -> -omega^2, g -> -g to the spin NU
/// machinery and returns the largest |mapped - pseudospin_energy_residual| over a
/// 100-point energy grid spanning the bound-state range. Expected <= 1e-10.
double pseudospin_map_check(int n, const DiracParams& p);

/// For each c: |(E_spin - Mc^2) - E_schroedinger(n)| with C_s = 0.
std::vector<double> nonrel_limit_check(int n, const DiracParams& p, std::span<const double> c_values);

}  // namespace isotonic::rel
