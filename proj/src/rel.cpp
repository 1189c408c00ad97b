#include "isotonic/rel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "detail/laguerre_state.hpp"
#include "isotonic/error.hpp"
#include "isotonic/nonrel.hpp"
#include "isotonic/specfun.hpp"

namespace isotonic::rel {

namespace {

void require_quantum_number(int n) {
    if (n < 0) throw DomainError("negative quantum number");
}

void require_positive_coordinate(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("spinor coordinate must be positive and finite");
}

void require_branch(const DiracParams& p, Symmetry b, const char* what) {
    p.validate();
    if (p.branch != b) throw DomainError(std::string(what) + ": wrong symmetry branch");
}

double energy_scale(const DiracParams& p) { return p.hbarc() * p.omega * std::sqrt(2.0 * p.M); }

struct Root {
    double x = 0.0;
    double residual = 0.0;
};

// Scans lower + d, d = 1e-9 * 1.05^k, for the first sign change of f, bisects it
// to 1e-12 and applies one Newton step when that does not worsen |f|.
// f must be negative just above `lower`.
Root solve_above(const std::function<double(double)>& f, const std::function<double(double)>& df,
                 double lower, double upper, const char* what) {
    double offset = 1e-9;
    double lo = lower + offset;
    double f_lo = f(lo);
    if (f_lo == 0.0) return {lo, 0.0};
    if (f_lo > 0.0) throw NoRootInRange(std::string(what) + ": residual positive at the lower bound");

    double hi = lo;
    double f_hi = f_lo;
    while (true) {
        offset *= 1.05;
        hi = lower + offset;
        if (hi > upper) throw NoRootInRange(std::string(what) + ": no sign change below the scan limit");
        try {
            f_hi = f(hi);
        } catch (const DomainError&) {
            throw NoRootInRange(std::string(what) + ": left the admissible domain before a sign change");
        }
        if (f_hi >= 0.0) break;
        lo = hi;
        f_lo = f_hi;
    }
    if (f_hi == 0.0) return {hi, 0.0};

    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double f_mid = f(mid);
        if (f_mid == 0.0) return {mid, 0.0};
        if (f_mid < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    double x = 0.5 * (lo + hi);
    double fx = f(x);
    const double slope = df(x);
    if (slope != 0.0 && std::isfinite(slope)) {
        const double polished = x - fx / slope;
        if (polished >= lo && polished <= hi) {
            const double f_polished = f(polished);
            if (std::abs(f_polished) <= std::abs(fx)) {
                x = polished;
                fx = f_polished;
            }
        }
    }
    return {x, std::abs(fx)};
}

double scan_span(const DiracParams& p, const SolveOptions& opts, double lower_energy) {
    if (opts.e_max > 0.0) return opts.e_max - lower_energy;
    return 1e3 * std::max(p.rest_energy(), p.hbar * p.omega);
}

// Spin residual in u = E - Mc^2, so that w = Mc^2 + E - C_s = (2Mc^2 - C_s) + u.
struct SpinShifted {
    double A;   // 2Mc^2 - C_s
    double K;   // hbar c omega sqrt(2M)
    double b;   // 2g / (hbar c)^2
    int n;

    explicit SpinShifted(const DiracParams& p, int n_)
        : A(2.0 * p.rest_energy() - p.C), K(energy_scale(p)), b(2.0 * p.g / (p.hbarc() * p.hbarc())), n(n_) {}

    double operator()(double u) const {
        const double w = A + u;
        if (w < 0.0) throw DomainError("spin residual: Mc^2 + E - C_s < 0");
        const double rad = 1.0 + b * w;
        if (rad < 0.0) throw DomainError("spin residual: 1 + 2 g gamma < 0");
        return u * std::sqrt(w) - K * (2.0 * n + 1.0 + 0.5 * std::sqrt(rad));
    }
    double derivative(double u) const {
        const double w = A + u;
        const double sw = std::sqrt(w);
        return sw + u / (2.0 * sw) - K * b / (4.0 * std::sqrt(1.0 + b * w));
    }
};

// Pseudospin residual in w = E - Mc^2 - C_ps.
struct PseudospinShifted {
    double B;  // 2Mc^2 + C_ps
    double K;
    double b;
    int n;

    explicit PseudospinShifted(const DiracParams& p, int n_)
        : B(2.0 * p.rest_energy() + p.C), K(energy_scale(p)), b(2.0 * p.g / (p.hbarc() * p.hbarc())), n(n_) {}

    double operator()(double w) const {
        if (w < 0.0) throw DomainError("pseudospin residual: E - Mc^2 - C_ps < 0");
        const double rad = 1.0 + b * w;
        if (rad < 0.0) throw DomainError("pseudospin residual: zeta_t is not real");
        return (w + B) * std::sqrt(w) - K * (2.0 * n + 1.0 + 0.5 * std::sqrt(rad));
    }
    double derivative(double w) const {
        const double sw = std::sqrt(w);
        return sw + (w + B) / (2.0 * sw) - K * b / (4.0 * std::sqrt(1.0 + b * w));
    }
};

// Klein-Gordon residual in u = E - Mc^2 (C = 0): u^2 (2Mc^2 + u) - K^2 P^2.
struct KleinGordonShifted {
    double A;  // 2Mc^2
    double K;
    double b;
    int n;

    explicit KleinGordonShifted(const DiracParams& p, int n_)
        : A(2.0 * p.rest_energy()), K(energy_scale(p)), b(2.0 * p.g / (p.hbarc() * p.hbarc())), n(n_) {}

    double P(double w) const {
        const double rad = 1.0 + b * w;
        if (rad < 0.0) throw DomainError("klein-gordon residual: radicand negative");
        return 2.0 * n + 1.0 + 0.5 * std::sqrt(rad);
    }
    double operator()(double u) const {
        const double w = A + u;
        const double pw = P(w);
        return u * u * w - K * K * pw * pw;
    }
    double derivative(double u) const {
        const double w = A + u;
        return 2.0 * u * w + u * u - K * K * P(w) * b / (2.0 * std::sqrt(1.0 + b * w));
    }
};

// sigma~(s) coefficients of the spin equation for arbitrary (possibly mapped)
// omega^2 and g; gamma may be negative here.
nu::HypergeometricForm spin_form_raw(double rest, double hbarc, double M, double omega_sq, double g,
                                     double C_s, double E, double& gamma) {
    gamma = (rest + E - C_s) / (hbarc * hbarc);
    const double nu_sq = 0.5 * M * omega_sq * gamma;
    const double A_sq = gamma * (rest - E);
    const double beta_spin = 0.5 * g * gamma;
    return {-nu_sq, -A_sq, -beta_spin};
}

double nu_residual_scaled(const nu::HypergeometricForm& form, double gamma, double hbarc, int n) {
    const nu::NUReduction red = nu::nu_reduce(form);
    return 2.0 * hbarc / std::sqrt(std::abs(gamma)) * nu::nu_eigencondition(red, n);
}

}  // namespace

DiracParams DiracParams::spin(double M, double omega, double g, double C_s) {
    DiracParams p;
    p.M = M;
    p.omega = omega;
    p.g = g;
    p.C = C_s;
    p.kappa = -1;
    p.branch = Symmetry::Spin;
    return p;
}

DiracParams DiracParams::pseudospin(double M, double omega, double g, double C_ps) {
    DiracParams p = spin(M, omega, g, C_ps);
    p.kappa = 1;
    p.branch = Symmetry::Pseudospin;
    return p;
}

void DiracParams::validate() const {
    for (double v : {M, omega, g, hbar, c, C}) {
        if (!std::isfinite(v)) throw DomainError("Dirac parameters must be finite");
    }
    if (!(M > 0.0) || !(omega > 0.0) || !(hbar > 0.0) || !(c > 0.0)) {
        throw DomainError("M, omega, hbar and c must be positive");
    }
    const int expected = branch == Symmetry::Spin ? -1 : 1;
    if (kappa != expected) {
        throw DomainError("only s-waves are supported: kappa must be -1 (spin) or +1 (pseudospin)");
    }
}

SpinDerived spin_derived(const DiracParams& p, double E) {
    p.validate();
    SpinDerived d;
    d.gamma = (p.rest_energy() + E - p.C) / (p.hbarc() * p.hbarc());
    if (!(d.gamma > 0.0)) throw DomainError("spin branch requires gamma = (Mc^2 + E - C_s)/(hbar c)^2 > 0");
    const double rad = 1.0 + 2.0 * p.g * d.gamma;
    if (rad < 0.0) throw DomainError("spin branch: 1 + 2 g gamma < 0");
    d.A_s_sq = d.gamma * (p.rest_energy() - E);
    d.beta_spin = 0.5 * p.g * d.gamma;
    d.nu = std::sqrt(0.5 * p.M * p.omega * p.omega * d.gamma);
    d.zeta = 0.5 * std::sqrt(rad);
    return d;
}

PseudospinDerived pseudospin_derived(const DiracParams& p, double E) {
    p.validate();
    const double w = E - p.rest_energy() - p.C;
    if (w < 0.0) throw DomainError("pseudospin bound states require E >= Mc^2 + C_ps");
    const double rad = 1.0 + 2.0 * p.g * w / (p.hbarc() * p.hbarc());
    if (rad < 0.0) throw DomainError("pseudospin branch: zeta_t is not real");
    PseudospinDerived d;
    d.gamma_t = -w / (p.hbarc() * p.hbarc());
    d.A_ps_sq = d.gamma_t * (p.rest_energy() + E);
    d.beta_t = 0.5 * p.g * d.gamma_t;
    d.nu_hat = std::sqrt(0.5 * p.M * p.omega * p.omega * std::abs(d.gamma_t));
    d.zeta_t = 0.5 * std::sqrt(rad);
    return d;
}

double spin_energy_residual(double E, int n, const DiracParams& p) {
    require_quantum_number(n);
    p.validate();
    const double w = p.rest_energy() + E - p.C;
    if (w < 0.0) throw DomainError("spin residual: Mc^2 + E - C_s < 0");
    const double rad = 2.0 * p.g * w / (p.hbarc() * p.hbarc()) + 1.0;
    if (rad < 0.0) throw DomainError("spin residual: 1 + 2 g gamma < 0");
    return (E - p.rest_energy()) * std::sqrt(w) - energy_scale(p) * (2.0 * n + 1.0 + 0.5 * std::sqrt(rad));
}

double solve_spin_binding(int n, const DiracParams& p, const SolveOptions& opts) {
    require_quantum_number(n);
    require_branch(p, Symmetry::Spin, "solve_spin_energy");
    const SpinShifted f(p, n);
    const double lower_u = std::max(0.0, p.C - 2.0 * p.rest_energy());
    const double upper_u = lower_u + scan_span(p, opts, p.rest_energy() + lower_u);
    return solve_above(f, [&f](double u) { return f.derivative(u); }, lower_u, upper_u, "solve_spin_energy").x;
}

EnergyLevel solve_spin_energy(int n, const DiracParams& p, const SolveOptions& opts) {
    const double u = solve_spin_binding(n, p, opts);
    const double E = p.rest_energy() + u;
    return {n, E, Branch::DiracSpin, std::abs(SpinShifted(p, n)(u))};
}

double pseudospin_energy_residual(double E, int n, const DiracParams& p) {
    require_quantum_number(n);
    p.validate();
    const double w = E - p.rest_energy() - p.C;
    if (w < 0.0) throw DomainError("pseudospin residual: E - Mc^2 - C_ps < 0");
    const double rad = 1.0 + 2.0 * p.g * w / (p.hbarc() * p.hbarc());
    if (rad < 0.0) throw DomainError("pseudospin residual: zeta_t is not real");
    return (E + p.rest_energy()) * std::sqrt(w) - energy_scale(p) * (2.0 * n + 1.0 + 0.5 * std::sqrt(rad));
}

EnergyLevel solve_pseudospin_energy(int n, const DiracParams& p, const SolveOptions& opts) {
    require_quantum_number(n);
    require_branch(p, Symmetry::Pseudospin, "solve_pseudospin_energy");
    const PseudospinShifted f(p, n);
    const double lower_energy = p.rest_energy() + p.C;
    const double upper_w = scan_span(p, opts, lower_energy);
    const Root r =
        solve_above(f, [&f](double w) { return f.derivative(w); }, 0.0, upper_w, "solve_pseudospin_energy");
    return {n, lower_energy + r.x, Branch::DiracPseudospin, r.residual};
}

double spin_upper_spinor(int n, const DiracParams& p, double E, double x) {
    require_quantum_number(n);
    require_positive_coordinate(x);
    require_branch(p, Symmetry::Spin, "spin_upper_spinor");
    const SpinDerived d = spin_derived(p, E);
    return detail::laguerre_state(n, d.nu, d.zeta, x);
}

double spin_lower_spinor(int n, const DiracParams& p, double E, double x) {
    require_quantum_number(n);
    require_positive_coordinate(x);
    require_branch(p, Symmetry::Spin, "spin_lower_spinor");
    const double denom = p.rest_energy() + E - p.C;
    if (std::abs(denom) < 1e-12) throw DegenerateEnergy("spin_lower_spinor: Mc^2 + E - C_s vanishes");
    const SpinDerived d = spin_derived(p, E);

    const double z = d.nu * x * x;
    const double envelope =
        std::exp(detail::laguerre_state_log_norm(n, d.nu, d.zeta) + (0.5 + d.zeta) * std::log(x) - 0.5 * z);
    const double L = specfun::laguerre(n, d.zeta, z);
    const double dL_dx = specfun::laguerre_derivative(n, d.zeta, z) * 2.0 * d.nu * x;
    const double bracket = ((2.0 * d.zeta - 1.0) / (2.0 * x) - d.nu * x) * L + dL_dx;
    return p.hbarc() * envelope * bracket / denom;
}

double pseudospin_lower_spinor(int n, const DiracParams& p, double E, double x) {
    require_quantum_number(n);
    require_positive_coordinate(x);
    require_branch(p, Symmetry::Pseudospin, "pseudospin_lower_spinor");
    const PseudospinDerived d = pseudospin_derived(p, E);
    if (!(d.nu_hat > 0.0)) throw DegenerateEnergy("pseudospin_lower_spinor: gamma_t vanishes");
    return detail::laguerre_state(n, d.nu_hat, d.zeta_t, x);
}

double klein_gordon_residual(double E, int n, const DiracParams& p) {
    require_quantum_number(n);
    p.validate();
    const double rest = p.rest_energy();
    const double rad = 1.0 + 2.0 * p.g * (rest + E) / (p.hbarc() * p.hbarc());
    if (rad < 0.0) throw DomainError("klein-gordon residual: radicand negative");
    const double P = 2.0 * n + 1.0 + 0.5 * std::sqrt(rad);
    const double K = energy_scale(p);
    return (E * E - rest * rest) * (E - rest) - K * K * P * P;
}

EnergyLevel klein_gordon_energy(int n, const DiracParams& p, const SolveOptions& opts) {
    require_quantum_number(n);
    require_branch(p, Symmetry::Spin, "klein_gordon_energy");
    if (p.C != 0.0) throw DomainError("klein_gordon_energy: requires C_s = 0 (V = S)");
    const KleinGordonShifted f(p, n);
    const double upper_u = scan_span(p, opts, p.rest_energy());
    const Root r = solve_above(f, [&f](double u) { return f.derivative(u); }, 0.0, upper_u, "klein_gordon_energy");
    return {n, p.rest_energy() + r.x, Branch::KleinGordon, r.residual};
}

nu::HypergeometricForm spin_form(const DiracParams& p, double E) {
    const SpinDerived d = spin_derived(p, E);
    return {-d.nu * d.nu, -d.A_s_sq, -d.beta_spin};
}

double spin_nu_residual(double E, int n, const DiracParams& p) {
    require_quantum_number(n);
    require_branch(p, Symmetry::Spin, "spin_nu_residual");
    double gamma = 0.0;
    const auto form = spin_form_raw(p.rest_energy(), p.hbarc(), p.M, p.omega * p.omega, p.g, p.C, E, gamma);
    if (!(gamma > 0.0)) throw DomainError("spin_nu_residual: gamma must be positive");
    return nu_residual_scaled(form, gamma, p.hbarc(), n);
}

double pseudospin_map_check(int n, const DiracParams& p) {
    require_quantum_number(n);
    require_branch(p, Symmetry::Pseudospin, "pseudospin_map_check");
    const double root = solve_pseudospin_energy(n, p).value;
    const double lower = p.rest_energy() + p.C;
    const double span = 2.0 * (root - lower);

    double worst = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double E = lower + span * k / 100.0;
        // E -> -E, C_s -> -C_ps, omega^2 -> -omega^2, g -> -g
        double gamma = 0.0;
        const auto form = spin_form_raw(p.rest_energy(), p.hbarc(), p.M, -p.omega * p.omega, -p.g, -p.C, -E, gamma);
        const double mapped = nu_residual_scaled(form, gamma, p.hbarc(), n);
        worst = std::max(worst, std::abs(mapped - pseudospin_energy_residual(E, n, p)));
    }
    return worst;
}

std::vector<double> nonrel_limit_check(int n, const DiracParams& p, std::span<const double> c_values) {
    require_branch(p, Symmetry::Spin, "nonrel_limit_check");
    if (p.C != 0.0) throw DomainError("nonrel_limit_check: requires C_s = 0");
    for (std::size_t i = 1; i < c_values.size(); ++i) {
        if (!(c_values[i] > c_values[i - 1])) throw DomainError("nonrel_limit_check: c values must increase");
    }
    const nonrel::OscillatorParams np{p.M, p.omega, p.g, p.hbar};
    const double target = nonrel::energy(n, np).value;

    std::vector<double> deviations;
    deviations.reserve(c_values.size());
    for (double c : c_values) {
        DiracParams q = p;
        q.c = c;
        deviations.push_back(std::abs(solve_spin_binding(n, q) - target));
    }
    return deviations;
}

}  // namespace isotonic::rel
