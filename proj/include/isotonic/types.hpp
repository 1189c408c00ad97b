#pragma once

#include <string_view>

namespace isotonic {

enum class Branch {
    NonrelIsotonic,
    Harmonic1D,
    Oscillator3D,
    DiracSpin,
    DiracPseudospin,
    KleinGordon,
};

std::string_view to_string(Branch b);

/// One bound-state eigenvalue. `residual` is zero for closed forms and the final
/// |f(E)| of the energy equation for transcendental branches.
struct EnergyLevel {
    int n = 0;
    double value = 0.0;
    Branch branch = Branch::NonrelIsotonic;
    double residual = 0.0;
};

}  // namespace isotonic
