#pragma once

#include <array>
#include <span>

// Published spin- and pseudospin-symmetric s-wave eigenvalues of the isotonic
// oscillator, M = omega = 1 fm^-1, hbar = c = 1, n = 0..10. Seven decimals as printed.

namespace isotonic::tables {

inline constexpr int rows = 11;

struct Column {
    double C = 0.0;  // C_s or C_ps
    double g = 0.0;
    std::array<double, rows> energies{};
};

std::span<const Column> spin_table();
std::span<const Column> pseudospin_table();

}  // namespace isotonic::tables
