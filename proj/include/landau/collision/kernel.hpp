#pragma once

#include <array>

namespace landau {

// Kernel exponent gamma of the hard-potential Landau kernel; [0, 1] only.
struct HardPotential {
  double gamma = 1.0;

  HardPotential() = default;
  explicit HardPotential(double g);
};

// a_ij(z) = (delta_ij |z|^2 - z_i z_j) |z|^gamma, indices 0-based. Zero at z = 0 for every gamma.
double kernel_aij(const std::array<double, 3>& z, double gamma, int i, int j);

// Flat index of the symmetric pair (i, j) in {00, 01, 02, 11, 12, 22}.
constexpr int sym_index(int i, int j) {
  if (i > j) {
    const int t = i;
    i = j;
    j = t;
  }
  return i == 0 ? j : (i == 1 ? 2 + j : 5);
}

}  // namespace landau
