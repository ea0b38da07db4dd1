#pragma once

#include <array>

#include "landau/collision/kernel.hpp"
#include "landau/core/fields.hpp"

namespace landau {

using VField3 = std::array<VelocityField, 3>;
using VField33 = std::array<std::array<VelocityField, 3>, 3>;

// Convolution coefficients of g (indices 0-based; rho and lambda use off-diagonal entries only):
//   a      = |v|^gamma * (sqrt(mu) g)
//   A_j    = |v|^gamma * (sqrt(mu) d_j g)
//   B_j    = |v|^gamma * (v_j sqrt(mu) g)
//   M_ij   = |v|^gamma * ((delta_ij |v|^2 - v_i v_j) sqrt(mu) g)
//   rho_ij = abar_ij-type moment combination of sqrt(mu) d g (see coefficients.cpp)
//   lambda_ij = v_i (|v|^gamma * (v_j^2 G)) - v_j (|v|^gamma * (v_i v_j G)),  G = sqrt(mu) g
// plus the direct kernel convolutions abar_ij(sqrt(mu) g), abar_ij(sqrt(mu) d_j g),
// abar_ij(v_j sqrt(mu) g).
struct ConvCoefficients {
  GridSpec grid;
  double gamma = 1.0;
  VelocityField a;
  VField3 A, B;
  VField33 M, rho, lambda;
  VField33 abar_g, abar_dg, abar_vg;
};

ConvCoefficients compute_coefficients(const VelocityField& g, HardPotential gamma);

}  // namespace landau
