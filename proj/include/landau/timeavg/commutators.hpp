#pragma once

#include <cstdint>
#include <string>

#include "landau/core/fields.hpp"

namespace landau {

struct CommutatorReport {
  std::string name;
  std::size_t cases = 0;
  double max_relative_error = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

// [M, d_t + v.d_x] g against d_{v1}^2 g. The [M, d_t] part uses the analytic t-derivative of the
// symbol; [M, v.d_x] is evaluated with the discrete multiplication by v. Relative L2 error.
double transport_commutator_error(const PhaseField& g, double t, double t0);

// [M, v wedge d_v] g evaluated as M(W g) - W(M g), against the closed form of the right side:
//   component 1: 0
//   component 2:  (2 tau d_{v1} + tau^2 d_{x1}) d_{v3} g
//   component 3: -(2 tau d_{v1} + tau^2 d_{x1}) d_{v2} g
// Error is max_k ||lhs_k - rhs_k|| / ||rhs|| (absolute when the right side vanishes).
double wedge_commutator_error(const PhaseField& g, double t, double t0);

// Band-limited in x (modes up to the 2/3 cutoff), mu times a random quadratic in v. The mu decay
// keeps the face values on [-8, 8)^3 at rounding level.
PhaseField smooth_random_field(const GridSpec& grid, std::uint64_t seed);

// Runs the identity on `count` random fields at random (t0, t).
CommutatorReport commutator_transport_check(const GridSpec& grid, int count, std::uint64_t seed,
                                            double threshold = 1e-9);
CommutatorReport commutator_wedge_check(const GridSpec& grid, int count, std::uint64_t seed,
                                        double threshold = 1e-9);

}  // namespace landau
