#pragma once

#include <cstdint>
#include <vector>

#include "landau/collision/kernel.hpp"
#include "landau/core/fields.hpp"

namespace landau {

// sqrt(mu) * p(v) with p a cubic polynomial whose coefficients are drawn from a seeded normal
// distribution. The coefficients depend only on the seed, so the same function can be sampled
// on several grids. The result carries a Gaussian-decay certificate.
VelocityField random_profile(const GridSpec& grid, std::uint64_t seed);

struct EmpiricalConstant {
  double value = 0.0;               // the fitted (largest) ratio
  std::vector<double> ratios;       // one per test function
};

// C_1 = max_h ||psi h||^2 / (<L h, h> + ||h||^2) over `count` random profiles.
EmpiricalConstant coercivity_constant(const GridSpec& grid, HardPotential gamma, int count, std::uint64_t seed);

// max |<Gamma(g, h), w>| / (||g|| psi(h) psi(w)) over `count` random triples.
EmpiricalConstant trilinear_constant(const GridSpec& grid, HardPotential gamma, int count, std::uint64_t seed);

// max_v |a_g(v)| / (<v>^gamma ||g||).
double coefficient_bound_constant(const VelocityField& g, HardPotential gamma);

}  // namespace landau
