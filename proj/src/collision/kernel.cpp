#include "landau/collision/kernel.hpp"

#include <cmath>
#include <string>

#include "landau/core/errors.hpp"

namespace landau {

HardPotential::HardPotential(double g) : gamma(g) {
  if (!(g >= 0.0 && g <= 1.0))
    throw ConfigInvalid("gamma must lie in [0, 1] (got " + std::to_string(g) + ")");
}

double kernel_aij(const std::array<double, 3>& z, double gamma, int i, int j) {
  const double r2 = z[0] * z[0] + z[1] * z[1] + z[2] * z[2];
  const double proj = (i == j ? r2 : 0.0) - z[static_cast<std::size_t>(i)] * z[static_cast<std::size_t>(j)];
  if (gamma == 0.0) return proj;
  if (r2 == 0.0) return 0.0;
  return proj * std::pow(r2, 0.5 * gamma);
}

}  // namespace landau
