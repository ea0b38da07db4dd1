#include "landau/collision/estimates.hpp"

#include <cmath>
#include <random>

#include "landau/collision/coefficients.hpp"
#include "landau/collision/gamma.hpp"
#include "landau/norms/norms.hpp"

namespace landau {

VelocityField random_profile(const GridSpec& grid, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<std::array<int, 3>> powers;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 3; ++b)
      for (int c = 0; a + b + c <= 3; ++c) powers.push_back({a, b, c});
  std::vector<double> coef(powers.size());
  for (auto& c : coef) c = normal(rng);
  const VelocityField p = sample_v(grid, [&](const double* v) {
    double s = 0.0;
    for (std::size_t k = 0; k < powers.size(); ++k)
      s += coef[k] * std::pow(v[0], powers[k][0]) * std::pow(v[1], powers[k][1]) * std::pow(v[2], powers[k][2]);
    return cplx(s, 0.0);
  });
  return multiply_weight(p, Weight::sqrt_mu());
}

EmpiricalConstant coercivity_constant(const GridSpec& grid, HardPotential gamma, int count, std::uint64_t seed) {
  EmpiricalConstant out;
  for (int k = 0; k < count; ++k) {
    const VelocityField h = random_profile(grid, seed + static_cast<std::uint64_t>(k));
    const double q = inner(linearized_L(h, gamma), h).real();
    const double n = l2_norm(h);
    const double psi = psi_norm(h, gamma.gamma);
    const double r = psi * psi / (q + n * n);
    out.ratios.push_back(r);
    out.value = std::max(out.value, r);
  }
  return out;
}

EmpiricalConstant trilinear_constant(const GridSpec& grid, HardPotential gamma, int count, std::uint64_t seed) {
  EmpiricalConstant out;
  for (int k = 0; k < count; ++k) {
    const std::uint64_t s = seed + 3 * static_cast<std::uint64_t>(k);
    const VelocityField g = random_profile(grid, s), h = random_profile(grid, s + 1), w = random_profile(grid, s + 2);
    const double num = std::abs(inner(gamma_direct(g, h, gamma).value, w));
    const double r = num / (l2_norm(g) * psi_norm(h, gamma.gamma) * psi_norm(w, gamma.gamma));
    out.ratios.push_back(r);
    out.value = std::max(out.value, r);
  }
  return out;
}

double coefficient_bound_constant(const VelocityField& g, HardPotential gamma) {
  const ConvCoefficients c = compute_coefficients(g, gamma);
  const VelocityField w = multiply_weight(c.a, Weight::bracket(-gamma.gamma));
  return w.data().abs().maxCoeff() / l2_norm(g);
}

}  // namespace landau
