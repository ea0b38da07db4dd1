#pragma once

#include <cstdint>
#include <vector>

namespace landau {

// Coefficients of rho^k as a polynomial in eta1 (index = power), for fixed m1 and tau = t - t0.
std::vector<double> rho_power_coefficients(int k, int m1, double tau);

struct SymbolBoundEntry {
  int k = 0;
  int j = 0;
  double max_ratio = 0.0;  // max |d^j rho_k| / (8^j (2k)!/(2k-j)! rho_{k-j/2})
  int witness_m1 = 0;
  double witness_eta1 = 0.0;
  double witness_t = 0.0;
  double witness_t0 = 0.0;
};

struct SymbolBoundReport {
  std::size_t samples = 0;  // per (k, j)
  std::vector<SymbolBoundEntry> entries;
  double max_ratio = 0.0;
};

// Samples m1 in [-32, 32] (integers), eta1 in [-50, 50], t0 in (0, 1/2], t in [t0, 1] and checks
//   |d_eta^j rho_k| <= 8^j (2k)!/(2k-j)! rho_{k-j/2}
// for 1 <= k <= k_max, 0 <= j <= 2k, in log form with relative slack `slack`. k_max <= 6
// (ConfigInvalid otherwise). Throws BoundViolation naming the witness on failure.
SymbolBoundReport symbol_bound_sample(int k_max, std::size_t samples, std::uint64_t seed, double slack = 1e-12);

}  // namespace landau
