#pragma once

#include <random>

namespace landau::detail {

// Random symbol arguments: m1 integer in [-32, 32], eta1 in [-50, 50], t0 in (0, 1/2], t in [t0, 1].
struct SymbolPoint {
  int m1;
  double eta1, t0, t;
};

class SymbolSampler {
 public:
  explicit SymbolSampler(std::uint64_t seed) : rng_(seed) {}

  SymbolPoint next() {
    SymbolPoint p;
    p.m1 = std::uniform_int_distribution<int>(-32, 32)(rng_);
    p.eta1 = std::uniform_real_distribution<double>(-50.0, 50.0)(rng_);
    // (0, 1/2]: reflect the half-open [0, 1/2) draw.
    p.t0 = 0.5 - std::uniform_real_distribution<double>(0.0, 0.5)(rng_);
    p.t = std::uniform_real_distribution<double>(p.t0, 1.0)(rng_);
    return p;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace landau::detail
