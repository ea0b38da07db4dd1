#include "landau/timeavg/symbol_bound.hpp"

#include <cmath>
#include <sstream>

#include "landau/core/errors.hpp"
#include "landau/timeavg/multiplier.hpp"
#include "sampler.hpp"

namespace landau {

std::vector<double> rho_power_coefficients(int k, int m1, double tau) {
  const double m = m1;
  const std::vector<double> base{tau * tau * tau * m * m / 3.0, tau * tau * m, tau};
  std::vector<double> out{1.0};
  for (int r = 0; r < k; ++r) {
    std::vector<double> next(out.size() + 2, 0.0);
    for (std::size_t a = 0; a < out.size(); ++a)
      for (std::size_t b = 0; b < 3; ++b) next[a + b] += out[a] * base[b];
    out = std::move(next);
  }
  return out;
}

namespace {

// (2k)! / (2k - j)! exactly.
std::int64_t falling(int n, int j) {
  std::int64_t r = 1;
  for (int i = 0; i < j; ++i) r *= n - i;
  return r;
}

// |d^j/d eta^j rho^k| with rho = tau u^2 + c, u = eta + tau m1 / 2, c = tau^3 m1^2 / 12 >= 0.
// Every term of the expansion in u has the sign of u^j, so summing magnitudes does not cancel
// (the expansion in powers of eta does, by a few digits at k = 6).
double abs_derivative(int k, int j, double tau, double c, double u) {
  const double au = std::abs(u);
  double acc = 0.0, binom = 1.0;
  for (int i = 0; i <= k; ++i) {
    if (i > 0) binom = binom * (k - i + 1) / i;
    if (2 * i >= j)
      acc += binom * std::pow(tau, i) * std::pow(c, k - i) * static_cast<double>(falling(2 * i, j)) *
             std::pow(au, 2 * i - j);
  }
  return acc;
}

}  // namespace

SymbolBoundReport symbol_bound_sample(int k_max, std::size_t samples, std::uint64_t seed, double slack) {
  if (k_max < 1 || k_max > 6) throw ConfigInvalid("symbol bound: k must lie in 1..6");
  SymbolBoundReport report;
  report.samples = samples;
  for (int k = 1; k <= k_max; ++k)
    for (int j = 0; j <= 2 * k; ++j) report.entries.push_back({k, j});

  const double log_tol = std::log1p(slack);
  detail::SymbolSampler sampler(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const detail::SymbolPoint p = sampler.next();
    const double tau = p.t - p.t0;
    const double u = p.eta1 + 0.5 * tau * p.m1;
    const double c = tau * tau * tau * p.m1 * p.m1 / 12.0;
    const double rho = tau * u * u + c;
    std::size_t e = 0;
    for (int k = 1; k <= k_max; ++k) {
      for (int j = 0; j <= 2 * k; ++j, ++e) {
        const double lhs = abs_derivative(k, j, tau, c, u);
        const double power = k - 0.5 * j;
        double log_ratio;
        if (lhs == 0.0) {
          log_ratio = -INFINITY;
        } else if (rho <= 0.0 && power > 0.0) {
          log_ratio = INFINITY;
        } else {
          const double log_bound = j * std::log(8.0) + std::log(static_cast<double>(falling(2 * k, j))) +
                                   (power > 0.0 ? power * std::log(rho) : 0.0);
          log_ratio = std::log(lhs) - log_bound;
        }
        SymbolBoundEntry& entry = report.entries[e];
        const double ratio = std::exp(log_ratio);
        if (ratio >= entry.max_ratio) {
          entry.max_ratio = ratio;
          entry.witness_m1 = p.m1;
          entry.witness_eta1 = p.eta1;
          entry.witness_t = p.t;
          entry.witness_t0 = p.t0;
        }
        report.max_ratio = std::max(report.max_ratio, ratio);
        if (log_ratio > log_tol) {
          std::ostringstream os;
          os.precision(17);
          os << "symbol bound violated at k=" << k << " j=" << j << " m1=" << p.m1 << " eta1=" << p.eta1
             << " t=" << p.t << " t0=" << p.t0 << " (ratio " << ratio << ")";
          throw BoundViolation(os.str());
        }
      }
    }
  }
  return report;
}

}  // namespace landau
