#include "landau/timeavg/multiplier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "landau/core/errors.hpp"
#include "sampler.hpp"

namespace landau {

void MSpec::validate() const {
  if (!(t0 > 0.0 && t0 <= 0.5)) throw ConfigInvalid("M: t0 must lie in (0, 1/2]");
  if (!(t >= t0 && t <= 1.0)) throw ConfigInvalid("M: t must lie in [t0, 1]");
  if (!(sigma >= 0.0)) throw ConfigInvalid("M: sigma must be nonnegative");
}

double m_symbol(int m1, double eta1, double t, double t0) {
  const double tau = t - t0;
  const double m = m1;
  return tau * eta1 * eta1 + tau * tau * m * eta1 + tau * tau * tau * m * m / 3.0;
}

double lambda_symbol(int which, int m1, double eta1, double t, double t0) {
  const double tau = t - t0;
  const double s = std::sqrt(tau) * eta1, u = tau * std::sqrt(tau) * m1;
  if (which == 1) return 0.5 * (s + u);
  if (which == 2) return std::sqrt(3.0) / 6.0 * (3.0 * s + u);
  throw std::invalid_argument("Lambda index must be 1 or 2");
}

PhaseField apply_symbol(const PhaseField& f, const std::function<double(int, double)>& fn) {
  const GridSpec& g = f.grid();
  PhaseField w = transform(f, Repr::fourier_xv);
  Eigen::ArrayXcd d = w.data();
  const std::size_t nv = g.v_size();
  // The symbol depends on (x1 mode, v1 mode) only.
  std::vector<double> eta(static_cast<std::size_t>(g.nv));
  for (int k = 0; k < g.nv; ++k) eta[static_cast<std::size_t>(k)] = g.k0() * signed_mode(k, g.nv);
  const std::size_t block = nv / static_cast<std::size_t>(g.nv);
  for (std::size_t ix = 0; ix < g.x_size(); ++ix) {
    const int m1 = signed_mode(x_index(g, ix, 0), g.nx);
    for (int k = 0; k < g.nv; ++k) {
      const double s = fn(m1, eta[static_cast<std::size_t>(k)]);
      d.segment(static_cast<Eigen::Index>(ix * nv + static_cast<std::size_t>(k) * block),
                static_cast<Eigen::Index>(block)) *= s;
    }
  }
  return PhaseField::from_data(g, Repr::fourier_xv, std::move(d));
}

PhaseField apply_M_power(const PhaseField& f, const MSpec& spec) {
  spec.validate();
  if (spec.sigma == 0.0) return transform(f, Repr::fourier_xv);
  return apply_symbol(f, [&](int m1, double eta1) {
    const double r = m_symbol(m1, eta1, spec.t, spec.t0);
    return spec.sigma == 1.0 ? r : std::pow(std::max(r, 0.0), spec.sigma);
  });
}

PhaseField apply_lambda(const PhaseField& f, int which, double t, double t0) {
  return apply_lambda_power(f, which == 1 ? 1 : 0, which == 2 ? 1 : 0, t, t0);
}

PhaseField apply_lambda_power(const PhaseField& f, int n1, int n2, double t, double t0) {
  if (n1 < 0 || n2 < 0) throw std::invalid_argument("Lambda powers must be nonnegative");
  return apply_symbol(f, [&](int m1, double eta1) {
    return std::pow(lambda_symbol(1, m1, eta1, t, t0), n1) * std::pow(lambda_symbol(2, m1, eta1, t, t0), n2);
  });
}

double lambda_tensor_norm2(const PhaseField& f, int ell, double t, double t0) {
  double total = 0.0, binom = 1.0;
  for (int n1 = 0; n1 <= ell; ++n1) {
    total += binom * std::pow(l2_norm(apply_lambda_power(f, n1, ell - n1, t, t0)), 2);
    binom = binom * (ell - n1) / (n1 + 1);
  }
  return total;
}

EllipticityConstants ellipticity_constant() {
  // Eigenvalues of [[1, 1/2], [1/2, 1/3]]: trace 4/3, determinant 1/12.
  const double root = std::sqrt(13.0);
  EllipticityConstants c;
  c.c0 = (4.0 - root) / 6.0;
  c.c0_inverse = 1.0 / c.c0;
  c.sharp_upper = (4.0 + root) / 6.0;
  return c;
}

EllipticitySample ellipticity_sample(std::size_t samples, std::uint64_t seed, double slack) {
  const EllipticityConstants c = ellipticity_constant();
  EllipticitySample out;
  out.lower = c.c0 - slack;
  out.upper = c.c0_inverse + slack;
  out.min_ratio = INFINITY;
  out.max_ratio = -INFINITY;
  detail::SymbolSampler sampler(seed);
  while (out.samples < samples) {
    const detail::SymbolPoint p = sampler.next();
    const double tau = p.t - p.t0;
    const double base = tau * p.eta1 * p.eta1 + tau * tau * tau * p.m1 * p.m1;
    if (base == 0.0) continue;  // t = t0 or (m1, eta1) = 0: both sides vanish
    const double r = m_symbol(p.m1, p.eta1, p.t, p.t0) / base;
    out.min_ratio = std::min(out.min_ratio, r);
    out.max_ratio = std::max(out.max_ratio, r);
    ++out.samples;
  }
  out.pass = out.min_ratio >= out.lower && out.max_ratio <= out.upper;
  return out;
}

}  // namespace landau
