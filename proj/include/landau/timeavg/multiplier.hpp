#pragma once

#include <cstdint>
#include <functional>

#include "landau/core/fields.hpp"

namespace landau {

// Time-average multiplier M at time t with base time t0, raised to the power sigma.
struct MSpec {
  double t = 1.0;
  double t0 = 0.5;
  double sigma = 1.0;

  // t0 in (0, 1/2], t0 <= t <= 1, sigma >= 0; ConfigInvalid otherwise.
  void validate() const;
};

// rho(m1, eta1) = tau eta1^2 + tau^2 m1 eta1 + tau^3 m1^2 / 3 with tau = t - t0.
double m_symbol(int m1, double eta1, double t, double t0);
// Real symbols of Lambda_1, Lambda_2, with Lambda_1^2 + Lambda_2^2 = M:
//   lambda_1 = (tau^{1/2} eta1 + tau^{3/2} m1) / 2,  lambda_2 = sqrt(3)/6 (3 tau^{1/2} eta1 + tau^{3/2} m1).
double lambda_symbol(int which, int m1, double eta1, double t, double t0);

// Multiplies every mode by fn(m1, eta1), where m1 is the signed x1 mode and eta1 = k0 times
// the signed v1 mode. Returns the result in fourier_xv.
PhaseField apply_symbol(const PhaseField& f, const std::function<double(int, double)>& fn);

PhaseField apply_M_power(const PhaseField& f, const MSpec& spec);
// which in {1, 2}.
PhaseField apply_lambda(const PhaseField& f, int which, double t, double t0);
// Lambda_1^n1 Lambda_2^n2 f.
PhaseField apply_lambda_power(const PhaseField& f, int n1, int n2, double t, double t0);
// ||Lambda^l f||^2 = sum over index words of length l = sum_n1 C(l, n1) ||Lambda_1^n1 Lambda_2^{l-n1} f||^2.
double lambda_tensor_norm2(const PhaseField& f, int ell, double t, double t0);

// Two-sided comparison c0 (tau eta^2 + tau^3 m^2) <= rho <= c0^{-1} (tau eta^2 + tau^3 m^2).
// In (s, u) = (tau^{1/2} eta, tau^{3/2} m) the symbol is the form [[1, 1/2], [1/2, 1/3]]; its
// eigenvalues (4 -+ sqrt(13))/6 are the sharp constants.
struct EllipticityConstants {
  double c0 = 0.0;
  double c0_inverse = 0.0;
  double sharp_upper = 0.0;
};
EllipticityConstants ellipticity_constant();

struct EllipticitySample {
  std::size_t samples = 0;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  double lower = 0.0;  // c0 - slack
  double upper = 0.0;  // 1/c0 + slack
  bool pass = false;
};
// Ratio rho / (tau eta^2 + tau^3 m^2) on random (m1, eta1, t0, t); see symbol_bound.hpp for the
// sampling ranges.
EllipticitySample ellipticity_sample(std::size_t samples, std::uint64_t seed, double slack = 1e-12);

}  // namespace landau
