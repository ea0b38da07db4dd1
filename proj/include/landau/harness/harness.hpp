#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "landau/core/fields.hpp"

namespace landau {

struct DerivativeIndex {
  std::array<int, 3> alpha{};
  std::array<int, 3> beta{};

  int x_order() const { return alpha[0] + alpha[1] + alpha[2]; }
  int v_order() const { return beta[0] + beta[1] + beta[2]; }
  int order() const { return x_order() + v_order(); }
};

// Every (alpha, beta) with |alpha| + |beta| <= max_order; alpha is restricted to the active x axes.
std::vector<DerivativeIndex> derivative_set(int max_order, int spatial_dims);

struct RecordRequest {
  std::vector<DerivativeIndex> derivatives;
  int k_max = 3;        // M^k rows for k = 0..k_max
  double t0 = 0.05;     // base time of M; rows are skipped while t < t0
  double gamma = 1.0;   // weight exponent of the psi norm
};

constexpr int kMaxRecordOrder = 6;

struct RegularityRecord {
  double t = 0.0;
  std::vector<DerivativeIndex> derivatives;
  std::vector<double> norms;           // ||d_x^alpha d_v^beta f||_{L^2}, parallel to derivatives
  std::vector<double> mk_h20;          // ||M^k f||_{(2,0)}, k = 0..k_max; empty when t < t0
  std::vector<double> mk_psi;          // psi(M^k f)
  std::vector<double> shell_spectrum;  // max |f^| on shell s = floor(|m| + |eta| / k0)
};

// All norms by Parseval on the fourier_xv coefficients. Deterministic: pairwise sums only.
// ResolutionExceeded if an order exceeds kMaxRecordOrder, k_max does, or alpha uses an
// inactive x axis.
RegularityRecord record(const PhaseField& f, double t, const RecordRequest& request);

// Largest shell index recorded: every dealiased mode lies in a shell <= this value.
int max_shell(const GridSpec& g);

// t~ = min(1, t).
inline double t_tilde(double t) { return t < 1.0 ? t : 1.0; }

enum class TimeWeight {
  analytic,  // t~^{(3/2)|alpha| + (1/2)|beta|}
  gevrey,    // t~^{(3/2)(|alpha| + |beta|)}
};
double time_weight(TimeWeight w, const DerivativeIndex& d, double t);

struct SmoothingFit {
  double sigma_fit = 0.0;
  double C_fit = 0.0;
  double c0 = 0.0;  // intercept
  double r2 = 0.0;
  bool degenerate = false;       // every S vanished; the fit is not defined
  std::size_t points = 0;
  std::vector<DerivativeIndex> derivatives;
  std::vector<double> S;         // sup_t weight * norm, parallel to derivatives
};

// Least squares of log S(alpha, beta) = n log C + sigma log n! + c0, n = |alpha| + |beta|, over
// every index with S > 0. Records at t <= 0 are ignored. InsufficientData with fewer than 8
// usable records, fewer than 3 distinct orders, or fewer than 3 positive S values.
SmoothingFit fit_smoothing(const std::vector<RegularityRecord>& records, TimeWeight w = TimeWeight::analytic);
// The same regression on given S values.
SmoothingFit fit_factorial(const std::vector<DerivativeIndex>& d, const std::vector<double>& S);

struct SpectrumFit {
  double slope = 0.0;  // d log(max |f^|) / d shell
  double r2 = 0.0;
  std::size_t shells = 0;
  bool analytic = false;  // slope <= -0.1 and r2 >= 0.9
};
// Natural-log fit over shells whose value exceeds 1e-13. InsufficientData with < 3 such shells.
SpectrumFit spectrum_decay(const RegularityRecord& r);

// Synthetic heat flow e^{t Delta_v} applied to an x-independent e^{-|v|^2/2}, and its closed-form
// derivative norms ||d_v^beta f(t)||^2 = vol_x prod_i Gamma(beta_i + 1/2) / (1 + 2t)^{beta_i + 1/2}
// (the Fourier transform of the data is taken on R^3, which the box resolves at vmax >= 8).
PhaseField heat_flow_field(const GridSpec& g, double t);
double heat_flow_norm(const GridSpec& g, const std::array<int, 3>& beta, double t);

struct HeatOracleReport {
  GridSpec grid;
  double max_norm_error = 0.0;  // relative, over all records and beta
  SmoothingFit fit;             // from the recorded fields
  SmoothingFit exact_fit;       // from the closed-form values
  double C_relative_error = 0.0;
};
// v-derivatives only, |beta| <= max_order, at the given times.
HeatOracleReport heat_flow_oracle(const GridSpec& g, int max_order, const std::vector<double>& times);

}  // namespace landau
