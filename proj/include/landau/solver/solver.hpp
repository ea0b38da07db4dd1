#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "landau/collision/engine.hpp"
#include "landau/core/fields.hpp"
#include "landau/solver/config.hpp"

namespace landau {

// Moments of F = mu + sqrt(mu) f over the phase space, and the norms used for blow-up detection.
struct Diagnostics {
  double t = 0.0;
  double mass = 0.0;
  std::array<double, 3> momentum{};
  double energy = 0.0;
  double l2 = 0.0;
  double l1m = 0.0;
  double min_F = 0.0;  // positivity monitor
};

struct SimState {
  double t = 0.0;
  PhaseField f;  // physical representation, real values
  std::vector<Diagnostics> diagnostics;
};

// Relative drift of the conserved quantities between two diagnostics, divided by the elapsed
// time. Mass and energy are normalized by their initial totals, momentum by sqrt(mass * energy).
struct ConservationDrift {
  double mass = 0.0;
  double momentum = 0.0;
  double energy = 0.0;
  double max() const { return std::max({mass, momentum, energy}); }
};
ConservationDrift conservation_drift(const Diagnostics& a, const Diagnostics& b);

constexpr double kPositivityTolerance = 1e-10;

// Time integrator for d_t f + v.d_x f + L f = Gamma(f, f).
//
// Outer splitting (Strang or Lie) between exact transport, f^(m, v) <- e^{-i m.v dt} f^(m, v), and
// collision. The collision right side is S f + N(f) with S f = Gamma(sqrt(mu), f) stiff and linear and
// N(f) = Gamma(f, sqrt(mu) + f). Each collision stage solves the affine problem y' = S y + c with
// c a frozen value of N, using damped second-order Runge-Kutta-Chebyshev (stage count from a
// power-iteration estimate of the spectral radius of S). The forcing is refreshed RK2-style
// (midpoint) or RK4-style. Freezing N rather than splitting it off keeps the null space of L
// stationary: there S y0 + N(y0) = O(|y0|^2). N's output is truncated to the 2/3 band in x.
class Solver {
 public:
  explicit Solver(SimConfig config);

  const SimConfig& config() const { return config_; }

  // f0 = eps0 p / ||p||_{L1m L2v}. ConfigInvalid if the CFL bound or the norm bound fails.
  SimState init() const;
  // Advances by dt in place. BlowupDetected if a norm exceeds 1e6 eps0 or is not finite.
  void step(SimState& s, double dt) const;
  void transport(PhaseField& f, double dt) const;
  void collide(PhaseField& f, double dt) const;

  Diagnostics diagnose(const PhaseField& f, double t) const;

  // Spectral radius estimate of S and the RKC stage count used for a step dt.
  double stiff_radius() const { return rho_est_; }
  int rkc_stages(double dt) const;
  // max over x and v of the largest eigenvalue of abar(sqrt(mu) f).
  double max_diffusion(const PhaseField& f) const;

  using Observer = std::function<void(const SimState&)>;
  // Steps to t_end, shortening steps to land exactly on the observer times; the observer also
  // sees the initial state.
  SimState run(const Observer& observer = {}) const;

 private:
  SimConfig config_;
  std::shared_ptr<const CollisionEngine> engine_;
  double rho_est_ = 0.0;

  PhaseField profile() const;
  std::vector<Eigen::ArrayXd> nonstiff(const std::vector<Eigen::ArrayXd>& f) const;
  // Solution at time h of y' = S y + c, y(0) = y0.
  std::vector<Eigen::ArrayXd> affine(const std::vector<Eigen::ArrayXd>& y0, const std::vector<Eigen::ArrayXd>& c,
                                     double h) const;
};

}  // namespace landau
