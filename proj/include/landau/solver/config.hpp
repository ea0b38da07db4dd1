#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "landau/core/grid.hpp"

namespace landau {

enum class SplitScheme { strang, lie };
enum class CollisionIntegrator { rk2, rk4 };

// Initial-data descriptor. f0 = eps0 * p / ||p||_{L1m L2v} with p one of
//   cos_bump:   cos(x1) exp(-|v|^2 / (2 width^2))
//   two_mode:   (cos(x1) + cos(2 x1)) exp(-|v|^2 / (2 width^2))
//   null_space: (1 + cos(x1) / 2) sqrt(mu) (1 + v1 + |v|^2)
struct ProfileSpec {
  std::string kind = "cos_bump";
  double width = 1.0;
};

// Harness settings used by the smoothing command.
struct HarnessSpec {
  int max_order = 4;   // |alpha| + |beta|
  int k_max = 3;       // M^k rows
  double t0 = 0.05;    // base time of M
};

struct SimConfig {
  // One spatial dimension by default: the 3D state at nx = 16, nv = 32 is 2^27 points.
  GridSpec grid = [] {
    GridSpec g;
    g.spatial_dims = 1;
    return g;
  }();
  double gamma = 1.0;
  double eps0 = 1e-3;
  double t_end = 1.0;
  double dt = 0.02;
  double c_cfl = 0.4;
  ProfileSpec profile;
  SplitScheme split_scheme = SplitScheme::strang;
  CollisionIntegrator collision_integrator = CollisionIntegrator::rk2;
  bool transport = true;
  bool collision = true;
  // Observer times in (0, t_end]; empty means 16 equispaced times from 0.1 to t_end.
  std::vector<double> observe_times;
  HarnessSpec harness;

  // ConfigInvalid on any violated invariant (grid, gamma in [0, 1], 0 < t_end <= 1, ...).
  void validate() const;
  std::vector<double> resolved_observe_times() const;
};

nlohmann::json to_json(const SimConfig& c);
// Missing keys take their defaults; unknown keys are ConfigInvalid.
SimConfig config_from_json(const nlohmann::json& j);
SimConfig load_config(const std::string& path);
// SHA-256 of the canonical (sorted, compact) dump of to_json(c).
std::string config_hash(const SimConfig& c);
std::string sha256_hex(const void* data, std::size_t size);

}  // namespace landau
