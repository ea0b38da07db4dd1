#pragma once

#include <cstddef>
#include <json.hpp>

namespace landau {

// Discrete phase space: x on the torus (2 pi periodic, 1 or 3 dims), v on the box [-R, R)^3.
struct GridSpec {
  int nx = 16;
  int nv = 32;
  double vmax = 8.0;
  int spatial_dims = 3;

  void validate() const;

  double dv() const { return 2.0 * vmax / nv; }
  // Fundamental v-frequency pi/R.
  double k0() const;
  double v_coord(int i) const { return -vmax + dv() * i; }

  std::size_t v_size() const { return static_cast<std::size_t>(nv) * nv * nv; }
  std::size_t x_size() const;
  std::size_t size() const { return x_size() * v_size(); }

  double v_weight() const;
  double x_weight() const;
  double v_volume() const;
  double x_volume() const;

  bool operator==(const GridSpec&) const = default;
};

// Signed mode number of DFT index k on n points. The Nyquist index maps to 0 so that
// derivative and multiplier symbols stay odd/even and real fields stay real.
int signed_mode(int k, int n);

// Largest mode kept by the 2/3 truncation rule.
int dealias_cutoff(int n);

nlohmann::json to_json(const GridSpec& g);
// Missing keys keep the values of `base`.
GridSpec grid_from_json(const nlohmann::json& j, GridSpec base = {});

}  // namespace landau
