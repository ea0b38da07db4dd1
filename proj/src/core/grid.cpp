#include "landau/core/grid.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "landau/core/errors.hpp"

namespace landau {

namespace {

bool power_of_two(int n) { return n >= 4 && (n & (n - 1)) == 0; }

}  // namespace

void GridSpec::validate() const {
  std::ostringstream err;
  if (!power_of_two(nx)) err << "nx must be a power of two >= 4 (got " << nx << "); ";
  if (!power_of_two(nv)) err << "nv must be a power of two >= 4 (got " << nv << "); ";
  if (!(vmax >= 6.0) || !std::isfinite(vmax)) err << "vmax must be >= 6 (got " << vmax << "); ";
  if (spatial_dims != 1 && spatial_dims != 3) err << "spatial_dims must be 1 or 3; ";
  if (!err.str().empty()) throw ConfigInvalid("grid: " + err.str());
}

double GridSpec::k0() const { return std::numbers::pi / vmax; }

std::size_t GridSpec::x_size() const {
  std::size_t n = 1;
  for (int d = 0; d < spatial_dims; ++d) n *= static_cast<std::size_t>(nx);
  return n;
}

double GridSpec::v_weight() const { return std::pow(dv(), 3); }

double GridSpec::x_weight() const { return std::pow(2.0 * std::numbers::pi / nx, spatial_dims); }

double GridSpec::v_volume() const { return std::pow(2.0 * vmax, 3); }

double GridSpec::x_volume() const { return std::pow(2.0 * std::numbers::pi, spatial_dims); }

int signed_mode(int k, int n) {
  if (2 * k == n) return 0;
  return 2 * k < n ? k : k - n;
}

int dealias_cutoff(int n) { return n / 3; }

nlohmann::json to_json(const GridSpec& g) {
  return {{"nx", g.nx}, {"nv", g.nv}, {"vmax", g.vmax}, {"spatial_dims", g.spatial_dims}};
}

GridSpec grid_from_json(const nlohmann::json& j, GridSpec g) {
  if (!j.is_object()) throw ConfigInvalid("grid: expected an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "nx") g.nx = value.get<int>();
    else if (key == "nv") g.nv = value.get<int>();
    else if (key == "vmax") g.vmax = value.get<double>();
    else if (key == "spatial_dims") g.spatial_dims = value.get<int>();
    else throw ConfigInvalid("grid: unknown key '" + key + "'");
  }
  g.validate();
  return g;
}

}  // namespace landau
