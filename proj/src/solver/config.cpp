#include "landau/solver/config.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "landau/core/errors.hpp"

namespace landau {

void SimConfig::validate() const {
  grid.validate();
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw ConfigInvalid("gamma must lie in [0, 1]");
  if (!(eps0 >= 0.0) || !std::isfinite(eps0)) throw ConfigInvalid("eps0 must be a nonnegative number");
  if (!(t_end >= 0.0 && t_end <= 1.0)) throw ConfigInvalid("t_end must lie in [0, 1]");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigInvalid("dt must be positive");
  if (!(c_cfl > 0.0)) throw ConfigInvalid("c_cfl must be positive");
  if (profile.kind != "cos_bump" && profile.kind != "two_mode" && profile.kind != "null_space")
    throw ConfigInvalid("unknown profile kind '" + profile.kind + "'");
  if (!(profile.width > 0.0)) throw ConfigInvalid("profile width must be positive");
  for (double t : observe_times)
    if (!(t > 0.0 && t <= t_end)) throw ConfigInvalid("observe_times must lie in (0, t_end]");
  if (harness.max_order < 0 || harness.max_order > 6) throw ConfigInvalid("harness.max_order must lie in 0..6");
  if (harness.k_max < 0 || harness.k_max > 6) throw ConfigInvalid("harness.k_max must lie in 0..6");
  if (!(harness.t0 > 0.0 && harness.t0 <= 0.5)) throw ConfigInvalid("harness.t0 must lie in (0, 1/2]");
}

std::vector<double> SimConfig::resolved_observe_times() const {
  if (!observe_times.empty()) {
    std::vector<double> t = observe_times;
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    return t;
  }
  if (t_end <= 0.0) return {};
  const double first = std::min(0.1, t_end);
  std::vector<double> out;
  for (int k = 0; k < 16; ++k) out.push_back(first + (t_end - first) * k / 15.0);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

nlohmann::json to_json(const SimConfig& c) {
  nlohmann::json j;
  j["grid"] = to_json(c.grid);
  j["gamma"] = c.gamma;
  j["eps0"] = c.eps0;
  j["t_end"] = c.t_end;
  j["dt"] = c.dt;
  j["c_cfl"] = c.c_cfl;
  j["profile"] = {{"kind", c.profile.kind}, {"width", c.profile.width}};
  j["split_scheme"] = c.split_scheme == SplitScheme::strang ? "strang" : "lie";
  j["collision_integrator"] = c.collision_integrator == CollisionIntegrator::rk2 ? "rk2" : "rk4";
  j["transport"] = c.transport;
  j["collision"] = c.collision;
  j["observe_times"] = c.observe_times;
  j["harness"] = {{"max_order", c.harness.max_order}, {"k_max", c.harness.k_max}, {"t0", c.harness.t0}};
  return j;
}

namespace {

template <class Fn>
void for_keys(const nlohmann::json& j, const char* where, Fn&& fn) {
  if (!j.is_object()) throw ConfigInvalid(std::string(where) + ": expected an object");
  for (const auto& [key, value] : j.items())
    if (!fn(key, value)) throw ConfigInvalid(std::string(where) + ": unknown key '" + key + "'");
}

}  // namespace

SimConfig config_from_json(const nlohmann::json& j) {
  SimConfig c;
  try {
    for_keys(j, "config", [&](const std::string& key, const nlohmann::json& v) {
      if (key == "grid") c.grid = grid_from_json(v, c.grid);
      else if (key == "gamma") c.gamma = v.get<double>();
      else if (key == "eps0") c.eps0 = v.get<double>();
      else if (key == "t_end") c.t_end = v.get<double>();
      else if (key == "dt") c.dt = v.get<double>();
      else if (key == "c_cfl") c.c_cfl = v.get<double>();
      else if (key == "transport") c.transport = v.get<bool>();
      else if (key == "collision") c.collision = v.get<bool>();
      else if (key == "observe_times") c.observe_times = v.get<std::vector<double>>();
      else if (key == "split_scheme") {
        const auto s = v.get<std::string>();
        if (s == "strang") c.split_scheme = SplitScheme::strang;
        else if (s == "lie") c.split_scheme = SplitScheme::lie;
        else throw ConfigInvalid("split_scheme must be 'strang' or 'lie'");
      } else if (key == "collision_integrator") {
        const auto s = v.get<std::string>();
        if (s == "rk2") c.collision_integrator = CollisionIntegrator::rk2;
        else if (s == "rk4") c.collision_integrator = CollisionIntegrator::rk4;
        else throw ConfigInvalid("collision_integrator must be 'rk2' or 'rk4'");
      } else if (key == "profile") {
        for_keys(v, "profile", [&](const std::string& k, const nlohmann::json& p) {
          if (k == "kind") c.profile.kind = p.get<std::string>();
          else if (k == "width") c.profile.width = p.get<double>();
          else return false;
          return true;
        });
      } else if (key == "harness") {
        for_keys(v, "harness", [&](const std::string& k, const nlohmann::json& h) {
          if (k == "max_order") c.harness.max_order = h.get<int>();
          else if (k == "k_max") c.harness.k_max = h.get<int>();
          else if (k == "t0") c.harness.t0 = h.get<double>();
          else return false;
          return true;
        });
      } else {
        return false;
      }
      return true;
    });
  } catch (const nlohmann::json::exception& e) {
    throw ConfigInvalid(std::string("config: ") + e.what());
  }
  c.validate();
  return c;
}

SimConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigInvalid("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigInvalid("config '" + path + "' is not valid JSON: " + e.what());
  }
  return config_from_json(j);
}

std::string sha256_hex(const void* data, std::size_t size) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data, size, digest, &len, EVP_sha256(), nullptr);
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    out += buf;
  }
  return out;
}

std::string config_hash(const SimConfig& c) {
  const std::string canonical = to_json(c).dump();
  return sha256_hex(canonical.data(), canonical.size());
}

}  // namespace landau
