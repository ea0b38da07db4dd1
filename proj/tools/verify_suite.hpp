#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "landau/core/grid.hpp"

namespace landau {

// One identity or bound check. `value` is the worst observed error (or ratio) and passes when it
// does not exceed `threshold`, except where `detail` says otherwise.
struct CheckResult {
  std::string name;
  std::string group;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;
  nlohmann::json extra = nlohmann::json::object();
};

nlohmann::json to_json(const CheckResult& r);

struct VerifyOptions {
  GridSpec grid;                  // velocity grid for the collision identities
  std::set<std::string> only;     // group names; empty means all
  int pairs = 20;                 // random (g, h) pairs per gamma
  int cancellation_samples = 50;
  int commutator_fields = 20;
  std::size_t symbol_samples = 10000;
  std::size_t ellipticity_samples = 100000;
  std::uint64_t seed = 2024;
};

// Groups in run order.
const std::vector<std::string>& verify_groups();

// Runs the selected groups, calling `sink` after each check. Unknown group names are ConfigInvalid.
std::vector<CheckResult> run_verify(const VerifyOptions& opt, const std::function<void(const CheckResult&)>& sink = {});

}  // namespace landau
