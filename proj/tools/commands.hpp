#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>

#include <json.hpp>

#include "landau/solver/config.hpp"

namespace landau {

enum ExitCode : int { kExitPass = 0, kExitCheckFailed = 1, kExitConfigError = 2, kExitBlowup = 3 };

struct CommandContext {
  std::string config_path;  // empty: built-in defaults
  std::string out_dir = "out";
  std::set<std::string> only;            // verify groups
  std::optional<double> t_end;           // overrides the config
  int leibniz_k = 0;                     // leibniz-table argument
  std::ostream* log = nullptr;           // progress and summary lines; null is silent
};

struct CommandResult {
  int exit_code = kExitPass;
  nlohmann::json summary = nlohmann::json::object();
};

// Loads the config named by the context (defaults when empty) and applies --t-end, dropping
// observation times past the new end.
SimConfig resolve_config(const CommandContext& ctx);

CommandResult cmd_verify(const CommandContext& ctx);
CommandResult cmd_simulate(const CommandContext& ctx);
CommandResult cmd_smoothing(const CommandContext& ctx);
CommandResult cmd_leibniz_table(const CommandContext& ctx);
CommandResult cmd_report(const CommandContext& ctx);

// Runs a command, mapping ConfigInvalid to exit 2 and BlowupDetected to exit 3, and appends one
// line to <out_dir>/manifest.jsonl:
//   {command, config_path, config_hash, build_id, out_dir, wall_time, pass, summary}.
int run_command(const std::string& name, const CommandContext& ctx, CommandResult (*fn)(const CommandContext&));

const char* build_id();

}  // namespace landau
