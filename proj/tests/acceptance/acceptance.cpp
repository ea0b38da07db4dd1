// Acceptance suite: one PASS/FAIL line per primary criterion. Tolerances are pinned here, not read
// from configs. Usage: acceptance [out_dir]   (default: acceptance_out)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "landau/harness/outputs.hpp"
#include "landau/norms/norms.hpp"
#include "landau/solver/solver.hpp"
#include "verify_suite.hpp"

using namespace landau;
namespace fs = std::filesystem;

namespace {

constexpr double kIdentityTol = 1e-8;
constexpr double kCommutatorTol = 1e-9;
constexpr double kExpansionTol = 1e-7;
constexpr double kDecompositionSeconds = 120.0;
constexpr double kCoercivityChange = 0.2;
constexpr double kDriftPerUnitTime = 1e-6;
constexpr double kStrangLow = 3.0, kStrangHigh = 5.0;
constexpr double kSigmaMax = 1.2;
constexpr double kSteepening = 0.5;
constexpr double kSpectrumR2 = 0.9;
constexpr double kSmoothingSeconds = 1800.0;

int failures = 0;

void line(int id, const std::string& name, bool pass, const std::string& detail) {
  if (!pass) ++failures;
  std::printf("[%s] %02d %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
}

std::string g(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

struct Group {
  bool pass = true;
  double worst = 0.0;
  double seconds = 0.0;
  int checks = 0;
};

Group collect(const std::vector<CheckResult>& all, const std::string& group, const std::string& name_prefix = "") {
  Group out;
  for (const auto& r : all) {
    if (r.group != group || r.name.rfind(name_prefix, 0) != 0) continue;
    ++out.checks;
    out.pass = out.pass && r.pass;
    out.worst = std::max(out.worst, r.value);
    out.seconds += r.seconds;
  }
  if (out.checks == 0) out.pass = false;
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

SimConfig acceptance_config() {
  SimConfig c;
  c.grid.nx = 16;
  c.grid.nv = 32;
  c.grid.vmax = 8.0;
  c.grid.spatial_dims = 1;
  c.gamma = 1.0;
  c.eps0 = 1e-3;
  c.t_end = 1.0;
  c.dt = 0.02;
  c.profile = {"cos_bump", 1.0};
  c.observe_times.clear();  // 16 equispaced times in [0.1, 1] plus t = 0
  return c;
}

// Richardson ratio |f_dt - f_dt/2| / |f_dt/2 - f_dt/4| of the Strang scheme.
double strang_factor() {
  SimConfig c;
  c.grid.nx = 8;
  c.grid.nv = 16;
  c.t_end = 0.2;
  std::vector<PhaseField> f;
  for (double dt : {0.05, 0.025, 0.0125}) {
    c.dt = dt;
    c.observe_times = {c.t_end};
    f.push_back(Solver(c).run({}).f);
  }
  return l2_norm(f[0].combined(f[1], -1.0)) / l2_norm(f[1].combined(f[2], -1.0));
}

CommandResult smoothing_run(const fs::path& dir, const fs::path& config) {
  fs::create_directories(dir);
  CommandContext ctx;
  ctx.config_path = config.string();
  ctx.out_dir = dir.string();
  ctx.log = &std::cerr;
  CommandResult res;
  const int code = run_command("smoothing", ctx, cmd_smoothing);
  // run_command only keeps the exit code; the summary is in the manifest line it appended.
  std::ifstream man(dir / "manifest.jsonl");
  std::string last, l;
  while (std::getline(man, l))
    if (!l.empty()) last = l;
  if (!last.empty()) res.summary = nlohmann::json::parse(last);
  res.exit_code = code;
  return res;
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path out = argc > 1 ? argv[1] : "acceptance_out";
  fs::remove_all(out);
  fs::create_directories(out);

  std::cerr << "running identity checks\n";
  VerifyOptions opt;
  opt.grid = acceptance_config().grid;
  const std::vector<CheckResult> checks = run_verify(opt, [](const CheckResult& r) {
    std::cerr << (r.pass ? "  ok   " : "  FAIL ") << r.name << " " << g(r.value) << " (" << g(r.seconds) << " s)\n";
  });

  {
    const Group d = collect(checks, "decomposition");
    line(1, "decomposition identity", d.pass && d.checks == 3 && d.seconds <= kDecompositionSeconds,
         "worst rel. L2 " + g(d.worst) + " <= " + g(kIdentityTol) + " over gamma 0, 0.5, 1; " + g(d.seconds) +
             " s <= " + g(kDecompositionSeconds) + " s");
  }
  {
    const Group d = collect(checks, "forms");
    line(2, "L_j form equivalences", d.pass && d.checks == 6,
         "worst rel. error " + g(d.worst) + " <= " + g(kIdentityTol) + " (" + std::to_string(d.checks) + " forms)");
  }
  {
    const Group d = collect(checks, "cancellation");
    line(3, "cancellation identities", d.pass && d.checks == 3,
         "worst |form| / ||h||^2 " + g(d.worst) + " <= " + g(kIdentityTol));
  }
  {
    const Group d = collect(checks, "commutator");
    line(4, "commutator identities", d.pass && d.checks == 2,
         "worst rel. error " + g(d.worst) + " <= " + g(kCommutatorTol));
  }
  {
    const Group d = collect(checks, "leibniz", "Leibniz coefficient sums");
    line(5, "Leibniz combinatorics", d.pass,
         g(d.worst) + " mismatches for k <= 12 (sums and boundary values); " + g(d.seconds) + " s <= 1 s");
  }
  {
    const Group d = collect(checks, "leibniz", "Leibniz expansion");
    line(6, "Leibniz expansion", d.pass, "worst rel. error " + g(d.worst) + " <= " + g(kExpansionTol));
  }
  {
    const Group d = collect(checks, "symbol_bound");
    line(7, "symbol bound", d.pass, "worst lhs/rhs " + g(d.worst) + " <= 1 + 1e-12 over 1e4 samples per (k, j)");
  }
  {
    const Group d = collect(checks, "ellipticity");
    line(8, "ellipticity", d.pass, g(d.worst) + " of 1e5 sampled ratios outside the bounds");
  }
  {
    const Group d = collect(checks, "gaussian_bound");
    line(9, "Gaussian derivative bound", d.pass, "worst lhs/rhs " + g(d.worst) + " <= 1 for |beta| <= 6, nv=64");
  }
  {
    const Group d = collect(checks, "coercivity");
    line(10, "coercivity stability", d.pass,
         "relative change nv 32 -> 64 " + g(d.worst) + " <= " + g(kCoercivityChange));
  }

  // Acceptance run, also the conservation run.
  const fs::path config = out / "acceptance.json";
  write_json(config.string(), to_json(acceptance_config()));
  std::cerr << "acceptance smoothing run\n";
  const auto t0 = std::chrono::steady_clock::now();
  const CommandResult run1 = smoothing_run(out / "run1", config);
  const double run_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const nlohmann::json s1 = run1.summary.value("summary", nlohmann::json::object());

  {
    double drift = INFINITY;
    if (s1.contains("run") && s1["run"].contains("drift")) {
      const auto& d = s1["run"]["drift"];
      drift = std::max({d["mass"].get<double>(), d["momentum"].get<double>(), d["energy"].get<double>()});
    }
    std::cerr << "Strang order check\n";
    const double factor = strang_factor();
    line(11, "solver conservation and Strang order",
         drift <= kDriftPerUnitTime && factor >= kStrangLow && factor <= kStrangHigh,
         "max drift " + g(drift) + " per unit time <= " + g(kDriftPerUnitTime) + "; order factor " + g(factor) +
             " in [" + g(kStrangLow) + ", " + g(kStrangHigh) + "]");
  }
  {
    const bool heat = s1.value("heat_oracle_pass", false);
    const double sigma = s1.contains("sigma_fit") && s1["sigma_fit"].is_number() ? s1["sigma_fit"].get<double>() : NAN;
    bool spec_ok = false;
    std::string spec = "spectrum fit unavailable";
    if (s1.contains("spectrum") && s1["spectrum"].contains("slope_early")) {
      const auto& sp = s1["spectrum"];
      const double e = sp["slope_early"], l = sp["slope_late"], re = sp["r2_early"], rl = sp["r2_late"];
      spec_ok = l <= e - kSteepening && re >= kSpectrumR2 && rl >= kSpectrumR2;
      spec = "slope " + g(e) + " (r2 " + g(re) + ") at t=0.1 -> " + g(l) + " (r2 " + g(rl) + ") at t=1, need drop >= " +
             g(kSteepening) + " and r2 >= " + g(kSpectrumR2);
    }
    const bool sigma_ok = sigma <= kSigmaMax;
    line(12, "smoothing structure", heat && sigma_ok && spec_ok && run_seconds <= kSmoothingSeconds,
         std::string("heat oracle ") + (heat ? "ok" : "FAILED") + "; sigma_fit " + g(sigma) + " <= " + g(kSigmaMax) +
             "; " + spec + "; runtime " + g(run_seconds) + " s <= " + g(kSmoothingSeconds) + " s");
  }

  std::cerr << "determinism rerun\n";
  smoothing_run(out / "run2", config);
  {
    bool same = true;
    std::string diff;
    for (const char* name : {"smoothing.csv", "mk.csv", "spectrum.csv", "diagnostics.csv"}) {
      const std::string a = slurp(out / "run1" / name), b = slurp(out / "run2" / name);
      if (a.empty() || a != b) {
        same = false;
        diff += std::string(diff.empty() ? "" : ", ") + name;
      }
    }
    line(13, "determinism", same,
         same ? "smoothing, mk, spectrum and diagnostics CSVs bit-identical across two runs" : "differs: " + diff);
  }

  std::printf("%d of 13 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
