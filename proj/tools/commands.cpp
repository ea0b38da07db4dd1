#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "landau/core/errors.hpp"
#include "landau/harness/harness.hpp"
#include "landau/harness/outputs.hpp"
#include "landau/solver/checkpoint.hpp"
#include "landau/solver/solver.hpp"
#include "landau/timeavg/leibniz.hpp"
#include "verify_suite.hpp"

#ifndef LANDAU_BUILD_ID
#define LANDAU_BUILD_ID "unknown"
#endif

namespace landau {

namespace fs = std::filesystem;

namespace {

std::ostream& out(const CommandContext& ctx) {
  static std::ostream null(nullptr);
  return ctx.log ? *ctx.log : null;
}

std::string path_in(const CommandContext& ctx, const std::string& name) { return (fs::path(ctx.out_dir) / name).string(); }

nlohmann::json num(double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr); }

void write_diagnostics_csv(const std::string& path, const std::vector<Diagnostics>& d) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << "t,mass,momentum1,momentum2,momentum3,energy,l2,l1m,min_F\n";
  for (const auto& r : d)
    f << format_double(r.t) << ',' << format_double(r.mass) << ',' << format_double(r.momentum[0]) << ','
      << format_double(r.momentum[1]) << ',' << format_double(r.momentum[2]) << ',' << format_double(r.energy) << ','
      << format_double(r.l2) << ',' << format_double(r.l1m) << ',' << format_double(r.min_F) << '\n';
}

nlohmann::json run_summary(const SimConfig& c, const SimState& s) {
  const Diagnostics& a = s.diagnostics.front();
  const Diagnostics& b = s.diagnostics.back();
  nlohmann::json j;
  j["t_final"] = s.t;
  j["steps"] = s.diagnostics.size() - 1;
  if (b.t > a.t) {
    const ConservationDrift d = conservation_drift(a, b);
    j["drift"] = {{"mass", d.mass}, {"momentum", d.momentum}, {"energy", d.energy}};
  }
  j["l2_initial"] = a.l2;
  j["l2_final"] = b.l2;
  j["min_F"] = std::min_element(s.diagnostics.begin(), s.diagnostics.end(), [](const auto& x, const auto& y) {
                 return x.min_F < y.min_F;
               })->min_F;
  j["positivity_tolerance"] = kPositivityTolerance;
  j["stable"] = b.l2 <= 2.0 * a.l2 || c.eps0 == 0.0;
  return j;
}

const RegularityRecord* record_at(const std::vector<RegularityRecord>& recs, double t) {
  for (const auto& r : recs)
    if (std::abs(r.t - t) < 1e-12) return &r;
  return nullptr;
}

}  // namespace

const char* build_id() { return LANDAU_BUILD_ID; }

SimConfig resolve_config(const CommandContext& ctx) {
  SimConfig c = ctx.config_path.empty() ? SimConfig{} : load_config(ctx.config_path);
  if (ctx.t_end) {
    c.t_end = *ctx.t_end;
    std::erase_if(c.observe_times, [&](double t) { return t > c.t_end; });
  }
  c.validate();
  return c;
}

CommandResult cmd_verify(const CommandContext& ctx) {
  const SimConfig c = resolve_config(ctx);
  VerifyOptions opt;
  opt.grid = c.grid;
  opt.only = ctx.only;
  nlohmann::json report = nlohmann::json::array();
  CommandResult res;
  std::string first_failure;
  std::size_t passed = 0, total = 0;
  run_verify(opt, [&](const CheckResult& r) {
    out(ctx) << (r.pass ? "PASS " : "FAIL ") << r.name << "  value=" << format_double(r.value)
             << " threshold=" << format_double(r.threshold) << " (" << r.seconds << " s)\n";
    out(ctx).flush();
    report.push_back(to_json(r));
    ++total;
    if (r.pass) ++passed;
    else if (first_failure.empty()) first_failure = r.name;
  });
  write_json(path_in(ctx, "identity_report.json"), report);
  res.summary = {{"checks", total}, {"passed", passed}};
  if (!first_failure.empty()) {
    res.summary["first_failure"] = first_failure;
    out(ctx) << "first failing identity: " << first_failure << "\n";
    res.exit_code = kExitCheckFailed;
  }
  return res;
}

CommandResult cmd_simulate(const CommandContext& ctx) {
  const SimConfig c = resolve_config(ctx);
  const Solver solver(c);
  const SimState s = solver.run([&](const SimState& st) {
    out(ctx) << "t = " << format_double(st.t) << "  ||f||_L2 = " << format_double(st.diagnostics.back().l2) << "\n";
  });
  write_checkpoint(path_in(ctx, "checkpoint"), s);
  write_diagnostics_csv(path_in(ctx, "diagnostics.csv"), s.diagnostics);
  CommandResult res;
  res.summary = run_summary(c, s);
  res.summary["config_hash"] = config_hash(c);
  write_json(path_in(ctx, "simulate.json"), res.summary);
  if (!res.summary["stable"].get<bool>()) res.exit_code = kExitCheckFailed;
  return res;
}

CommandResult cmd_smoothing(const CommandContext& ctx) {
  const SimConfig c = resolve_config(ctx);
  const std::string hash = config_hash(c);
  const std::vector<double> times = c.resolved_observe_times();
  CommandResult res;
  nlohmann::json& sum = res.summary;
  bool pass = true;

  // Heat-flow oracle on the config's velocity grid and its refinement.
  nlohmann::json heat = nlohmann::json::array();
  double C_coarse = 0.0;
  for (int nv : {c.grid.nv, 2 * c.grid.nv}) {
    GridSpec g = c.grid;
    g.nv = nv;
    g.nx = 4;
    g.spatial_dims = 1;
    const HeatOracleReport h = heat_flow_oracle(g, c.harness.max_order, times);
    const bool ok = h.fit.sigma_fit <= 1.05 && h.C_relative_error <= 0.1 &&
                    (C_coarse == 0.0 || std::abs(h.fit.C_fit - C_coarse) <= 0.1 * C_coarse);
    if (C_coarse == 0.0) C_coarse = h.fit.C_fit;
    heat.push_back({{"nv", nv},
                    {"sigma_fit", num(h.fit.sigma_fit)},
                    {"C_fit", num(h.fit.C_fit)},
                    {"C_exact_fit", num(h.exact_fit.C_fit)},
                    {"C_relative_error", num(h.C_relative_error)},
                    {"max_norm_error", num(h.max_norm_error)},
                    {"pass", ok}});
    out(ctx) << "heat oracle nv=" << nv << ": sigma_fit=" << format_double(h.fit.sigma_fit)
             << " C_fit=" << format_double(h.fit.C_fit) << " (closed form " << format_double(h.exact_fit.C_fit)
             << ")" << (ok ? "" : "  FAILED") << "\n";
    pass = pass && ok;
  }
  write_json(path_in(ctx, "heat_oracle.json"), heat);
  sum["heat_oracle_pass"] = pass;

  RecordRequest req;
  req.derivatives = derivative_set(c.harness.max_order, c.grid.spatial_dims);
  req.k_max = c.harness.k_max;
  req.t0 = c.harness.t0;
  req.gamma = c.gamma;
  std::vector<RegularityRecord> recs;
  const Solver solver(c);
  const SimState final_state = solver.run([&](const SimState& st) {
    recs.push_back(record(st.f, st.t, req));
    out(ctx) << "recorded t = " << format_double(st.t) << "\n";
    out(ctx).flush();
  });
  write_checkpoint(path_in(ctx, "checkpoint"), final_state);
  write_diagnostics_csv(path_in(ctx, "diagnostics.csv"), final_state.diagnostics);
  write_smoothing_csv(path_in(ctx, "smoothing.csv"), recs);
  write_mk_csv(path_in(ctx, "mk.csv"), recs);
  write_spectrum_csv(path_in(ctx, "spectrum.csv"), recs);
  sum["run"] = run_summary(c, final_state);

  const SmoothingFit fa = fit_smoothing(recs, TimeWeight::analytic);
  const SmoothingFit fg = fit_smoothing(recs, TimeWeight::gevrey);
  write_json(path_in(ctx, "fit.json"), fit_json(fa, hash, "analytic"));
  write_json(path_in(ctx, "fit_gevrey.json"), fit_json(fg, hash, "gevrey"));
  sum["sigma_fit"] = num(fa.sigma_fit);
  sum["C_fit"] = num(fa.C_fit);
  sum["r2"] = num(fa.r2);
  sum["sigma_fit_gevrey"] = num(fg.sigma_fit);
  const bool sigma_ok = !fa.degenerate && fa.sigma_fit <= 1.2;
  out(ctx) << "sigma_fit = " << format_double(fa.sigma_fit) << " (gevrey weighting " << format_double(fg.sigma_fit)
           << ")\n";

  nlohmann::json spectra = nlohmann::json::array();
  for (const auto& r : recs) {
    try {
      spectra.push_back(spectrum_json(spectrum_decay(r), r.t));
    } catch (const InsufficientData&) {
      spectra.push_back({{"t", r.t}, {"slope", nullptr}, {"r2", nullptr}, {"shells", 0}, {"analytic", false}});
    }
  }
  write_json(path_in(ctx, "spectrum_fit.json"), spectra);

  // Steepening between the first observation at or after 0.1 and t_end.
  bool spectrum_ok = false;
  const RegularityRecord* early = record_at(recs, 0.1);
  const RegularityRecord* late = record_at(recs, c.t_end);
  if (early && late && late->t > early->t) {
    try {
      const SpectrumFit e = spectrum_decay(*early), l = spectrum_decay(*late);
      spectrum_ok = l.slope <= e.slope - 0.5 && e.r2 >= 0.9 && l.r2 >= 0.9;
      sum["spectrum"] = {{"t_early", early->t}, {"slope_early", e.slope}, {"r2_early", e.r2},
                         {"t_late", late->t},   {"slope_late", l.slope},  {"r2_late", l.r2},
                         {"pass", spectrum_ok}};
      out(ctx) << "spectrum slope " << format_double(e.slope) << " (r2 " << format_double(e.r2) << ") at t = "
               << early->t << " -> " << format_double(l.slope) << " (r2 " << format_double(l.r2) << ") at t = "
               << late->t << "\n";
    } catch (const InsufficientData& ex) {
      sum["spectrum"] = {{"error", ex.what()}, {"pass", false}};
    }
  } else {
    sum["spectrum"] = {{"error", "observation times must include 0.1 and t_end"}, {"pass", false}};
  }
  sum["sigma_pass"] = sigma_ok;
  sum["config_hash"] = hash;
  pass = pass && sigma_ok && spectrum_ok;
  if (!pass) res.exit_code = kExitCheckFailed;
  return res;
}

CommandResult cmd_leibniz_table(const CommandContext& ctx) {
  const int k = ctx.leibniz_k;
  if (k < 0) throw ConfigInvalid("leibniz-table: k must be nonnegative");
  LeibnizTable table(0);
  try {
    table = LeibnizTable(k);
  } catch (const IntegerOverflow& e) {
    throw ConfigInvalid(std::string("leibniz-table: ") + e.what());
  }
  const std::string path = path_in(ctx, "leibniz_table.csv");
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << "k,j,l,p,q,c\n";
  std::vector<std::int64_t> sums(static_cast<std::size_t>(2 * k) + 1, 0);
  for (const auto& e : table.entries(k)) {
    f << e.k << ',' << e.j << ',' << e.l << ',' << e.p << ',' << e.q << ',' << e.c << '\n';
    sums[static_cast<std::size_t>(e.j)] += e.c;
  }
  CommandResult res;
  bool ok = true;
  for (int j = 0; j <= 2 * k; ++j) ok = ok && sums[static_cast<std::size_t>(j)] == binomial(2 * k, j);
  res.summary = {{"k", k}, {"rows", table.entries(k).size()}, {"row_sums_match_binomials", ok}};
  out(ctx) << "wrote " << path << " (" << table.entries(k).size() << " rows); sums over j match C(" << 2 * k
           << ", j): " << (ok ? "yes" : "no") << "\n";
  if (!ok) res.exit_code = kExitCheckFailed;
  return res;
}

CommandResult cmd_report(const CommandContext& ctx) {
  const std::string path = path_in(ctx, "manifest.jsonl");
  std::ifstream in(path);
  if (!in) throw ConfigInvalid("no manifest at " + path);
  CommandResult res;
  std::string line;
  std::size_t runs = 0, failed = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const nlohmann::json m = nlohmann::json::parse(line);
    ++runs;
    const bool pass = m.value("pass", false);
    if (!pass) ++failed;
    out(ctx) << (pass ? "pass " : "FAIL ") << m.value("command", "?") << "  config=" << m.value("config_hash", "")
             .substr(0, 12) << "  wall=" << m.value("wall_time", 0.0) << " s  build=" << m.value("build_id", "")
             << "\n";
  }
  for (const char* name : {"fit.json", "fit_gevrey.json"}) {
    std::ifstream f(path_in(ctx, name));
    if (!f) continue;
    nlohmann::json j;
    f >> j;
    out(ctx) << name << ": sigma_fit=" << j["sigma_fit"] << " C_fit=" << j["C_fit"] << " r2=" << j["r2"] << "\n";
  }
  res.summary = {{"runs", runs}, {"failed", failed}};
  return res;
}

int run_command(const std::string& name, const CommandContext& ctx, CommandResult (*fn)(const CommandContext&)) {
  const auto start = std::chrono::steady_clock::now();
  CommandResult res;
  std::string hash;
  try {
    fs::create_directories(ctx.out_dir);
    hash = config_hash(resolve_config(ctx));
    res = fn(ctx);
  } catch (const ConfigInvalid& e) {
    res.exit_code = kExitConfigError;
    res.summary = {{"error", e.what()}};
    std::cerr << "config error: " << e.what() << "\n";
  } catch (const BlowupDetected& e) {
    res.exit_code = kExitBlowup;
    res.summary = {{"error", e.what()}};
    std::cerr << "blow-up: " << e.what() << "\n";
  } catch (const std::exception& e) {
    res.exit_code = kExitCheckFailed;
    res.summary = {{"error", e.what()}};
    std::cerr << "error: " << e.what() << "\n";
  }
  nlohmann::json m;
  m["command"] = name;
  m["config_path"] = ctx.config_path;
  m["config_hash"] = hash;
  m["build_id"] = build_id();
  m["out_dir"] = ctx.out_dir;
  m["wall_time"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  m["pass"] = res.exit_code == kExitPass;
  m["exit_code"] = res.exit_code;
  m["summary"] = res.summary;
  std::error_code ec;
  fs::create_directories(ctx.out_dir, ec);
  std::ofstream man(path_in(ctx, "manifest.jsonl"), std::ios::app);
  man << m.dump() << '\n';
  return res.exit_code;
}

}  // namespace landau
