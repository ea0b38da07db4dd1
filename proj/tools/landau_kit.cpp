#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "commands.hpp"
#include "landau/core/parallel.hpp"

using namespace landau;

int main(int argc, char** argv) {
  CLI::App app{"Landau collision operator spectral toolkit"};
  app.require_subcommand(1);

  CommandContext ctx;
  ctx.log = &std::cout;
  int threads = 0;
  std::string only;
  double t_end = -1.0;

  app.add_option("--config", ctx.config_path, "JSON config (defaults when omitted)");
  app.add_option("--out-dir", ctx.out_dir, "output directory")->capture_default_str();
  app.add_option("--threads", threads, "cap on intra-operation threads (also LANDAU_KIT_THREADS)");

  auto* verify = app.add_subcommand("verify", "run the identity and bound suite");
  verify->add_option("--only", only, "comma-separated groups");
  auto* simulate = app.add_subcommand("simulate", "integrate the perturbed equation");
  simulate->add_option("--t-end", t_end, "override t_end");
  auto* smoothing = app.add_subcommand("smoothing", "simulate, record regularity norms and fit");
  smoothing->add_option("--t-end", t_end, "override t_end");
  auto* leibniz = app.add_subcommand("leibniz-table", "dump the Leibniz coefficients for one k");
  leibniz->add_option("k", ctx.leibniz_k, "k")->required();
  app.add_subcommand("report", "summarize the manifest in --out-dir");

  for (auto* sub : app.get_subcommands({})) {
    sub->add_option("--config", ctx.config_path, "JSON config");
    sub->add_option("--out-dir", ctx.out_dir, "output directory");
    sub->add_option("--threads", threads, "thread cap");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfigError;
  }

  if (threads > 0) set_thread_cap(threads);
  if (t_end >= 0.0) ctx.t_end = t_end;
  for (std::size_t pos = 0; !only.empty() && pos != std::string::npos;) {
    const std::size_t comma = only.find(',', pos);
    ctx.only.insert(only.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    pos = comma == std::string::npos ? comma : comma + 1;
  }

  if (verify->parsed()) return run_command("verify", ctx, cmd_verify);
  if (simulate->parsed()) return run_command("simulate", ctx, cmd_simulate);
  if (smoothing->parsed()) return run_command("smoothing", ctx, cmd_smoothing);
  if (leibniz->parsed()) return run_command("leibniz-table", ctx, cmd_leibniz_table);
  return run_command("report", ctx, cmd_report);
}
