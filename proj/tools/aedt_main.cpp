#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aedt/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"AEDT wireless sensor network simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = aedt::cli::default_out_dir();
  std::string seed, nodes, protocol, duration, refresh, overload;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "Scenario config file");
    cmd->add_option("--out", out_dir, "Output directory");
    cmd->add_option("--seed", seed, "RNG seed");
    cmd->add_option("--nodes", nodes, "Node count");
    cmd->add_option("--duration", duration, "Run duration, seconds");
    cmd->add_option("--refresh-interval", refresh,
                    "Cycle length t, seconds");
    cmd->add_option("--overload-policy", overload, "wait|prioritize");
  };

  CLI::App* run_cmd = app.add_subcommand("run", "Run one scenario");
  add_common(run_cmd);
  run_cmd->add_option("--protocol", protocol,
                      "aedt|aedt-nosleep|static-tree");

  std::vector<int> counts{20, 40, 60, 80, 100};
  std::vector<std::string> protocols{"aedt", "static-tree"};
  int jobs = 1;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Run a node-count sweep per protocol");
  add_common(sweep_cmd);
  sweep_cmd->add_option("--counts", counts, "Node counts to sweep");
  sweep_cmd->add_option("--protocols", protocols, "Protocols to sweep");
  sweep_cmd->add_option("--jobs", jobs, "Parallel runs");

  CLI11_PARSE(app, argc, argv);

  aedt::cli::Overrides overrides;
  if (!seed.empty()) overrides["seed"] = seed;
  if (!nodes.empty()) overrides["nodes"] = nodes;
  if (!protocol.empty()) overrides["protocol"] = protocol;
  if (!duration.empty()) overrides["duration"] = duration;
  if (!refresh.empty()) overrides["refresh_interval"] = refresh;
  if (!overload.empty()) overrides["overload_policy"] = overload;

  if (app.got_subcommand(run_cmd)) {
    return aedt::cli::cmd_run(config_path, overrides, out_dir);
  }
  return aedt::cli::cmd_sweep(config_path, overrides, counts, protocols,
                              out_dir, jobs);
}
