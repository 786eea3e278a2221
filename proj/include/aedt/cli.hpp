#pragma once

#include <map>
#include <string>
#include <vector>

#include "aedt/simulator.hpp"

namespace aedt::cli {

/// Flat key=value overrides, same keys as the config file.
using Overrides = std::map<std::string, std::string>;

/// Parse a flat `key = value` config file into a ScenarioConfig. An
/// empty path yields the defaults. Throws with a line/field diagnostic
/// on malformed input.
ScenarioConfig load_config(const std::string& path, const Overrides& overrides);

/// Apply overrides only, starting from defaults.
ScenarioConfig config_from_overrides(const Overrides& overrides);

/// Serialize the merged config back out; reloading the echo reproduces
/// the run exactly.
std::string echo_config(const ScenarioConfig& config);

std::string protocol_name(Protocol p);
Protocol protocol_from_name(const std::string& name);

/// CSV header + rows: protocol,nodes,seed,avg_delay_s,delivery_ratio,
/// avg_energy_j,lifetime_s.
std::string metrics_csv_header();
std::string metrics_csv_row(const ScenarioConfig& config,
                            const MetricsRecord& metrics);

/// Run one scenario; writes metrics.csv, trace.log and config_echo.cfg
/// under out_dir and prints a one-line summary. Returns the exit status.
int cmd_run(const std::string& config_path, const Overrides& overrides,
            const std::string& out_dir);

/// One run per (protocol, node count); writes sweep.csv under out_dir.
/// `jobs` bounds run parallelism.
int cmd_sweep(const std::string& config_path, const Overrides& overrides,
              const std::vector<int>& node_counts,
              const std::vector<std::string>& protocols,
              const std::string& out_dir, int jobs);

/// Default output directory: $AEDT_OUT_DIR or "out".
std::string default_out_dir();

}  // namespace aedt::cli
