#include "aedt/cli.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "aedt/trace.hpp"

namespace aedt::cli {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double to_double(const std::string& key, const std::string& value) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw std::invalid_argument("field '" + key + "': bad number '" + value +
                                "'");
  }
  return v;
}

int to_int(const std::string& key, const std::string& value) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw std::invalid_argument("field '" + key + "': bad integer '" + value +
                                "'");
  }
  return v;
}

std::uint64_t to_u64(const std::string& key, const std::string& value) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw std::invalid_argument("field '" + key + "': bad integer '" + value +
                                "'");
  }
  return v;
}

bool to_bool(const std::string& key, const std::string& value) {
  if (value == "on" || value == "true" || value == "1") return true;
  if (value == "off" || value == "false" || value == "0") return false;
  throw std::invalid_argument("field '" + key + "': expected on/off, got '" +
                              value + "'");
}

void apply_field(ScenarioConfig& cfg, const std::string& key,
                 const std::string& value) {
  if (key == "area_width") cfg.area_w = to_double(key, value);
  else if (key == "area_height") cfg.area_h = to_double(key, value);
  else if (key == "nodes") cfg.node_count = to_int(key, value);
  else if (key == "radio_range") cfg.radio_range = to_double(key, value);
  else if (key == "initial_energy") cfg.initial_energy = to_double(key, value);
  else if (key == "comm_capacity") cfg.comm_capacity = to_double(key, value);
  else if (key == "refresh_interval")
    cfg.refresh_interval = to_double(key, value);
  else if (key == "duration") cfg.duration = to_double(key, value);
  else if (key == "cbr_rate") cfg.traffic.rate = to_double(key, value);
  else if (key == "cbr_burst") cfg.traffic.burst = to_int(key, value);
  else if (key == "cbr_sources") cfg.traffic.sources = to_int(key, value);
  else if (key == "packet_size_bits")
    cfg.traffic.packet_size_bits = to_double(key, value);
  else if (key == "bandwidth") cfg.bandwidth = to_double(key, value);
  else if (key == "hop_latency") cfg.hop_latency = to_double(key, value);
  else if (key == "overload_policy") {
    if (value == "wait") cfg.overload = OverloadPolicy::Wait;
    else if (value == "prioritize") cfg.overload = OverloadPolicy::Prioritize;
    else
      throw std::invalid_argument(
          "field 'overload_policy': expected wait|prioritize, got '" + value +
          "'");
  } else if (key == "unit_drain") cfg.drains.unit_drain = to_double(key, value);
  else if (key == "alpha") cfg.drains.alpha = to_double(key, value);
  else if (key == "path_cache") cfg.path_cache = to_bool(key, value);
  else if (key == "prioritize_spill")
    cfg.prioritize_spill = to_bool(key, value);
  else if (key == "protocol") cfg.protocol = protocol_from_name(value);
  else if (key == "seed") cfg.seed = to_u64(key, value);
  else throw std::invalid_argument("unknown config key '" + key + "'");
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  out << body;
}

}  // namespace

std::string protocol_name(Protocol p) {
  switch (p) {
    case Protocol::Aedt: return "aedt";
    case Protocol::AedtNoSleep: return "aedt-nosleep";
    case Protocol::StaticTree: return "static-tree";
  }
  return "aedt";
}

Protocol protocol_from_name(const std::string& name) {
  if (name == "aedt") return Protocol::Aedt;
  if (name == "aedt-nosleep") return Protocol::AedtNoSleep;
  if (name == "static-tree") return Protocol::StaticTree;
  throw std::invalid_argument(
      "protocol must be aedt|aedt-nosleep|static-tree, got '" + name + "'");
}

ScenarioConfig load_config(const std::string& path,
                           const Overrides& overrides) {
  ScenarioConfig cfg;
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) {
      throw std::runtime_error("cannot open config file " + path);
    }
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const std::string stripped = trim(line);
      if (stripped.empty() || stripped[0] == '#') continue;
      const auto eq = stripped.find('=');
      if (eq == std::string::npos) {
        throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                    ": expected key = value");
      }
      const std::string key = trim(stripped.substr(0, eq));
      const std::string value = trim(stripped.substr(eq + 1));
      try {
        apply_field(cfg, key, value);
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                    ": " + e.what());
      }
    }
  }
  for (const auto& [key, value] : overrides) {
    apply_field(cfg, key, value);
  }
  return cfg;
}

ScenarioConfig config_from_overrides(const Overrides& overrides) {
  return load_config("", overrides);
}

std::string echo_config(const ScenarioConfig& c) {
  std::ostringstream out;
  out << "area_width = " << format_double(c.area_w) << '\n'
      << "area_height = " << format_double(c.area_h) << '\n'
      << "nodes = " << c.node_count << '\n'
      << "radio_range = " << format_double(c.radio_range) << '\n'
      << "initial_energy = " << format_double(c.initial_energy) << '\n'
      << "comm_capacity = " << format_double(c.comm_capacity) << '\n'
      << "refresh_interval = " << format_double(c.refresh_interval) << '\n'
      << "duration = " << format_double(c.duration) << '\n'
      << "cbr_rate = " << format_double(c.traffic.rate) << '\n'
      << "cbr_burst = " << c.traffic.burst << '\n'
      << "cbr_sources = " << c.traffic.sources << '\n'
      << "packet_size_bits = " << format_double(c.traffic.packet_size_bits)
      << '\n'
      << "bandwidth = " << format_double(c.bandwidth) << '\n'
      << "hop_latency = " << format_double(c.hop_latency) << '\n'
      << "overload_policy = "
      << (c.overload == OverloadPolicy::Wait ? "wait" : "prioritize") << '\n'
      << "unit_drain = " << format_double(c.drains.unit_drain) << '\n'
      << "alpha = " << format_double(c.drains.alpha) << '\n'
      << "path_cache = " << (c.path_cache ? "on" : "off") << '\n'
      << "prioritize_spill = " << (c.prioritize_spill ? "on" : "off") << '\n'
      << "protocol = " << protocol_name(c.protocol) << '\n'
      << "seed = " << c.seed << '\n';
  return out.str();
}

std::string metrics_csv_header() {
  return "protocol,nodes,seed,avg_delay_s,delivery_ratio,avg_energy_j,"
         "lifetime_s\n";
}

std::string metrics_csv_row(const ScenarioConfig& config,
                            const MetricsRecord& m) {
  std::ostringstream out;
  out << protocol_name(config.protocol) << ',' << config.node_count << ','
      << config.seed << ',' << format_double(m.avg_delay) << ','
      << format_double(m.delivery_ratio) << ','
      << format_double(m.avg_energy_consumed) << ','
      << format_double(m.network_lifetime) << '\n';
  return out.str();
}

std::string default_out_dir() {
  if (const char* env = std::getenv("AEDT_OUT_DIR")) return env;
  return "out";
}

int cmd_run(const std::string& config_path, const Overrides& overrides,
            const std::string& out_dir) {
  ScenarioConfig cfg;
  try {
    cfg = load_config(config_path, overrides);
    cfg.validate();
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  }

  RunResult result;
  try {
    result = run(cfg);
  } catch (const std::exception& e) {
    std::cerr << "run failed: " << e.what() << '\n';
    return 1;
  }

  try {
    std::filesystem::create_directories(out_dir);
    const std::filesystem::path dir(out_dir);
    write_file(dir / "metrics.csv",
               metrics_csv_header() + metrics_csv_row(cfg, result.metrics));
    write_file(dir / "trace.log", format_trace(result.trace));
    write_file(dir / "config_echo.cfg", echo_config(cfg));
  } catch (const std::exception& e) {
    std::cerr << "output error: " << e.what() << '\n';
    return 1;
  }

  std::cout << protocol_name(cfg.protocol) << " nodes=" << cfg.node_count
            << " seed=" << cfg.seed
            << " delivery_ratio=" << format_double(result.metrics.delivery_ratio)
            << " avg_delay_s=" << format_double(result.metrics.avg_delay)
            << " avg_energy_j="
            << format_double(result.metrics.avg_energy_consumed)
            << " lifetime_s=" << format_double(result.metrics.network_lifetime)
            << '\n';
  if (result.static_tree_disconnected) {
    std::cerr << "note: static-tree topology disconnected; unreachable "
                 "sources count as undeliverable\n";
  }
  return 0;
}

int cmd_sweep(const std::string& config_path, const Overrides& overrides,
              const std::vector<int>& node_counts,
              const std::vector<std::string>& protocols,
              const std::string& out_dir, int jobs) {
  if (node_counts.empty() || protocols.empty()) {
    std::cerr << "usage error: sweep needs at least one node count and one "
                 "protocol\n";
    return 2;
  }
  ScenarioConfig base;
  try {
    base = load_config(config_path, overrides);
    base.validate();
    for (const std::string& p : protocols) protocol_from_name(p);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  }

  struct Job {
    ScenarioConfig cfg;
    MetricsRecord metrics;
    bool failed = false;
    std::string error;
  };
  std::vector<Job> jobs_list;
  for (const std::string& proto : protocols) {
    for (int count : node_counts) {
      Job j;
      j.cfg = base;
      j.cfg.protocol = protocol_from_name(proto);
      j.cfg.node_count = count;
      j.cfg.seed = derive_seed(base.seed, static_cast<std::uint64_t>(count));
      jobs_list.push_back(std::move(j));
    }
  }

  const int workers =
      std::max(1, std::min<int>(jobs, static_cast<int>(jobs_list.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs_list.size()) break;
      try {
        jobs_list[i].metrics = run(jobs_list[i].cfg).metrics;
      } catch (const std::exception& e) {
        jobs_list[i].failed = true;
        jobs_list[i].error = e.what();
      }
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }

  std::string csv = metrics_csv_header();
  bool any_failed = false;
  for (const Job& j : jobs_list) {
    if (j.failed) {
      any_failed = true;
      std::cerr << "run failed (" << protocol_name(j.cfg.protocol)
                << ", nodes=" << j.cfg.node_count << "): " << j.error << '\n';
      continue;
    }
    csv += metrics_csv_row(j.cfg, j.metrics);
  }
  try {
    std::filesystem::create_directories(out_dir);
    write_file(std::filesystem::path(out_dir) / "sweep.csv", csv);
  } catch (const std::exception& e) {
    std::cerr << "output error: " << e.what() << '\n';
    return 1;
  }
  std::cout << "sweep: " << jobs_list.size() << " runs, csv at " << out_dir
            << "/sweep.csv\n";
  return any_failed ? 1 : 0;
}

}  // namespace aedt::cli
