#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "pursuit/game.hpp"
#include "pursuit/net.hpp"
#include "pursuit/spaces.hpp"

namespace pursuit {

// A start tuple on the net, cops in canonical (sorted) order.
struct StartSpec {
  int robber = 0;
  std::vector<int> cops;
};

struct RunConfig {
  nlohmann::json snapshot;  // the config as run, seed included
  SpacePtr space;
  double h = 0.0;
  int k = 1;
  std::optional<Agility> agility;
  std::optional<int> N;
  std::optional<double> T;
  nlohmann::json starts = "all";
  std::size_t net_budget = 0;
  std::size_t layer_budget = 0;
  std::uint64_t seed = 0;
  nlohmann::json solve = nlohmann::json::object();
  nlohmann::json play = nlohmann::json::object();
  nlohmann::json copnumber = nlohmann::json::object();
  nlohmann::json verify = nlohmann::json::object();

  // ConfigError naming the field path on anything malformed. A result
  // document is accepted too; its embedded config is used.
  static RunConfig from_json(const nlohmann::json& j, std::optional<std::uint64_t> seed_override = std::nullopt);

  // The step schedule: uniform(T / N) in T mode, else the agility.
  Agility schedule() const;
  int horizon() const;  // ConfigError when no horizon is given
};

nlohmann::json read_json_file(const std::filesystem::path& path);

std::vector<StartSpec> resolve_starts(const RunConfig& config, const Net& net);

// Each command writes its documents under `out` and a short summary to
// `log`, and returns the process exit code.
int cmd_solve(const RunConfig& config, const std::filesystem::path& out, std::ostream& log);
int cmd_play(const RunConfig& config, const std::filesystem::path& out, std::ostream& log);
int cmd_copnumber(const RunConfig& config, const std::filesystem::path& out, std::ostream& log);
// `pack` is "default", an instance list, or {"instances": [...]}.
int cmd_verify(const nlohmann::json& pack, const std::filesystem::path& out, std::ostream& log);

// Full entry point below argument parsing: loads the config, dispatches,
// maps errors to exit code 2.
int run_command(const std::string& command, const std::string& config_path, const std::filesystem::path& out,
                std::optional<std::uint64_t> seed, std::ostream& log, std::ostream& err);

}  // namespace pursuit
