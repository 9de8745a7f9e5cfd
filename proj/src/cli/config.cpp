#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "pursuit/cli.hpp"
#include "pursuit/error.hpp"
#include "pursuit/io.hpp"
#include "pursuit/solver.hpp"

namespace pursuit {
namespace {

int get_int(const json& j, const std::string& key, const std::string& path, int fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number_integer()) throw ConfigError(path + "." + key + ": expected an integer");
  return v.get<int>();
}

std::size_t get_size(const json& j, const std::string& key, std::size_t fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number_unsigned() || v.get<std::size_t>() == 0) {
    throw ConfigError("config." + key + ": expected a positive integer");
  }
  return v.get<std::size_t>();
}

json section(const json& j, const std::string& key) {
  if (!j.contains(key)) return json::object();
  if (!j.at(key).is_object()) throw ConfigError("config." + key + ": expected an object");
  return j.at(key);
}

}  // namespace

RunConfig RunConfig::from_json(const json& source, std::optional<std::uint64_t> seed_override) {
  if (!source.is_object()) throw ConfigError("config: expected an object");
  // A result document carries the config it was produced from.
  const json& j = source.contains("command") && source.contains("config") ? source.at("config") : source;
  if (!j.is_object()) throw ConfigError("config: expected an object");

  RunConfig c;
  c.space = space_from_json(require(j, "space", "config"), "config.space");
  c.h = parse_real(require(j, "h", "config"), "config.h");
  if (!(c.h > 0.0)) throw ConfigError("config.h: must be positive");
  c.k = get_int(j, "k", "config", 1);
  if (c.k < 1) throw ConfigError("config.k: must be >= 1");
  if (j.contains("agility")) c.agility = Agility::from_json(j.at("agility"), "config.agility");

  if (j.contains("horizon")) {
    const json& hz = j.at("horizon");
    if (!hz.is_object()) throw ConfigError("config.horizon: expected {\"N\": ...} or {\"T\": ..., \"N\": ...}");
    if (hz.contains("N")) {
      c.N = get_int(hz, "N", "config.horizon", 0);
      if (*c.N < 0) throw ConfigError("config.horizon.N: must be >= 0");
    }
    if (hz.contains("T")) {
      c.T = parse_real(hz.at("T"), "config.horizon.T");
      if (!(*c.T > 0.0)) throw ConfigError("config.horizon.T: T mode needs T > 0");
      if (!c.N || *c.N < 1) throw ConfigError("config.horizon.N: T mode needs N >= 1");
    }
  }

  if (j.contains("starts")) {
    c.starts = j.at("starts");
    if (!(c.starts == "all") && !c.starts.is_array()) {
      throw ConfigError("config.starts: expected \"all\" or a list of {robber, cops}");
    }
  }
  c.net_budget = get_size(j, "net_budget", kDefaultNetBudget);
  c.layer_budget = get_size(j, "layer_budget", kDefaultLayerBudget);
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) throw ConfigError("config.seed: expected a non-negative integer");
    c.seed = j.at("seed").get<std::uint64_t>();
  }
  if (seed_override) c.seed = *seed_override;
  c.solve = section(j, "solve");
  c.play = section(j, "play");
  c.copnumber = section(j, "copnumber");
  c.verify = section(j, "verify");

  c.snapshot = j;
  c.snapshot["seed"] = c.seed;
  return c;
}

Agility RunConfig::schedule() const {
  if (T) return Agility::uniform(*T / horizon());
  if (!agility) throw ConfigError("config.agility: missing field");
  return *agility;
}

int RunConfig::horizon() const {
  if (!N) throw ConfigError("config.horizon.N: missing field");
  return *N;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ConfigError("config file '" + path.string() + "' is not valid JSON: " + e.what());
  }
}

namespace {

int net_index(const RunConfig& config, const Net& net, const json& j, const std::string& path) {
  if (j.is_number_integer()) {
    const int i = j.get<int>();
    if (i < 0 || static_cast<std::size_t>(i) >= net.size()) {
      throw ConfigError(path + ": net index " + std::to_string(i) + " outside [0, " + std::to_string(net.size()) + ")");
    }
    return i;
  }
  return static_cast<int>(net.nearest(point_from_json(*config.space, j, path)));
}

}  // namespace

std::vector<StartSpec> resolve_starts(const RunConfig& config, const Net& net) {
  std::vector<StartSpec> out;
  if (config.starts == "all") {
    const TupleIndex index = checked_index(net, config.k, config.layer_budget);
    for (std::size_t idx = 0; idx < index.size(); ++idx) {
      const auto set = index.cop_set(index.rank_of(idx));
      out.push_back({index.robber_of(idx), {set.begin(), set.end()}});
    }
    return out;
  }
  for (std::size_t i = 0; i < config.starts.size(); ++i) {
    const std::string path = "config.starts[" + std::to_string(i) + "]";
    const json& s = config.starts[i];
    StartSpec spec;
    spec.robber = net_index(config, net, require(s, "robber", path), path + ".robber");
    const json& cops = require(s, "cops", path);
    if (!cops.is_array()) throw ConfigError(path + ".cops: expected a list");
    if (static_cast<int>(cops.size()) != config.k) {
      throw ArityError(path + ".cops: expected " + std::to_string(config.k) + " cops, got " +
                       std::to_string(cops.size()));
    }
    for (std::size_t c = 0; c < cops.size(); ++c) {
      spec.cops.push_back(net_index(config, net, cops[c], path + ".cops[" + std::to_string(c) + "]"));
    }
    std::sort(spec.cops.begin(), spec.cops.end());
    out.push_back(std::move(spec));
  }
  if (out.empty()) throw ConfigError("config.starts: no start positions");
  return out;
}

}  // namespace pursuit
