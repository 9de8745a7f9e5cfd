#include <algorithm>
#include <fstream>
#include <iomanip>
#include <string>

#include "pursuit/arena.hpp"
#include "pursuit/cli.hpp"
#include "pursuit/error.hpp"
#include "pursuit/io.hpp"
#include "pursuit/solver.hpp"
#include "pursuit/verify.hpp"

namespace pursuit {
namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot write '" + path.string() + "'");
  f << text;
}

void write_json(const std::filesystem::path& path, const json& doc) { write_file(path, doc.dump(2) + "\n"); }

double real_or(const json& j, const char* key, double fallback, const std::string& path) {
  return j.contains(key) ? parse_real(j.at(key), path + "." + key) : fallback;
}

int int_or(const json& j, const char* key, int fallback, const std::string& path) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number_integer()) throw ConfigError(path + "." + key + ": expected an integer");
  return j.at(key).get<int>();
}

bool bool_or(const json& j, const char* key, bool fallback, const std::string& path) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_boolean()) throw ConfigError(path + "." + key + ": expected true or false");
  return j.at(key).get<bool>();
}

std::vector<Agility> family_from(const json& j, const std::string& path) {
  std::vector<Agility> out;
  if (!j.contains("family")) return out;
  const json& f = j.at("family");
  if (!f.is_array()) throw ConfigError(path + ".family: expected a list of agilities");
  if (f.empty()) throw ConfigError(path + ".family: agility family is empty");
  for (std::size_t i = 0; i < f.size(); ++i) {
    out.push_back(Agility::from_json(f[i], path + ".family[" + std::to_string(i) + "]"));
  }
  return out;
}

json convergence_json(const LimitResult& r) {
  json log = json::array();
  for (auto [N, d] : r.log) log.push_back({{"N", N}, {"decrement", d}});
  return log;
}

void print_convergence(std::ostream& log, const LimitResult& r) {
  log << "  N    sup-norm decrement\n";
  for (auto [N, d] : r.log) log << "  " << std::setw(4) << N << " " << format_real(d) << "\n";
  log << "  converged: " << (r.converged ? "yes" : "no") << " at N = " << r.achieved_N << "\n";
}

json net_json(const Net& net, double h) {
  return {{"size", net.size()}, {"covering_radius", net.covering_radius()}, {"h", h}};
}

}  // namespace

int cmd_solve(const RunConfig& config, const std::filesystem::path& out, std::ostream& log) {
  const std::string path = "config.solve";
  const json& s = config.solve;
  const NetPtr net = build_net(config.space, config.h, config.net_budget);
  const std::string mode = s.value("mode", config.T ? "T" : "finite");
  const Variant variant =
      variant_from_string(s.value("variant", mode == "finite" ? std::string("endpoint") : std::string("intermediate")));
  const double tol = real_or(s, "tol", 1e-9, path);
  const int N_max = int_or(s, "N_max", 64, path);
  SolveOptions opts;
  opts.policy = bool_or(s, "policy", false, path);
  opts.layer_budget = config.layer_budget;

  json doc = {{"command", "solve"}, {"config", config.snapshot}, {"mode", mode},
              {"variant", to_string(variant)}, {"k", config.k}, {"net", net_json(*net, config.h)}};
  ValueTable table;
  std::optional<LimitResult> limit;
  if (mode == "finite") {
    SolveResult r = solve_finite(net, config.k, config.schedule().prefix(config.horizon()), variant, opts);
    table = std::move(r.table);
    if (r.policy) {
      json dump = json::array();
      for (int m = 1; m <= r.policy->horizon(); ++m) {
        dump.push_back({{"m", m}, {"robber", r.policy->steps[m - 1].robber}, {"cops", r.policy->steps[m - 1].cops}});
      }
      doc["policy"] = dump;
    }
  } else if (mode == "limit") {
    limit = limit_value(net, config.k, config.schedule(), tol, N_max, variant, opts);
  } else if (mode == "standard") {
    std::vector<Agility> family = family_from(s, path);
    if (family.empty()) family = default_family(*net);
    StandardResult r = standard_value(net, config.k, family, tol, N_max, variant, opts);
    json members = json::array();
    for (std::size_t i = 0; i < family.size(); ++i) {
      members.push_back({{"agility", family[i].to_json()},
                         {"worst", r.members[i].table.worst()},
                         {"achieved_N", r.members[i].achieved_N},
                         {"converged", r.members[i].converged},
                         {"convergence", convergence_json(r.members[i])}});
      log << "family member " << family[i].to_json().dump() << ": worst-start value "
          << format_real(r.members[i].table.worst()) << "\n";
      print_convergence(log, r.members[i]);
    }
    doc["family"] = members;
    table = std::move(r.members.back().table);
    table.values = std::move(r.values);
    table.tau.clear();
  } else if (mode == "T") {
    if (!config.T) throw ConfigError("config.horizon.T: mode T needs a horizon T");
    limit = fixed_time_value(net, config.k, *config.T, tol, N_max, variant, opts);
  } else {
    throw ConfigError(path + ".mode: unknown mode '" + mode + "' (expected finite, limit, standard or T)");
  }
  if (limit) {
    doc["convergence"] = convergence_json(*limit);
    doc["converged"] = limit->converged;
    doc["achieved_N"] = limit->achieved_N;
    print_convergence(log, *limit);
    table = std::move(limit->table);
  }
  doc["tau"] = table.tau;
  doc["N"] = table.horizon();

  json starts = json::array();
  double worst = 0.0;
  for (const StartSpec& st : resolve_starts(config, *net)) {
    const double v = table.value(st.robber, st.cops);
    worst = std::max(worst, v);
    starts.push_back({{"robber", st.robber}, {"cops", st.cops}, {"value", v}});
  }
  doc["starts"] = starts;
  doc["worst"] = worst;
  write_json(out / "solve.json", doc);
  log << "worst-start value: " << format_real(worst) << " over " << starts.size() << " starts\n";
  return 0;
}

int cmd_play(const RunConfig& config, const std::filesystem::path& out, std::ostream& log) {
  const std::string path = "config.play";
  const json& p = config.play;
  const json params = p.value("params", json::object());
  json robber_params = params.value("robber", json::object());
  json cop_params = params.value("cops", json::object());
  if (!robber_params.contains("seed")) robber_params["seed"] = config.seed;

  const json& r_name = require(p, "robber", path);
  const json& c_name = require(p, "cops", path);
  if (!r_name.is_string() || !c_name.is_string()) throw ConfigError(path + ": strategy names must be strings");
  const Strategy robber = lookup_strategy(r_name.get<std::string>(), robber_params);
  const Strategy cops = lookup_strategy(c_name.get<std::string>(), cop_params);

  const json& start = require(p, "start", path);
  Position pos;
  pos.robber = point_from_json(*config.space, require(start, "robber", path + ".start"), path + ".start.robber");
  const json& cl = require(start, "cops", path + ".start");
  if (!cl.is_array() || cl.empty()) throw ConfigError(path + ".start.cops: expected a non-empty list");
  for (std::size_t i = 0; i < cl.size(); ++i) {
    pos.cops.push_back(point_from_json(*config.space, cl[i], path + ".start.cops[" + std::to_string(i) + "]"));
  }
  const int N = int_or(p, "N", config.horizon(), path);
  const double kappa = real_or(p, "kappa", kArenaKappa, path);

  const Trajectory traj = run_game(*config.space, robber, cops, pos, config.schedule(), N, kappa);
  const double value = trajectory_value(*config.space, traj);
  write_file(out / "trajectory.jsonl", trajectory_jsonl(*config.space, traj));
  write_file(out / "trajectory.csv", trajectory_csv(*config.space, traj));
  const std::vector<double> gaps = trajectory_gaps(*config.space, traj);
  json doc = {{"command", "play"},
              {"config", config.snapshot},
              {"robber", robber.name},
              {"cops", cops.name},
              {"steps", traj.steps.size() - 1},
              {"captured", traj.captured},
              {"min_gap", *std::min_element(gaps.begin(), gaps.end())},
              {"value", value}};
  if (traj.captured) doc["capture_step"] = traj.steps.back().n;
  write_json(out / "play.json", doc);
  log << "trajectory value: " << format_real(value) << "\n";
  if (traj.captured) log << "captured at step " << traj.steps.back().n << "\n";
  return 0;
}

int cmd_copnumber(const RunConfig& config, const std::filesystem::path& out, std::ostream& log) {
  const std::string path = "config.copnumber";
  const json& c = config.copnumber;
  const NetPtr net = build_net(config.space, config.h, config.net_budget);
  CopNumberOptions opts;
  opts.k_max = int_or(c, "k_max", 3, path);
  if (c.contains("theta") && !c.at("theta").is_null()) opts.theta = parse_real(c.at("theta"), path + ".theta");
  opts.strong = bool_or(c, "strong", false, path);
  opts.family = family_from(c, path);
  opts.tol = real_or(c, "tol", 1e-9, path);
  opts.N_max = int_or(c, "N_max", 64, path);
  SolveOptions solve;
  solve.layer_budget = config.layer_budget;

  const CopNumberResult r = cop_number_estimate(net, opts, solve);
  json worst = json::array();
  for (auto [k, v] : r.worst) {
    worst.push_back({{"k", k}, {"worst", v}});
    log << "k = " << k << ": worst-start value " << format_real(v) << "\n";
  }
  const std::string result = r.k ? std::to_string(*r.k) : "> " + std::to_string(opts.k_max);
  json doc = {{"command", "copnumber"}, {"config", config.snapshot}, {"net", net_json(*net, config.h)},
              {"strong", opts.strong},  {"theta", r.theta},          {"result", result},
              {"worst", worst}};
  doc["k"] = r.k ? json(*r.k) : json(nullptr);
  write_json(out / "copnumber.json", doc);
  log << "cop number estimate: " << result << " (theta " << format_real(r.theta) << ")\n";
  return 0;
}

int cmd_verify(const json& pack, const std::filesystem::path& out, std::ostream& log) {
  const std::vector<LemmaReport> reports = run_suite(load_pack(pack));
  bool all = true;
  for (const LemmaReport& r : reports) {
    all = all && r.pass;
    log << (r.pass ? "PASS " : "FAIL ") << r.lemma << " [" << r.instance << "] violation " << format_real(r.violation)
        << " observed " << format_real(r.observed) << " tolerance " << format_real(r.tolerance) << "\n";
  }
  write_json(out / "verify.json", reports_to_json(reports));
  log << (all ? "all lemma checks passed\n" : "some lemma checks failed\n");
  return all ? 0 : 1;
}

int run_command(const std::string& command, const std::string& config_path, const std::filesystem::path& out,
                std::optional<std::uint64_t> seed, std::ostream& log, std::ostream& err) {
  try {
    if (command == "verify") {
      if (config_path == "default") return cmd_verify("default", out, log);
      json doc = read_json_file(config_path);
      json pack = doc;
      if (doc.is_object() && doc.contains("verify")) pack = require(doc.at("verify"), "pack", "config.verify");
      // A pack given as a path is read relative to the config file.
      if (pack.is_string() && pack != "default") {
        pack = read_json_file(std::filesystem::path(config_path).parent_path() / pack.get<std::string>());
      }
      return cmd_verify(pack, out, log);
    }
    const RunConfig config = RunConfig::from_json(read_json_file(config_path), seed);
    if (command == "solve") return cmd_solve(config, out, log);
    if (command == "play") return cmd_play(config, out, log);
    if (command == "copnumber") return cmd_copnumber(config, out, log);
    err << "error: unknown command '" << command << "'\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "error: malformed config: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace pursuit
