#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "pursuit/cli.hpp"
#include "pursuit/io.hpp"
#include "pursuit/net.hpp"

using namespace pursuit;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = 0;
  std::string log, err;
  fs::path out;
};

// Fresh scratch directory per test.
fs::path scratch() {
  const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
  const fs::path dir = fs::temp_directory_path() / "pursuit_cli_tests" / info->name();
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path write_config(const fs::path& dir, const std::string& name, const json& j) {
  const fs::path p = dir / name;
  std::ofstream(p) << j.dump(2);
  return p;
}

Outcome run(const std::string& cmd, const fs::path& config, const fs::path& out,
            std::optional<std::uint64_t> seed = std::nullopt) {
  std::ostringstream log, err;
  Outcome r;
  r.code = run_command(cmd, config.string(), out, seed, log, err);
  r.log = log.str();
  r.err = err.str();
  r.out = out;
  return r;
}

json read(const fs::path& p) {
  std::ifstream in(p);
  return json::parse(in);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

json cycle_space(const std::string& edge) {
  return {{"type", "metric_graph"},
          {"vertices", 2},
          {"edges", {{{"u", 0}, {"v", 1}, {"length", edge}}, {{"u", 1}, {"v", 0}, {"length", edge}}}}};
}

json interval_space(const std::string& len) {
  return {{"type", "metric_graph"}, {"vertices", 2}, {"edges", {{{"u", 0}, {"v", 1}, {"length", len}}}}};
}

const fs::path kConfigs = fs::path(PURSUIT_SOURCE_DIR) / "configs";

}  // namespace

TEST(Solve, CycleValuesDependOnlyOnSeparation) {
  const fs::path dir = scratch();
  const json cfg = {{"space", cycle_space("1")}, {"h", 0.25}, {"k", 1},
                    {"agility", {{"kind", "uniform"}, {"t", 0.25}}}, {"horizon", {{"N", 3}}}};
  const Outcome r = run("solve", write_config(dir, "c.json", cfg), dir / "out");
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = read(dir / "out" / "solve.json");
  const NetPtr net = build_net(space_from_json(cfg["space"]), 0.25);
  ASSERT_EQ(net->size(), 8u);
  ASSERT_EQ(doc["starts"].size(), 64u);
  // Rotations of the net carry any start to one with the same separation.
  std::map<long, double> by_sep;
  for (const json& s : doc["starts"]) {
    const long sep = std::lround(net->distance(s["robber"], s["cops"][0]) * 8);
    const double v = s["value"];
    auto [it, fresh] = by_sep.emplace(sep, v);
    if (!fresh) EXPECT_EQ(it->second, v) << "separation " << sep / 8.0;
  }
  EXPECT_EQ(by_sep.size(), 5u);
  EXPECT_NE(r.log.find("worst-start value"), std::string::npos);
}

TEST(Solve, ZeroHorizonIsDistance) {
  const fs::path dir = scratch();
  const json cfg = {{"space", interval_space("1")}, {"h", 0.25}, {"k", 1},
                    {"agility", {{"kind", "uniform"}, {"t", 0.25}}}, {"horizon", {{"N", 0}}}};
  const Outcome r = run("solve", write_config(dir, "c.json", cfg), dir / "out");
  ASSERT_EQ(r.code, 0) << r.err;
  const NetPtr net = build_net(space_from_json(cfg["space"]), 0.25);
  const json doc = read(dir / "out" / "solve.json");
  ASSERT_EQ(doc["starts"].size(), net->size() * net->size());
  for (const json& s : doc["starts"]) {
    EXPECT_EQ(s["value"].get<double>(), net->distance(s["robber"], s["cops"][0]));
  }
}

TEST(Solve, AllStartsOnThreePointInterval) {
  const fs::path dir = scratch();
  const Outcome r = run("solve", kConfigs / "interval_finite.json", dir);
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = read(dir / "solve.json");
  EXPECT_EQ(doc["net"]["size"], 3);
  EXPECT_EQ(doc["starts"].size(), 9u);
}

TEST(Solve, ExplicitStartsAreCanonical) {
  const fs::path dir = scratch();
  const json cfg = {{"space", cycle_space("1")},
                    {"h", 0.25},
                    {"k", 2},
                    {"agility", {{"kind", "uniform"}, {"t", 0.25}}},
                    {"horizon", {{"N", 1}}},
                    {"starts", {{{"robber", 0}, {"cops", {5, 2}}}}}};
  const Outcome r = run("solve", write_config(dir, "c.json", cfg), dir);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read(dir / "solve.json")["starts"][0]["cops"], json({2, 5}));
}

TEST(Solve, TModeSplitsHorizon) {
  const fs::path dir = scratch();
  const json cfg = {{"space", cycle_space("1")}, {"h", 0.25}, {"k", 1},
                    {"horizon", {{"T", 1}, {"N", 2}}}, {"solve", {{"mode", "T"}, {"N_max", 8}}}};
  const Outcome r = run("solve", write_config(dir, "c.json", cfg), dir);
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = read(dir / "solve.json");
  const std::vector<double> tau = doc["tau"];
  double total = 0.0;
  for (double t : tau) total += t;
  EXPECT_DOUBLE_EQ(total, 1.0);
  for (double t : tau) EXPECT_EQ(t, tau.front());
}

TEST(Solve, RoundTripFromResult) {
  const fs::path dir = scratch();
  const json cfg = {{"space", cycle_space("1")}, {"h", 0.25}, {"k", 1},
                    {"agility", {{"kind", "uniform"}, {"t", 0.25}}}, {"horizon", {{"N", 3}}},
                    {"solve", {{"variant", "intermediate"}, {"policy", true}}}};
  ASSERT_EQ(run("solve", write_config(dir, "c.json", cfg), dir / "a").code, 0);
  const Outcome again = run("solve", dir / "a" / "solve.json", dir / "b");
  ASSERT_EQ(again.code, 0) << again.err;
  EXPECT_EQ(slurp(dir / "a" / "solve.json"), slurp(dir / "b" / "solve.json"));
}

TEST(Play, AntipodalNeverBelowPiMinusStep) {
  const fs::path dir = scratch();
  const Outcome r = run("play", kConfigs / "circle_play.json", dir);
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = read(dir / "play.json");
  EXPECT_GE(doc["value"].get<double>(), std::numbers::pi - 0.1);
  EXPECT_FALSE(doc["captured"].get<bool>());
  EXPECT_NE(r.log.find("trajectory value"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir / "trajectory.jsonl"));
}

TEST(Play, StandStillIsCaught) {
  const fs::path dir = scratch();
  const json cfg = {{"space", interval_space("1")},
                    {"h", 0.25},
                    {"agility", {{"kind", "uniform"}, {"t", 0.25}}},
                    {"horizon", {{"N", 20}}},
                    {"play", json::parse(R"({"robber": "stand_still_robber", "cops": "follower_cop",
                                             "start": {"robber": {"edge": 0, "offset": 1},
                                                       "cops": [{"edge": 0, "offset": 0}]}})")}};
  const Outcome r = run("play", write_config(dir, "c.json", cfg), dir);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.log.find("captured at step 4"), std::string::npos) << r.log;
  EXPECT_EQ(read(dir / "play.json")["capture_step"], 4);
}

// The greedy robber on the ball is caught; the gap trends down and stays
// positive until the capture row.
TEST(Play, BallGreedyVersusRadialCsv) {
  const fs::path dir = scratch();
  const Outcome r = run("play", kConfigs / "ball_play.json", dir);
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream csv(dir / "trajectory.csv");
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line.rfind("n,t,gap", 0), 0u) << line;
  std::vector<double> gaps;
  while (std::getline(csv, line)) {
    std::stringstream s(line);
    std::string n, t, g;
    std::getline(s, n, ',');
    std::getline(s, t, ',');
    std::getline(s, g, ',');
    gaps.push_back(std::stod(g));
  }
  ASSERT_GE(gaps.size(), 10u);
  EXPECT_LT(gaps.back(), gaps.front());
  for (std::size_t i = 0; i + 1 < gaps.size(); ++i) EXPECT_GT(gaps[i], 0.0) << "row " << i;
  const std::size_t half = gaps.size() / 2;
  double first = 0, second = 0;
  for (std::size_t i = 0; i < half; ++i) first += gaps[i] / half;
  for (std::size_t i = half; i < 2 * half; ++i) second += gaps[i] / half;
  EXPECT_LT(second, first);
}

TEST(Play, SeedIsRecordedAndReproducible) {
  const fs::path dir = scratch();
  ASSERT_EQ(run("play", kConfigs / "ball_play.json", dir / "a", 99).code, 0);
  EXPECT_EQ(read(dir / "a" / "play.json")["config"]["seed"], 99);
  ASSERT_EQ(run("play", dir / "a" / "play.json", dir / "b").code, 0);
  EXPECT_EQ(slurp(dir / "a" / "trajectory.jsonl"), slurp(dir / "b" / "trajectory.jsonl"));
  EXPECT_EQ(slurp(dir / "a" / "play.json"), slurp(dir / "b" / "play.json"));
}

TEST(Play, UnknownStrategy) {
  const fs::path dir = scratch();
  json cfg = read(kConfigs / "circle_play.json");
  cfg["play"]["robber"] = "teleporting_robber";
  const Outcome r = run("play", write_config(dir, "c.json", cfg), dir);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("teleporting_robber"), std::string::npos) << r.err;
}

TEST(Copnumber, IntervalNeedsOneCop) {
  const fs::path dir = scratch();
  const json cfg = {{"space", interval_space("1")}, {"h", 0.25}, {"copnumber", {{"k_max", 2}, {"N_max", 16}}}};
  const Outcome r = run("copnumber", write_config(dir, "c.json", cfg), dir);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read(dir / "copnumber.json")["k"], 1);
}

TEST(Verify, DefaultPackPasses) {
  const fs::path dir = scratch();
  const Outcome r = run("verify", "default", dir);
  EXPECT_EQ(r.code, 0) << r.log;
  EXPECT_NE(r.log.find("all lemma checks passed"), std::string::npos);
  EXPECT_TRUE(read(dir / "verify.json").is_array());
}

TEST(Verify, OversizePack) {
  const fs::path dir = scratch();
  const json pack = {{"instances",
                      {{{"name", "big"}, {"space", interval_space("3")}, {"h", 0.25}, {"k", 1}, {"tau", {0.25}}}}}};
  const Outcome r = run("verify", write_config(dir, "p.json", pack), dir);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("12"), std::string::npos) << r.err;
}

TEST(Verify, EmptyPack) {
  const fs::path dir = scratch();
  const Outcome r = run("verify", write_config(dir, "p.json", json{{"instances", json::array()}}), dir);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("no instances"), std::string::npos) << r.err;
}

TEST(Config, MalformedFieldsNamePath) {
  const fs::path dir = scratch();
  const json good = read(kConfigs / "interval_finite.json");
  const std::vector<std::pair<std::string, json>> cases = {
      {"config.h", [&] { json j = good; j.erase("h"); return j; }()},
      {"config.agility.t", [&] { json j = good; j["agility"] = {{"kind", "uniform"}}; return j; }()},
      {"config.k", [&] { json j = good; j["k"] = "two"; return j; }()},
      {"config.horizon.N", [&] { json j = good; j["horizon"] = {{"T", 1}}; return j; }()},
      {"config.horizon.T", [&] { json j = good; j["horizon"] = {{"T", 0}, {"N", 2}}; return j; }()},
      {"config.space", [&] { json j = good; j["space"]["type"] = "torus"; return j; }()},
      {"config.starts[0].robber", [&] { json j = good; j["starts"] = {{{"robber", 9}, {"cops", {0}}}}; return j; }()},
  };
  for (const auto& [path, cfg] : cases) {
    const Outcome r = run("solve", write_config(dir, "c.json", cfg), dir);
    EXPECT_EQ(r.code, 2) << path;
    EXPECT_NE(r.err.find(path), std::string::npos) << path << ": " << r.err;
  }
  const Outcome missing = run("solve", dir / "nope.json", dir);
  EXPECT_EQ(missing.code, 2);
  std::ofstream(dir / "bad.json") << "{ not json";
  EXPECT_EQ(run("solve", dir / "bad.json", dir).code, 2);
}

TEST(Config, CapacityExitsTwo) {
  const fs::path dir = scratch();
  json cfg = read(kConfigs / "interval_finite.json");
  cfg["net_budget"] = 2;
  const Outcome r = run("solve", write_config(dir, "c.json", cfg), dir);
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}
