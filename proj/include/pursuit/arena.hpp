#pragma once

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pursuit/game.hpp"
#include "pursuit/net.hpp"
#include "pursuit/solver.hpp"
#include "pursuit/strategy.hpp"

namespace pursuit {

inline constexpr double kArenaKappa = 1e-9;

struct CatalogEntry {
  std::string name;
  Side side;
  std::string doc;  // what it does and which params it reads
  std::function<Strategy(const nlohmann::json& params)> make;
};

const std::vector<CatalogEntry>& builtin_strategies();

// CatalogError listing the valid names when `name` is unknown.
Strategy lookup_strategy(const std::string& name, const nlohmann::json& params = nlohmann::json::object());

// Smallest slope T with T - (T^p - 1)^(1/p) < eps, nudged just above the
// root. ConfigError for p <= 1 or eps <= 0.
double lift_slope(double p, double eps);

// Wraps a solved policy so it can play in run_game. Positions must sit on
// `net`; `horizon` is the N the policy was solved for.
Strategy policy_strategy(NetPtr net, const Policy& policy, Side side, int horizon);

// Robber first, then the cops, for N steps of tau. Stops once some cop is
// within kappa. StrategyFault when a move exceeds its step (1e-9 slack).
Trajectory run_game(const Space& space, const Strategy& robber, const Strategy& cops, const Position& start,
                    const Agility& tau, int N, double kappa = kArenaKappa);

// One JSON object per line: {n, t, robber, cops, gap}.
std::string trajectory_jsonl(const Space& space, const Trajectory& t);
// Header plus one row per step: n, t, gap, robber coordinates, cop coordinates.
std::string trajectory_csv(const Space& space, const Trajectory& t);

}  // namespace pursuit
