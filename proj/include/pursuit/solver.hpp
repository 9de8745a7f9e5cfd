#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pursuit/game.hpp"
#include "pursuit/kernels.hpp"
#include "pursuit/net.hpp"
#include "pursuit/strategy.hpp"
#include "pursuit/tuples.hpp"

namespace pursuit {

// endpoint: value is d(r, c) at the end of the game.
// intermediate: additionally min with d(r, c) before every step.
enum class Variant { endpoint, intermediate };

enum class VolatileSide { cop_guarantee, robber_guarantee };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& s);

// Default cap on tuples per layer (net size times cop multisets).
inline constexpr std::size_t kDefaultLayerBudget = std::size_t{1} << 26;

struct ValueTable {
  NetPtr net;
  int k = 1;
  std::vector<double> tau;  // tau[0] is the first step
  Variant variant = Variant::endpoint;
  TupleIndex index{1, 1};
  std::vector<double> values;               // layer N
  std::vector<std::vector<double>> layers;  // layers 0..N when kept

  int horizon() const { return static_cast<int>(tau.size()); }
  double value(int robber, std::span<const int> cops) const { return values[index.encode(robber, cops)]; }
  // Largest value over all tuples: the worst start for the cops.
  double worst() const;
};

// Optimal moves for every remaining-steps count m = 1..N.
struct Policy {
  int k = 1;
  TupleIndex index{1, 1};
  std::vector<StepPolicy> steps;  // steps[m - 1]

  int horizon() const { return static_cast<int>(steps.size()); }
  int robber_move(int m, std::size_t tuple) const;
  // Cop destinations in the order the cops are given.
  std::vector<int> cop_moves(int m, int robber_dest, std::span<const int> cops) const;
};

struct SolveOptions {
  bool keep_layers = false;
  bool policy = false;
  bool parallel = true;
  std::size_t layer_budget = kDefaultLayerBudget;
};

struct SolveResult {
  ValueTable table;
  std::optional<Policy> policy;
};

// Throws CapacityError when the layer would exceed `budget` tuples.
TupleIndex checked_index(const Net& net, int k, std::size_t budget);

SolveResult solve_finite(NetPtr net, int k, std::vector<double> tau, Variant variant,
                         const SolveOptions& options = {});

// eps_n >= 0 for n = 0..N; delta(n) is the partial sum up to n (0 for n < 0).
struct Perturbation {
  std::vector<double> eps;

  double delta(int n) const;
};

ValueTable solve_volatile(NetPtr net, int k, std::vector<double> tau, const Perturbation& perturbation,
                          VolatileSide side, const SolveOptions& options = {});

struct LimitResult {
  ValueTable table;
  int achieved_N = 0;
  double decrement = 0.0;  // sup-norm change over the last doubling
  bool converged = false;
  std::vector<std::pair<int, double>> log;  // (N, decrement)
};

// Solves at N = 1, 2, 4, ... until consecutive tables differ by < tol or
// N reaches N_max. Uniform agilities reuse layers across doublings.
LimitResult limit_value(NetPtr net, int k, const Agility& tau, double tol, int N_max,
                        Variant variant = Variant::intermediate, const SolveOptions& options = {});

// Fixed total time T: solves N = 1, 2, 4, ... steps of uniform(T / N).
// Each doubling halves every step, a subdivision, so values can only grow;
// stops when the increase drops below tol or at N_max.
LimitResult fixed_time_value(NetPtr net, int k, double T, double tol, int N_max,
                             Variant variant = Variant::intermediate, const SolveOptions& options = {});

struct StandardResult {
  std::vector<double> values;  // max over the family, per tuple
  std::vector<LimitResult> members;
};

// uniform(t) for t in {2h, 4h, 8h}, h the covering radius of the net.
std::vector<Agility> default_family(const Net& net);

StandardResult standard_value(NetPtr net, int k, const std::vector<Agility>& family, double tol, int N_max,
                              Variant variant = Variant::intermediate, const SolveOptions& options = {});

struct CopNumberOptions {
  int k_max = 3;
  std::optional<double> theta;  // default 2h + largest first step of the family
  bool strong = false;          // require value exactly 0
  std::vector<Agility> family;  // default_family when empty
  double tol = 1e-9;
  int N_max = 64;
};

struct CopNumberResult {
  std::optional<int> k;  // empty: more than k_max cops needed
  double theta = 0.0;
  std::vector<std::pair<int, double>> worst;  // (k, worst-start value)
};

CopNumberResult cop_number_estimate(NetPtr net, const CopNumberOptions& options, const SolveOptions& solve = {});

// Either side of a playout: a solved Policy or a hand-written Strategy.
using Controller = std::variant<const Policy*, Strategy>;

// Robber moves first, then the cops, for N steps of tau. Policy sides need
// every visited position to be a net point. Stops on capture (gap <= kappa).
Trajectory policy_playout(const Net& net, const Controller& robber, const Controller& cops, int robber_start,
                          std::vector<int> cop_starts, const std::vector<double>& tau, double kappa = 0.0);

}  // namespace pursuit
