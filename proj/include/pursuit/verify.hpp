#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pursuit/net.hpp"
#include "pursuit/solver.hpp"

namespace pursuit {

// Plain minimax over unsorted cop tuples, straight from the distance matrix.
// No tables and no symmetry reduction; only alpha-beta cut-offs.
double oracle_value(const Net& net, int robber, const std::vector<int>& cops, const std::vector<double>& tau,
                    Variant variant);

// oracle_value at every canonical tuple of `index`.
std::vector<double> oracle_table(const Net& net, const TupleIndex& index, const std::vector<double>& tau,
                                 Variant variant);

inline constexpr std::size_t kSuiteMaxNet = 12;
inline constexpr int kSuiteMaxK = 2;
inline constexpr int kSuiteMaxN = 6;

inline const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids = {
      "L1-equality",         "step-monotone",     "pos-continuity", "agility-continuity",
      "subdivision-monotone", "volatile-sandwich", "minmax-gap",     "oracle-equivalence"};
  return ids;
}

struct LemmaReport {
  std::string lemma;
  std::string instance;
  double violation = 0.0;  // amount by which the inequality failed, 0 if it held
  double observed = 0.0;   // the lemma-specific quantity being bounded
  double tolerance = 0.0;
  bool pass = true;

  nlohmann::json to_json() const;
};

// One small game for the suite. Every field except `name`, `space`, `h`,
// `k` and `tau` has a default.
struct Instance {
  std::string name;
  nlohmann::json space;
  double h = 0.0;
  int k = 1;
  std::vector<double> tau;
  std::vector<double> alphas = {0.5};          // subdivision ratios
  std::vector<std::vector<double>> eps;        // volatile schedules
  std::optional<double> coarse_h;              // coarse net for the gap probe
  std::optional<int> oracle_N;                 // oracle horizon, default min(N, 3)

  static Instance from_json(const nlohmann::json& j, const std::string& path);
  nlohmann::json to_json() const;
};

std::vector<Instance> default_pack();

// "default", a list of instances, or {"instances": [...]}. ConfigError on an
// empty pack.
std::vector<Instance> load_pack(const nlohmann::json& j);

// CapacityError naming the suite limits when the instance is too large.
void check_capacity(const Instance& instance, const Net& net);

std::vector<LemmaReport> run_suite(const std::vector<Instance>& instances);

nlohmann::json reports_to_json(const std::vector<LemmaReport>& reports);

struct GapProbe {
  double gap = 0.0;  // max over starts of upper - lower
  double eps = 0.0;  // max distance from a fine point to the coarse net
  std::vector<double> upper;  // robber best response to the lifted cop policy
  std::vector<double> lower;  // cop best response to the lifted robber policy
};

// Solves on `coarse`, lifts both sides to `fine` (one-step lookahead on the
// coarse values) and evaluates each against a best response on `fine`.
// ConfigError if `coarse` is not a subset of `fine` on the same space.
GapProbe minmax_gap_probe(NetPtr fine, NetPtr coarse, int k, const std::vector<double>& tau);

}  // namespace pursuit
