#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "pursuit/error.hpp"
#include "pursuit/solver.hpp"

namespace pursuit {

std::string to_string(Variant v) { return v == Variant::endpoint ? "endpoint" : "intermediate"; }

Variant variant_from_string(const std::string& s) {
  if (s == "endpoint") return Variant::endpoint;
  if (s == "intermediate") return Variant::intermediate;
  throw ConfigError("unknown variant '" + s + "' (expected endpoint or intermediate)");
}

double ValueTable::worst() const { return *std::max_element(values.begin(), values.end()); }

int Policy::robber_move(int m, std::size_t tuple) const {
  if (m < 1 || m > horizon()) throw PlayoutError("no robber policy for " + std::to_string(m) + " remaining steps");
  return steps[m - 1].robber[tuple];
}

std::vector<int> Policy::cop_moves(int m, int robber_dest, std::span<const int> cops) const {
  if (m < 1 || m > horizon()) throw PlayoutError("no cop policy for " + std::to_string(m) + " remaining steps");
  std::vector<int> order(cops.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return cops[a] < cops[b]; });
  const std::size_t rank = index.cop_rank_unsorted(cops);
  const int* sorted = steps[m - 1].cops.data() + index.encode(robber_dest, rank) * k;
  std::vector<int> out(cops.size());
  for (std::size_t i = 0; i < order.size(); ++i) out[order[i]] = sorted[i];
  return out;
}

TupleIndex checked_index(const Net& net, int k, std::size_t budget) {
  if (k < 1 || k > TupleIndex::kMaxK) {
    throw ArityError("cop count must be in [1, " + std::to_string(TupleIndex::kMaxK) + "]");
  }
  // Count multisets in floating point first so huge requests cannot overflow.
  double sets = 1.0;
  for (int i = 0; i < k; ++i) sets = sets * static_cast<double>(net.size() + i) / (i + 1);
  const double tuples = sets * static_cast<double>(net.size());
  if (tuples > static_cast<double>(budget)) {
    throw CapacityError("value layer exceeds tuple budget",
                        tuples > 1e18 ? static_cast<std::size_t>(1e18) : static_cast<std::size_t>(std::llround(tuples)),
                        budget);
  }
  return TupleIndex(net.size(), k);
}

namespace {

void check_tau(const std::vector<double>& tau) {
  for (std::size_t i = 0; i < tau.size(); ++i) {
    if (!(tau[i] >= 0.0) || !std::isfinite(tau[i])) {
      throw ConfigError("step " + std::to_string(i + 1) + " must be finite and >= 0");
    }
  }
}

class ReachCache {
 public:
  explicit ReachCache(const Net& net) : net_(net) {}
  const ReachSet& get(double radius) {
    auto it = cache_.find(radius);
    if (it == cache_.end()) it = cache_.emplace(radius, ReachSet(net_, radius)).first;
    return it->second;
  }

 private:
  const Net& net_;
  std::map<double, ReachSet> cache_;
};

}  // namespace

SolveResult solve_finite(NetPtr net, int k, std::vector<double> tau, Variant variant, const SolveOptions& options) {
  if (!net) throw ConfigError("solve needs a net");
  check_tau(tau);
  SolveResult out;
  ValueTable& table = out.table;
  table.net = net;
  table.k = k;
  table.variant = variant;
  table.index = checked_index(*net, k, options.layer_budget);
  table.tau = std::move(tau);
  const int N = table.horizon();

  const std::vector<double> base = base_layer(*net, table.index);
  std::vector<double> cur = base;
  std::vector<double> next(cur.size());
  if (options.keep_layers) table.layers.push_back(cur);
  if (options.policy) {
    out.policy.emplace();
    out.policy->k = k;
    out.policy->index = table.index;
  }

  ReachCache reach(*net);
  for (int m = 1; m <= N; ++m) {
    StepPolicy step;
    game_step(table.index, reach.get(table.tau[N - m]), cur, next, options.policy ? &step : nullptr,
              options.parallel);
    if (variant == Variant::intermediate) apply_floor(next, base, options.parallel);
    std::swap(cur, next);
    if (options.keep_layers) table.layers.push_back(cur);
    if (options.policy) out.policy->steps.push_back(std::move(step));
  }
  table.values = std::move(cur);
  return out;
}

double Perturbation::delta(int n) const {
  double s = 0.0;
  for (int i = 0; i <= n && i < static_cast<int>(eps.size()); ++i) s += eps[i];
  return s;
}

ValueTable solve_volatile(NetPtr net, int k, std::vector<double> tau, const Perturbation& perturbation,
                          VolatileSide side, const SolveOptions& options) {
  if (!net) throw ConfigError("solve needs a net");
  check_tau(tau);
  const int N = static_cast<int>(tau.size());
  if (static_cast<int>(perturbation.eps.size()) < N + 1) {
    throw ConfigError("perturbation needs " + std::to_string(N + 1) + " entries, got " +
                      std::to_string(perturbation.eps.size()));
  }
  for (double e : perturbation.eps) {
    if (!(e >= 0.0) || !std::isfinite(e)) throw ConfigError("perturbation entries must be finite and >= 0");
  }

  ValueTable table;
  table.net = net;
  table.k = k;
  table.variant = Variant::endpoint;
  table.index = checked_index(*net, k, options.layer_budget);
  table.tau = std::move(tau);
  const bool cops_helped = side == VolatileSide::cop_guarantee;

  // The adversary acts after every step; with m steps left its budget is
  // eps_{N-m}. At the end it pulls the robber and closest cop together.
  std::vector<double> cur = base_layer(*net, table.index);
  if (cops_helped) {
    const double pull = 2.0 * perturbation.eps[N];
    for (double& v : cur) v = std::max(v - pull, 0.0);
  }
  if (options.keep_layers) table.layers.push_back(cur);
  std::vector<double> next(cur.size());

  ReachCache reach(*net);
  for (int m = 1; m <= N; ++m) {
    game_step(table.index, reach.get(table.tau[N - m]), cur, next, nullptr, options.parallel);
    const double e = perturbation.eps[N - m];
    if (e > 0.0) {
      adversary(table.index, reach.get(e), next, cur, cops_helped, options.parallel);
    } else {
      std::swap(cur, next);
    }
    if (options.keep_layers) table.layers.push_back(cur);
  }
  table.values = std::move(cur);
  return table;
}

}  // namespace pursuit
