#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pursuit/error.hpp"
#include "pursuit/solver.hpp"

namespace pursuit {
namespace {

double sup_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

// Layers for a shift-invariant schedule do not depend on N, so one sweep
// serves every doubling.
LimitResult limit_uniform(NetPtr net, int k, double t, double tol, int N_max, Variant variant,
                          const SolveOptions& options) {
  LimitResult out;
  ValueTable& table = out.table;
  table.net = net;
  table.k = k;
  table.variant = variant;
  table.index = checked_index(*net, k, options.layer_budget);

  const ReachSet reach(*net, t);
  const std::vector<double> base = base_layer(*net, table.index);
  std::vector<double> cur = base;
  std::vector<double> next(cur.size());
  std::vector<double> snapshot;
  out.decrement = std::numeric_limits<double>::infinity();

  int N = 0;
  for (int target = 1;; target = std::min(2 * target, N_max)) {
    for (; N < target; ++N) {
      game_step(table.index, reach, cur, next, nullptr, options.parallel);
      if (variant == Variant::intermediate) apply_floor(next, base, options.parallel);
      std::swap(cur, next);
    }
    if (!snapshot.empty()) {
      out.decrement = sup_diff(cur, snapshot);
      out.log.emplace_back(N, out.decrement);
      if (out.decrement < tol) {
        out.converged = true;
        break;
      }
    }
    if (N >= N_max) break;
    snapshot = cur;
  }
  out.achieved_N = N;
  table.tau.assign(N, t);
  table.values = std::move(cur);
  return out;
}

// Re-solves from scratch at every doubling of N.
template <class SolveAt>
LimitResult doubling(double tol, int N_max, const SolveAt& solve_at) {
  LimitResult out;
  out.decrement = std::numeric_limits<double>::infinity();
  std::vector<double> previous;
  for (int N = 1;; N = std::min(2 * N, N_max)) {
    ValueTable table = solve_at(N);
    if (!previous.empty()) {
      out.decrement = sup_diff(table.values, previous);
      out.log.emplace_back(N, out.decrement);
    }
    previous = table.values;
    out.table = std::move(table);
    out.achieved_N = N;
    if (out.decrement < tol) {
      out.converged = true;
      break;
    }
    if (N >= N_max) break;
  }
  return out;
}

}  // namespace

LimitResult limit_value(NetPtr net, int k, const Agility& tau, double tol, int N_max, Variant variant,
                        const SolveOptions& options) {
  if (!net) throw ConfigError("limit_value needs a net");
  if (!(tol > 0.0)) throw ConfigError("limit_value tolerance must be positive");
  if (N_max < 1) throw ConfigError("N_max must be >= 1");
  if (auto len = tau.length(); len && *len < N_max) {
    throw ConfigError("agility prefix has " + std::to_string(*len) + " steps, N_max is " + std::to_string(N_max));
  }
  if (tau.is_shift_invariant() && !options.policy && !options.keep_layers) {
    return limit_uniform(std::move(net), k, tau(1), tol, N_max, variant, options);
  }

  return doubling(tol, N_max, [&](int N) { return solve_finite(net, k, tau.prefix(N), variant, options).table; });
}

LimitResult fixed_time_value(NetPtr net, int k, double T, double tol, int N_max, Variant variant,
                             const SolveOptions& options) {
  if (!net) throw ConfigError("fixed-time solve needs a net");
  if (!(T > 0.0) || !std::isfinite(T)) throw ConfigError("horizon T must be positive");
  if (!(tol > 0.0)) throw ConfigError("tolerance must be positive");
  if (N_max < 1) throw ConfigError("N_max must be >= 1");
  return doubling(tol, N_max, [&](int N) {
    return solve_finite(net, k, std::vector<double>(N, T / N), variant, options).table;
  });
}

std::vector<Agility> default_family(const Net& net) {
  const double h = net.covering_radius();
  return {Agility::uniform(2 * h), Agility::uniform(4 * h), Agility::uniform(8 * h)};
}

StandardResult standard_value(NetPtr net, int k, const std::vector<Agility>& family, double tol, int N_max,
                              Variant variant, const SolveOptions& options) {
  if (family.empty()) throw ConfigError("agility family is empty");
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!family[i].in_standard_set()) {
      throw ConfigError("family member " + std::to_string(i) + " is not a standard agility (needs positive steps " +
                        "with divergent sum)");
    }
  }
  StandardResult out;
  for (const Agility& a : family) {
    LimitResult r = limit_value(net, k, a, tol, N_max, variant, options);
    if (out.values.empty()) {
      out.values = r.table.values;
    } else {
      for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = std::max(out.values[i], r.table.values[i]);
    }
    out.members.push_back(std::move(r));
  }
  return out;
}

CopNumberResult cop_number_estimate(NetPtr net, const CopNumberOptions& options, const SolveOptions& solve) {
  if (!net) throw ConfigError("cop number needs a net");
  if (options.k_max < 1) throw ConfigError("k_max must be >= 1");
  const std::vector<Agility> family = options.family.empty() ? default_family(*net) : options.family;
  CopNumberResult out;
  if (options.strong) {
    out.theta = 0.0;
  } else if (options.theta) {
    if (!(*options.theta >= 0.0)) throw ConfigError("theta must be >= 0");
    out.theta = *options.theta;
  } else {
    double first = 0.0;
    for (const Agility& a : family) first = std::max(first, a(1));
    out.theta = 2.0 * net->covering_radius() + first;
  }
  for (int k = 1; k <= options.k_max; ++k) {
    const StandardResult r = standard_value(net, k, family, options.tol, options.N_max, Variant::intermediate, solve);
    const double worst = *std::max_element(r.values.begin(), r.values.end());
    out.worst.emplace_back(k, worst);
    if (worst <= out.theta) {
      out.k = k;
      break;
    }
  }
  return out;
}

}  // namespace pursuit
