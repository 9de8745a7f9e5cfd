#include <algorithm>
#include <array>
#include <limits>

#include "pursuit/error.hpp"
#include "pursuit/io.hpp"
#include "pursuit/verify.hpp"

namespace pursuit {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Coarse strategies acting on fine positions. Each lifted player looks one
// step ahead on the fine net and scores the outcome by the coarse value of
// the snapped position; ties go to the better real gap, so a player whose
// coarse game is decided still closes (or opens) the distance that the
// coarse net cannot see.
struct Lift {
  const Net& fine;
  const TupleIndex& coarse_index;
  const std::vector<std::vector<double>>& layers;  // coarse, by remaining steps
  std::vector<int> snap;                           // fine index -> nearest coarse index

  double coarse_value(int m, int r, std::span<const int> cops) const {
    std::vector<int> c;
    for (int x : cops) c.push_back(snap[x]);
    return layers[m][coarse_index.encode(snap[r], c)];
  }

  double gap(int r, std::span<const int> cops) const {
    double g = kInf;
    for (int c : cops) g = std::min(g, fine.distance(r, c));
    return g;
  }

  // Calls fn on every cop tuple reachable from `cops`, slot 0 slowest.
  template <class Fn>
  static void for_each_reply(const ReachSet& reach, std::span<const int> cops, Fn&& fn) {
    const std::size_t k = cops.size();
    std::vector<std::size_t> pos(k, 0);
    std::vector<int> c2(k);
    while (true) {
      for (std::size_t i = 0; i < k; ++i) c2[i] = reach(cops[i])[pos[i]];
      fn(std::span<const int>(c2));
      std::size_t i = k;
      while (i > 0 && pos[i - 1] + 1 == reach(cops[i - 1]).size()) pos[--i] = 0;
      if (i == 0) break;
      ++pos[i - 1];
    }
  }

  int robber(int m, const ReachSet& reach, int r, std::span<const int> cops) const {
    int best = r;
    std::array<double, 2> best_key = {-kInf, -kInf};
    for (int r2 : reach(r)) {
      double v = kInf;
      for_each_reply(reach, cops, [&](std::span<const int> c2) { v = std::min(v, coarse_value(m - 1, r2, c2)); });
      const std::array<double, 2> key = {v, gap(r2, cops)};
      if (key > best_key) {
        best_key = key;
        best = r2;
      }
    }
    return best;
  }

  std::vector<int> cops(int m, const ReachSet& reach, int r2, std::span<const int> cops) const {
    std::vector<int> best(cops.begin(), cops.end());
    std::array<double, 2> best_key = {kInf, kInf};
    for_each_reply(reach, cops, [&](std::span<const int> c2) {
      const std::array<double, 2> key = {coarse_value(m - 1, r2, c2), gap(r2, c2)};
      if (key < best_key) {
        best_key = key;
        best.assign(c2.begin(), c2.end());
      }
    });
    return best;
  }
};

}  // namespace

GapProbe minmax_gap_probe(NetPtr fine, NetPtr coarse, int k, const std::vector<double>& tau) {
  if (!fine || !coarse) throw ConfigError("gap probe needs two nets");
  if (space_to_json(fine->space()) != space_to_json(coarse->space())) {
    throw ConfigError("coarse and fine nets live on different spaces");
  }
  const int N = static_cast<int>(tau.size());
  const std::vector<int> embed = coarse->embed_into(*fine);
  SolveOptions opts;
  opts.keep_layers = true;
  opts.parallel = false;
  const ValueTable solved = solve_finite(coarse, k, tau, Variant::intermediate, opts).table;

  Lift lift{*fine, solved.index, solved.layers, {}};
  GapProbe out;
  for (std::size_t f = 0; f < fine->size(); ++f) {
    const int c = static_cast<int>(coarse->nearest(fine->point(f)));
    lift.snap.push_back(c);
    out.eps = std::max(out.eps, fine->distance(f, embed[c]));
  }

  const TupleIndex index = checked_index(*fine, k, kDefaultLayerBudget);
  const std::vector<double> base = base_layer(*fine, index);
  const std::size_t sets = index.cop_sets();
  std::vector<double> upper = base;
  std::vector<double> lower = base;
  std::vector<double> next(base.size());

  for (int m = 1; m <= N; ++m) {
    const ReachSet reach(*fine, tau[N - m]);

    // Robber maximizes against the lifted cops.
    for (std::size_t idx = 0; idx < index.size(); ++idx) {
      const auto c = index.cop_set(idx % sets);
      double best = -kInf;
      for (int r2 : reach(idx / sets)) {
        const std::vector<int> c2 = lift.cops(m, reach, r2, c);
        best = std::max(best, upper[index.encode(r2, c2)]);
      }
      next[idx] = std::min(base[idx], best);
    }
    std::swap(upper, next);

    // Cops minimize against the lifted robber.
    for (std::size_t idx = 0; idx < index.size(); ++idx) {
      const auto c = index.cop_set(idx % sets);
      const int r2 = lift.robber(m, reach, static_cast<int>(idx / sets), c);
      double worst = kInf;
      Lift::for_each_reply(reach, c, [&](std::span<const int> c2) { worst = std::min(worst, lower[index.encode(r2, c2)]); });
      next[idx] = std::min(base[idx], worst);
    }
    std::swap(lower, next);
  }

  for (std::size_t i = 0; i < upper.size(); ++i) out.gap = std::max(out.gap, upper[i] - lower[i]);
  out.upper = std::move(upper);
  out.lower = std::move(lower);
  return out;
}

}  // namespace pursuit
