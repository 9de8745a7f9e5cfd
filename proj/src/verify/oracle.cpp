#include <algorithm>
#include <limits>

#include "pursuit/verify.hpp"

namespace pursuit {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSlack = 1e-12;

struct Search {
  const Net& net;
  const std::vector<double>& tau;
  Variant variant;

  double gap(int r, const std::vector<int>& cops) const {
    double d = kInf;
    for (int c : cops) d = std::min(d, net.distance(r, c));
    return d;
  }

  std::vector<int> reach(int from, double t) const {
    std::vector<int> out;
    for (std::size_t j = 0; j < net.size(); ++j) {
      if (static_cast<int>(j) == from || net.distance(from, j) <= t + kSlack) out.push_back(static_cast<int>(j));
    }
    return out;
  }

  // Value with `n` steps played so far.
  double value(int r, const std::vector<int>& cops, std::size_t n) const {
    const double here = gap(r, cops);
    if (n == tau.size()) return here;
    const double t = tau[n];
    const std::vector<int> robber_moves = reach(r, t);
    std::vector<std::vector<int>> cop_moves;
    for (int c : cops) cop_moves.push_back(reach(c, t));

    double best = -kInf;
    for (int r2 : robber_moves) {
      double worst = kInf;
      std::vector<std::size_t> pos(cops.size(), 0);
      std::vector<int> next(cops.size());
      while (true) {
        for (std::size_t i = 0; i < cops.size(); ++i) next[i] = cop_moves[i][pos[i]];
        worst = std::min(worst, value(r2, next, n + 1));
        // The robber already has `best`; this reply cannot beat it.
        if (worst <= best) break;
        std::size_t i = cops.size();
        while (i > 0 && pos[i - 1] + 1 == cop_moves[i - 1].size()) pos[--i] = 0;
        if (i == 0) break;
        ++pos[i - 1];
      }
      best = std::max(best, worst);
    }
    return variant == Variant::intermediate ? std::min(here, best) : best;
  }
};

}  // namespace

double oracle_value(const Net& net, int robber, const std::vector<int>& cops, const std::vector<double>& tau,
                    Variant variant) {
  return Search{net, tau, variant}.value(robber, cops, 0);
}

std::vector<double> oracle_table(const Net& net, const TupleIndex& index, const std::vector<double>& tau,
                                 Variant variant) {
  std::vector<double> out(index.size());
  for (std::size_t idx = 0; idx < index.size(); ++idx) {
    const auto set = index.cop_set(index.rank_of(idx));
    out[idx] = oracle_value(net, index.robber_of(idx), {set.begin(), set.end()}, tau, variant);
  }
  return out;
}

}  // namespace pursuit
