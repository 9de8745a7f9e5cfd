#include <sstream>
#include <string>

#include "pursuit/error.hpp"
#include "pursuit/solver.hpp"

namespace pursuit {
namespace {

constexpr double kOnNet = 1e-12;
constexpr double kBudgetSlack = 1e-9;

int exact_index(const Net& net, const Point& p) {
  const std::size_t i = net.nearest(p);
  return net.space().distance(p, net.point(i)) <= kOnNet ? static_cast<int>(i) : -1;
}

std::string describe(int r, const std::vector<int>& cops) {
  std::ostringstream s;
  s << "(r=" << r << ", c=[";
  for (std::size_t i = 0; i < cops.size(); ++i) s << (i ? "," : "") << cops[i];
  s << "])";
  return s.str();
}

void require_on_net(int r, const std::vector<int>& cops, int n, const char* side) {
  bool ok = r >= 0;
  for (int c : cops) ok = ok && c >= 0;
  if (!ok) {
    throw PlayoutError(std::string(side) + " policy undefined at step " + std::to_string(n) + ": position " +
                       describe(r, cops) + " is off the net");
  }
}

void check_budget(const Space& space, const Point& from, const Point& to, double t, int n, const char* side) {
  const double d = space.distance(from, to);
  if (d > t + kBudgetSlack) {
    throw StrategyFault(std::string(side) + " moved " + std::to_string(d) + " at step " + std::to_string(n) +
                        " with budget " + std::to_string(t));
  }
}

}  // namespace

Trajectory policy_playout(const Net& net, const Controller& robber, const Controller& cops, int robber_start,
                          std::vector<int> cop_starts, const std::vector<double>& tau, double kappa) {
  const Space& space = net.space();
  const auto n_points = static_cast<int>(net.size());
  if (robber_start < 0 || robber_start >= n_points) throw IndexError("robber start outside the net");
  for (int c : cop_starts) {
    if (c < 0 || c >= n_points) throw IndexError("cop start outside the net");
  }
  if (cop_starts.empty()) throw ArityError("a playout needs at least one cop");

  const int N = static_cast<int>(tau.size());
  int r = robber_start;
  std::vector<int> c = std::move(cop_starts);
  Position pos;
  pos.robber = net.point(r);
  for (int i : c) pos.cops.push_back(net.point(i));

  Trajectory out;
  out.kappa = kappa;
  out.steps.push_back({0, 0.0, pos});
  if (robber_cop_distance(space, pos) <= kappa) {
    out.captured = true;
    return out;
  }

  for (int n = 1; n <= N; ++n) {
    const double t = tau[n - 1];
    const int m = N - n + 1;

    if (const auto* p = std::get_if<const Policy*>(&robber)) {
      require_on_net(r, c, n, "robber");
      if (static_cast<int>(c.size()) != (*p)->k) throw ArityError("robber policy solved for a different cop count");
      r = (*p)->robber_move(m, (*p)->index.encode(r, c));
      pos.robber = net.point(r);
    } else {
      const Strategy& s = std::get<Strategy>(robber);
      Point dest = s.rule(space, pos, t, n).at(0);
      check_budget(space, pos.robber, dest, t, n, "robber");
      pos.robber = std::move(dest);
      r = exact_index(net, pos.robber);
    }

    if (const auto* p = std::get_if<const Policy*>(&cops)) {
      require_on_net(r, c, n, "cop");
      if (static_cast<int>(c.size()) != (*p)->k) throw ArityError("cop policy solved for a different cop count");
      c = (*p)->cop_moves(m, r, c);
      for (std::size_t i = 0; i < c.size(); ++i) pos.cops[i] = net.point(c[i]);
    } else {
      const Strategy& s = std::get<Strategy>(cops);
      std::vector<Point> dest = s.rule(space, pos, t, n);
      if (dest.size() != pos.cops.size()) throw ArityError("cop strategy returned the wrong number of moves");
      for (std::size_t i = 0; i < dest.size(); ++i) {
        check_budget(space, pos.cops[i], dest[i], t, n, "cop");
        pos.cops[i] = std::move(dest[i]);
        c[i] = exact_index(net, pos.cops[i]);
      }
    }

    out.steps.push_back({n, t, pos});
    if (robber_cop_distance(space, pos) <= kappa) {
      out.captured = true;
      break;
    }
  }
  return out;
}

}  // namespace pursuit
