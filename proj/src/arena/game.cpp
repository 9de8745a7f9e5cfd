#include <sstream>
#include <string>

#include "pursuit/arena.hpp"
#include "pursuit/error.hpp"
#include "pursuit/io.hpp"

namespace pursuit {
namespace {

constexpr double kBudgetSlack = 1e-9;

void check_move(const Space& space, const Point& from, const Point& to, double t, int n, const char* side) {
  const double d = space.distance(from, to);
  if (d > t + kBudgetSlack) {
    throw StrategyFault(std::string(side) + " strategy moved " + format_real(d) + " at step " + std::to_string(n) +
                        " with budget " + format_real(t));
  }
}

int on_net(const Net& net, const Point& p) {
  const std::size_t i = net.nearest(p);
  return net.space().distance(p, net.point(i)) <= 1e-12 ? static_cast<int>(i) : -1;
}

}  // namespace

Strategy policy_strategy(NetPtr net, const Policy& policy, Side side, int horizon) {
  const Policy* pol = &policy;
  auto indices = [net](const Position& pos, int n, int& r, std::vector<int>& c) {
    r = on_net(*net, pos.robber);
    c.clear();
    bool ok = r >= 0;
    for (const Point& p : pos.cops) {
      c.push_back(on_net(*net, p));
      ok = ok && c.back() >= 0;
    }
    if (!ok) throw PlayoutError("policy undefined at step " + std::to_string(n) + ": position is off the net");
  };
  if (side == Side::robber) {
    return {"policy_robber", Side::robber, [=](const Space&, const Position& pos, double, int n) {
              int r = 0;
              std::vector<int> c;
              indices(pos, n, r, c);
              const int to = pol->robber_move(horizon - n + 1, pol->index.encode(r, c));
              return std::vector<Point>{net->point(to)};
            }};
  }
  return {"policy_cops", Side::cops, [=](const Space&, const Position& pos, double, int n) {
            int r = 0;
            std::vector<int> c;
            indices(pos, n, r, c);
            std::vector<Point> out;
            for (int to : pol->cop_moves(horizon - n + 1, r, c)) out.push_back(net->point(to));
            return out;
          }};
}

Trajectory run_game(const Space& space, const Strategy& robber, const Strategy& cops, const Position& start,
                    const Agility& tau, int N, double kappa) {
  if (N < 1) throw ConfigError("run_game needs N >= 1");
  if (start.cops.empty()) throw ArityError("a game needs at least one cop");
  if (robber.side != Side::robber) throw ConfigError("strategy '" + robber.name + "' does not play the robber");
  if (cops.side != Side::cops) throw ConfigError("strategy '" + cops.name + "' does not play the cops");
  space.validate(start.robber);
  for (const Point& c : start.cops) space.validate(c);

  Trajectory out;
  out.kappa = kappa;
  Position pos = start;
  out.steps.push_back({0, 0.0, pos});
  if (robber_cop_distance(space, pos) <= kappa) {
    out.captured = true;
    return out;
  }
  for (int n = 1; n <= N; ++n) {
    const double t = tau(n);
    std::vector<Point> r = robber.rule(space, pos, t, n);
    if (r.size() != 1) throw StrategyFault("robber strategy returned " + std::to_string(r.size()) + " points");
    check_move(space, pos.robber, r[0], t, n, "robber");
    pos.robber = std::move(r[0]);

    std::vector<Point> c = cops.rule(space, pos, t, n);
    if (c.size() != pos.cops.size()) {
      throw StrategyFault("cop strategy returned " + std::to_string(c.size()) + " points for " +
                          std::to_string(pos.cops.size()) + " cops");
    }
    for (std::size_t i = 0; i < c.size(); ++i) check_move(space, pos.cops[i], c[i], t, n, "cop");
    pos.cops = std::move(c);

    out.steps.push_back({n, t, pos});
    if (robber_cop_distance(space, pos) <= kappa) {
      out.captured = true;
      break;
    }
  }
  return out;
}

std::string trajectory_jsonl(const Space& space, const Trajectory& t) {
  std::ostringstream s;
  for (const TrajectoryStep& step : t.steps) {
    json cops = json::array();
    for (const Point& c : step.position.cops) cops.push_back(point_to_json(space, c));
    const json rec = {{"n", step.n},
                      {"t", step.t},
                      {"robber", point_to_json(space, step.position.robber)},
                      {"cops", cops},
                      {"gap", robber_cop_distance(space, step.position)}};
    s << rec.dump() << '\n';
  }
  return s.str();
}

namespace {

void coord_header(std::ostringstream& s, const std::string& who, const Point& p) {
  if (p.edge >= 0) s << ',' << who << "_edge";
  for (std::size_t i = 0; i < p.x.size(); ++i) s << ',' << who << "_x" << i;
}

void coords(std::ostringstream& s, const Point& p) {
  if (p.edge >= 0) s << ',' << p.edge;
  for (double v : p.x) s << ',' << format_real(v);
}

}  // namespace

std::string trajectory_csv(const Space& space, const Trajectory& t) {
  std::ostringstream s;
  s << "n,t,gap";
  if (!t.steps.empty()) {
    const Position& first = t.steps.front().position;
    coord_header(s, "robber", first.robber);
    for (std::size_t i = 0; i < first.cops.size(); ++i) coord_header(s, "cop" + std::to_string(i), first.cops[i]);
  }
  s << '\n';
  for (const TrajectoryStep& step : t.steps) {
    s << step.n << ',' << format_real(step.t) << ',' << format_real(robber_cop_distance(space, step.position));
    coords(s, step.position.robber);
    for (const Point& c : step.position.cops) coords(s, c);
    s << '\n';
  }
  return s.str();
}

}  // namespace pursuit
