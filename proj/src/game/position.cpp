#include <algorithm>
#include <limits>
#include <string>

#include "pursuit/error.hpp"
#include "pursuit/game.hpp"

namespace pursuit {

double robber_cop_distance(const Space& space, const Position& p) {
  if (p.cops.empty()) throw ArityError("a position needs at least one cop");
  double best = std::numeric_limits<double>::infinity();
  for (const Point& c : p.cops) best = std::min(best, space.distance(p.robber, c));
  return best;
}

PosMetrics pos_metrics(const Space& space, const Position& p, const Position& q) {
  if (p.cops.size() != q.cops.size()) {
    throw ArityError("positions have " + std::to_string(p.cops.size()) + " and " +
                     std::to_string(q.cops.size()) + " cops");
  }
  PosMetrics m;
  m.d_rc = robber_cop_distance(space, p);
  for (std::size_t i = 0; i < p.cops.size(); ++i) {
    m.d_cc = std::max(m.d_cc, space.distance(p.cops[i], q.cops[i]));
  }
  m.d_pos = std::max(space.distance(p.robber, q.robber), m.d_cc);
  return m;
}

std::vector<double> trajectory_gaps(const Space& space, const Trajectory& t) {
  std::vector<double> gaps;
  gaps.reserve(t.steps.size());
  for (const TrajectoryStep& s : t.steps) gaps.push_back(robber_cop_distance(space, s.position));
  return gaps;
}

double trajectory_value(const Space& space, const Trajectory& t) {
  if (t.steps.empty()) throw ConfigError("trajectory has no recorded positions");
  if (t.captured) return 0.0;
  const std::vector<double> gaps = trajectory_gaps(space, t);
  return *std::min_element(gaps.begin(), gaps.end());
}

}  // namespace pursuit
