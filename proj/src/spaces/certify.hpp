#pragma once

#include <cmath>

#include "pursuit/spaces.hpp"

namespace pursuit::detail {

// Rounding can leave a geodesic step a few ulps long, as measured by the
// space's own distance. Shorten the step until the computed metric agrees
// that the result is within t of `from` and no closer than fl(d - t) to `to`.
template <class Step, class Dist>
Point certified_step(const Step& step, const Dist& dist, const Point& from, const Point& to, double t, double d) {
  const double floor = d - t;
  for (int i = 0; i < 53; ++i) {
    const double s = t - t * std::ldexp(1.0, i - 52);
    if (s <= 0.0) break;
    Point p = step(s);
    if (dist(from, p) <= t && dist(p, to) >= floor) return p;
  }
  return from;
}

}  // namespace pursuit::detail
