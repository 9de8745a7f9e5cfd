#include <cmath>
#include <string>

#include "pursuit/error.hpp"
#include "pursuit/spaces.hpp"

namespace pursuit {

ProductSpace::ProductSpace(SpacePtr base, double fiber_length, double p)
    : base_(std::move(base)), fiber_length_(fiber_length), p_(p) {
  if (!base_) throw ConfigError("product space needs a base");
  if (!(fiber_length_ > 0.0)) throw ConfigError("fiber length must be positive");
  if (!(p_ >= 1.0) || !std::isfinite(p_)) throw ConfigError("product exponent p must be finite and >= 1");
}

Point ProductSpace::base_part(const Point& p) {
  Point b = p;
  b.x.pop_back();
  return b;
}

Point ProductSpace::lift(const Point& base_point, double s) {
  Point p = base_point;
  p.x.push_back(s);
  return p;
}

double ProductSpace::combine(double a, double b) const {
  if (b == 0.0) return a;
  if (a == 0.0) return b;
  if (p_ == 1.0) return a + b;
  if (p_ == 2.0) return std::hypot(a, b);
  return std::pow(std::pow(a, p_) + std::pow(b, p_), 1.0 / p_);
}

void ProductSpace::validate(const Point& p) const {
  if (p.x.empty()) throw MalformedPoint("product point is missing its fiber coordinate");
  base_->validate(base_part(p));
  const double s = fiber_part(p);
  if (!(s >= -1e-12 && s <= fiber_length_ + 1e-12)) {
    throw MalformedPoint("fiber coordinate " + std::to_string(s) + " outside [0, " +
                         std::to_string(fiber_length_) + "]");
  }
}

double ProductSpace::distance(const Point& p, const Point& q) const {
  validate(p);
  validate(q);
  return combine(base_->distance(base_part(p), base_part(q)), std::abs(fiber_part(p) - fiber_part(q)));
}

// For p > 1 the geodesic moves both factors proportionally; for p = 1 this
// is one of the geodesics.
Point ProductSpace::step_toward(const Point& from, const Point& to, double t) const {
  if (t <= 0.0) {
    validate(from);
    return from;
  }
  const double d = distance(from, to);
  if (t >= d) return to;
  const double lambda = t / d;
  const Point bf = base_part(from);
  const Point bt = base_part(to);
  const double db = base_->distance(bf, bt);
  const Point b = base_->step_toward(bf, bt, lambda * db);
  const double s = fiber_part(from) + lambda * (fiber_part(to) - fiber_part(from));
  return lift(b, s);
}

NetSample ProductSpace::net_sample(double h, std::size_t budget) const {
  if (!(h > 0.0)) throw ConfigError("net spacing h must be positive");
  const double factor_h = h / std::pow(2.0, 1.0 / p_);
  const NetSample base_net = base_->net_sample(factor_h, budget);
  const int m = std::max(1, static_cast<int>(std::ceil(fiber_length_ / factor_h - 1e-9)));
  const std::size_t count = base_net.points.size() * static_cast<std::size_t>(m + 1);
  if (count > budget) throw CapacityError("product net exceeds point budget", count, budget);

  NetSample out;
  out.points.reserve(count);
  for (const Point& b : base_net.points) {
    for (int j = 0; j <= m; ++j) out.points.push_back(lift(b, fiber_length_ * j / m));
  }
  out.covering_radius = combine(base_net.covering_radius, 0.5 * fiber_length_ / m);
  return out;
}

Point ProductSpace::sample(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> u(0.0, fiber_length_);
  return lift(base_->sample(rng), u(rng));
}

double polyline_length(const Space& space, const Polyline& path) {
  if (path.points.empty()) throw MalformedPath("polyline needs at least one point");
  double total = 0.0;
  for (std::size_t i = 1; i < path.points.size(); ++i) {
    total += space.distance(path.points[i - 1], path.points[i]);
  }
  if (path.points.size() == 1) space.validate(path.points.front());
  return total;
}

}  // namespace pursuit
