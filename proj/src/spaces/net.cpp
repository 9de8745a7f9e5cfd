#include "pursuit/net.hpp"

#include <limits>
#include <string>

#include "pursuit/error.hpp"

namespace pursuit {

Net::Net(SpacePtr space, std::vector<Point> points, double covering_radius)
    : space_(std::move(space)), points_(std::move(points)), covering_radius_(covering_radius) {
  if (points_.empty()) throw ConfigError("a net needs at least one point");
  const std::size_t n = points_.size();
  dist_.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    space_->validate(points_[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = space_->distance(points_[i], points_[j]);
      dist_[i * n + j] = d;
      dist_[j * n + i] = d;
    }
  }
}

std::size_t Net::nearest(const Point& p) const {
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const double d = space_->distance(p, points_[i]);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

double Net::distance_to_net(const Point& p) const { return space_->distance(p, points_[nearest(p)]); }

std::vector<int> Net::embed_into(const Net& fine) const {
  std::vector<int> map(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const std::size_t j = fine.nearest(points_[i]);
    if (fine.space().distance(points_[i], fine.point(j)) > 1e-12) {
      throw ConfigError("coarse net point " + std::to_string(i) + " is not a point of the fine net");
    }
    map[i] = static_cast<int>(j);
  }
  return map;
}

NetPtr build_net(SpacePtr space, double h, std::size_t budget) {
  if (!space) throw ConfigError("build_net needs a space");
  NetSample s = space->net_sample(h, budget);
  return std::make_shared<const Net>(std::move(space), std::move(s.points), s.covering_radius);
}

}  // namespace pursuit
