#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "pursuit/spaces.hpp"

namespace pursuit {

// Finite sample of a space with its full pairwise distance matrix. The
// matrix is row-major and symmetric; entries are the space's own distances.
class Net {
 public:
  Net(SpacePtr space, std::vector<Point> points, double covering_radius);

  const Space& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  std::size_t size() const { return points_.size(); }
  const Point& point(std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }

  // Upper bound on the distance from any point of the space to the net.
  double covering_radius() const { return covering_radius_; }
  // Nominal point spacing, twice the covering radius.
  double spacing() const { return 2.0 * covering_radius_; }

  double distance(std::size_t i, std::size_t j) const { return dist_[i * points_.size() + j]; }
  std::span<const double> row(std::size_t i) const {
    return {dist_.data() + i * points_.size(), points_.size()};
  }
  std::span<const double> matrix() const { return dist_; }

  // Lowest-index net point closest to p.
  std::size_t nearest(const Point& p) const;
  double distance_to_net(const Point& p) const;

  // Index in `fine` of every point of this net; ConfigError if some point is
  // not (within 1e-12) a point of `fine`.
  std::vector<int> embed_into(const Net& fine) const;

 private:
  SpacePtr space_;
  std::vector<Point> points_;
  double covering_radius_;
  std::vector<double> dist_;
};

using NetPtr = std::shared_ptr<const Net>;

NetPtr build_net(SpacePtr space, double h, std::size_t budget = kDefaultNetBudget);

}  // namespace pursuit
