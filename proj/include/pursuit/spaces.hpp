#pragma once

// Compact geodesic spaces with their intrinsic metric.
//
// Every space answers two geometric queries, distance and step_toward, and
// can produce a finite sample of itself (a net) whose covering radius is
// bounded by a requested value. Points are plain values; a Space never
// retains them.

#include <cstddef>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace pursuit {

inline constexpr std::size_t kDefaultNetBudget = 20000;

// A point of some Space. Metric-graph points use `edge` plus one offset in
// `x`; coordinate spaces leave `edge` at -1. A product point is the base
// point with the fiber coordinate appended to `x`.
struct Point {
  int edge = -1;
  std::vector<double> x;

  friend bool operator==(const Point&, const Point&) = default;
};

// Points of a net together with an upper bound on their covering radius.
struct NetSample {
  std::vector<Point> points;
  double covering_radius = 0.0;
};

class Space {
 public:
  virtual ~Space() = default;

  virtual std::string kind() const = 0;

  // Throws MalformedPoint when `p` is not a point of this space.
  virtual void validate(const Point& p) const = 0;

  virtual double distance(const Point& p, const Point& q) const = 0;

  // Point on a geodesic from `from` to `to` at distance min(t, d(from, to))
  // from `from`. Ties between geodesics are broken deterministically.
  virtual Point step_toward(const Point& from, const Point& to, double t) const = 0;

  // Points with covering radius <= h. Throws CapacityError past `budget`.
  virtual NetSample net_sample(double h, std::size_t budget) const = 0;

  // Random point, used by statistical covering checks and sampling robbers.
  virtual Point sample(std::mt19937_64& rng) const = 0;
};

using SpacePtr = std::shared_ptr<const Space>;

struct Edge {
  int u = 0;
  int v = 0;
  double length = 0.0;
};

// X(G, w): each edge of G is an interval of the given length, with vertex
// aliasing at the interval ends.
class MetricGraphSpace final : public Space {
 public:
  MetricGraphSpace(int vertex_count, std::vector<Edge> edges);

  // Cycle made of `pieces` equal edges with the given total length.
  static std::shared_ptr<MetricGraphSpace> cycle(double total_length, int pieces = 2);
  // Single edge [0, length].
  static std::shared_ptr<MetricGraphSpace> interval(double length);
  // Star with `arms` edges of the given length around vertex 0.
  static std::shared_ptr<MetricGraphSpace> star(int arms, double arm_length);

  std::string kind() const override { return "metric_graph"; }
  void validate(const Point& p) const override;
  double distance(const Point& p, const Point& q) const override;
  Point step_toward(const Point& from, const Point& to, double t) const override;
  NetSample net_sample(double h, std::size_t budget) const override;
  Point sample(std::mt19937_64& rng) const override;

  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  double vertex_distance(int a, int b) const { return apsp_[a * vertex_count_ + b]; }

  // The point sitting at vertex `v` (offset 0 or length on its lowest edge).
  Point vertex_point(int v) const;
  // Point at arc position `s` along the edges in id order, as used for
  // cycles built by `cycle()`.
  Point at_arc(double s) const;

 private:
  struct Route {
    double length = 0.0;
    std::vector<int> edge_seq;  // edges touched, for tie-breaking
    int from_end = -1;          // 0: leave via u, 1: via v, -1: same-edge direct
    int to_end = -1;            // 0: enter via u, 1: via v
  };

  std::vector<int> vertex_path_edges(int a, int b) const;
  Route best_route(const Point& from, const Point& to) const;
  Point walk(const Point& from, const Point& to, const Route& route, double t) const;
  void check_point(const Point& p) const;

  int vertex_count_;
  std::vector<Edge> edges_;
  std::vector<double> apsp_;
  std::vector<int> pred_edge_;  // pred_edge_[src * V + w]: last edge on the src->w path
};

// Closed Euclidean ball; geodesics are chords.
class BallSpace final : public Space {
 public:
  BallSpace(int dimension, double radius = 1.0);

  std::string kind() const override { return "ball"; }
  void validate(const Point& p) const override;
  double distance(const Point& p, const Point& q) const override;
  Point step_toward(const Point& from, const Point& to, double t) const override;
  NetSample net_sample(double h, std::size_t budget) const override;
  Point sample(std::mt19937_64& rng) const override;

  int dimension() const { return dimension_; }
  double radius() const { return radius_; }

 private:
  int dimension_;
  double radius_;
};

// Unit sphere S^n in R^{n+1} with the great-circle metric.
class SphereSpace final : public Space {
 public:
  explicit SphereSpace(int dimension);

  std::string kind() const override { return "sphere"; }
  void validate(const Point& p) const override;
  double distance(const Point& p, const Point& q) const override;
  Point step_toward(const Point& from, const Point& to, double t) const override;
  NetSample net_sample(double h, std::size_t budget) const override;
  Point sample(std::mt19937_64& rng) const override;

  int dimension() const { return dimension_; }
  Point at_angle(double theta) const;  // S^1 only
  Point antipode(const Point& p) const;

 private:
  int dimension_;
};

// base x [0, L] with the l_p combination of the two distances.
class ProductSpace final : public Space {
 public:
  ProductSpace(SpacePtr base, double fiber_length, double p);

  std::string kind() const override { return "product"; }
  void validate(const Point& p) const override;
  double distance(const Point& p, const Point& q) const override;
  Point step_toward(const Point& from, const Point& to, double t) const override;
  NetSample net_sample(double h, std::size_t budget) const override;
  Point sample(std::mt19937_64& rng) const override;

  const Space& base() const { return *base_; }
  const SpacePtr& base_ptr() const { return base_; }
  double fiber_length() const { return fiber_length_; }
  double exponent() const { return p_; }

  static Point base_part(const Point& p);
  static double fiber_part(const Point& p) { return p.x.back(); }
  static Point lift(const Point& base_point, double s);

  double combine(double base_distance, double fiber_distance) const;

 private:
  SpacePtr base_;
  double fiber_length_;
  double p_;
};

// Concatenation of geodesic segments through the listed points.
struct Polyline {
  std::vector<Point> points;
};

double polyline_length(const Space& space, const Polyline& path);

}  // namespace pursuit
