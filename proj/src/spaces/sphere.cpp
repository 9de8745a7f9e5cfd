#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "pursuit/error.hpp"
#include "pursuit/spaces.hpp"
#include "certify.hpp"

namespace pursuit {
namespace {

constexpr double kUnitSlack = 1e-9;
constexpr double kTieNudge = 1e-9;

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

Vec normalized(Vec a) {
  const double n = norm(a);
  for (double& c : a) c /= n;
  return a;
}

// Great-circle angle, accurate near 0 and near pi.
double angle(const Vec& a, const Vec& b) {
  double sub = 0.0;
  double add = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sub += (a[i] - b[i]) * (a[i] - b[i]);
    add += (a[i] + b[i]) * (a[i] + b[i]);
  }
  return 2.0 * std::atan2(std::sqrt(sub), std::sqrt(add));
}

// Component of `v` orthogonal to unit `x`, projected twice for accuracy.
Vec tangent(const Vec& x, Vec v) {
  for (int pass = 0; pass < 2; ++pass) {
    const double c = dot(v, x);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * x[i];
  }
  return v;
}

Vec rotate_plane(Vec v, std::size_t i, std::size_t j, double a) {
  const double ci = v[i];
  const double cj = v[j];
  v[i] = std::cos(a) * ci - std::sin(a) * cj;
  v[j] = std::sin(a) * ci + std::cos(a) * cj;
  return v;
}

std::vector<long long> key_of(const Vec& v) {
  std::vector<long long> k(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) k[i] = std::llround(v[i] * 1e10);
  return k;
}

std::vector<Vec> icosahedron() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec> v;
  for (double a : {-1.0, 1.0}) {
    for (double b : {-phi, phi}) {
      v.push_back({0.0, a, b});
      v.push_back({a, b, 0.0});
      v.push_back({b, 0.0, a});
    }
  }
  for (Vec& p : v) p = normalized(p);
  return v;
}

struct Icosphere {
  std::vector<Vec> points;
  double max_edge = 0.0;
};

Icosphere icosphere(int f) {
  const std::vector<Vec> ico = icosahedron();
  double edge = 10.0;
  for (std::size_t i = 0; i < ico.size(); ++i) {
    for (std::size_t j = i + 1; j < ico.size(); ++j) edge = std::min(edge, angle(ico[i], ico[j]));
  }
  std::vector<std::array<std::size_t, 3>> faces;
  auto adjacent = [&](std::size_t i, std::size_t j) { return std::abs(angle(ico[i], ico[j]) - edge) < 1e-9; };
  for (std::size_t a = 0; a < ico.size(); ++a) {
    for (std::size_t b = a + 1; b < ico.size(); ++b) {
      for (std::size_t c = b + 1; c < ico.size(); ++c) {
        if (adjacent(a, b) && adjacent(b, c) && adjacent(a, c)) faces.push_back({a, b, c});
      }
    }
  }

  Icosphere out;
  std::map<std::vector<long long>, std::size_t> seen;
  for (const auto& face : faces) {
    const Vec& A = ico[face[0]];
    const Vec& B = ico[face[1]];
    const Vec& C = ico[face[2]];
    auto at = [&](int i, int j) {
      Vec p(3);
      for (int c = 0; c < 3; ++c) p[c] = A[c] * (f - i - j) + B[c] * i + C[c] * j;
      return normalized(p);
    };
    for (int i = 0; i <= f; ++i) {
      for (int j = 0; i + j <= f; ++j) {
        Vec p = at(i, j);
        auto k = key_of(p);
        if (!seen.count(k)) {
          seen.emplace(std::move(k), out.points.size());
          out.points.push_back(p);
        }
        if (i + j < f) {
          out.max_edge = std::max(out.max_edge, angle(p, at(i + 1, j)));
          out.max_edge = std::max(out.max_edge, angle(p, at(i, j + 1)));
          out.max_edge = std::max(out.max_edge, angle(at(i + 1, j), at(i, j + 1)));
        }
      }
    }
  }
  return out;
}

}  // namespace

SphereSpace::SphereSpace(int dimension) : dimension_(dimension) {
  if (dimension_ < 1) throw ConfigError("sphere dimension must be >= 1");
}

void SphereSpace::validate(const Point& p) const {
  if (p.edge != -1 || static_cast<int>(p.x.size()) != dimension_ + 1) {
    throw MalformedPoint("sphere point needs " + std::to_string(dimension_ + 1) + " coordinates");
  }
  if (std::abs(norm(p.x) - 1.0) > kUnitSlack) {
    throw MalformedPoint("sphere point is not a unit vector (norm " + std::to_string(norm(p.x)) + ")");
  }
}

double SphereSpace::distance(const Point& p, const Point& q) const {
  validate(p);
  validate(q);
  return angle(p.x, q.x);
}

Point SphereSpace::step_toward(const Point& from, const Point& to, double t) const {
  validate(from);
  validate(to);
  if (t <= 0.0) return from;
  const double d = angle(from.x, to.x);
  if (t >= d) return to;

  Vec u = tangent(from.x, to.x);
  if (norm(u) < 1e-12) {
    // Antipodal: every great circle is a geodesic. Nudge the target around
    // the first coordinate axis (in the first plane for S^1) and retry.
    Vec nudged = dimension_ == 1 ? rotate_plane(to.x, 0, 1, kTieNudge) : rotate_plane(to.x, 1, 2, kTieNudge);
    u = tangent(from.x, nudged);
    if (norm(u) < 1e-12) u = tangent(from.x, rotate_plane(to.x, 0, 1, kTieNudge));
  }
  u = normalized(u);
  auto step = [&](double s) {
    Vec out(from.x.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::cos(s) * from.x[i] + std::sin(s) * u[i];
    return Point{-1, normalized(std::move(out))};
  };
  return detail::certified_step(step, [](const Point& a, const Point& b) { return angle(a.x, b.x); }, from, to, t, d);
}

NetSample SphereSpace::net_sample(double h, std::size_t budget) const {
  if (!(h > 0.0)) throw ConfigError("net spacing h must be positive");
  NetSample out;
  if (dimension_ == 1) {
    const double ratio = 2.0 * std::numbers::pi / h;
    if (ratio > static_cast<double>(budget)) {
      throw CapacityError("circle net exceeds point budget", static_cast<std::size_t>(std::ceil(ratio)), budget);
    }
    const int m = std::max(2, static_cast<int>(std::ceil(ratio - 1e-9)));
    for (int j = 0; j < m; ++j) out.points.push_back(at_angle(2.0 * std::numbers::pi * j / m));
    out.covering_radius = std::numbers::pi / m;
    return out;
  }
  if (dimension_ == 2) {
    for (int f = 1;; ++f) {
      const std::size_t count = 10u * static_cast<std::size_t>(f) * f + 2;
      if (count > budget) throw CapacityError("icosphere net exceeds point budget", count, budget);
      Icosphere ico = icosphere(f);
      if (ico.max_edge <= h) {
        for (Vec& p : ico.points) out.points.push_back(Point{-1, std::move(p)});
        out.covering_radius = ico.max_edge;
        return out;
      }
    }
  }
  throw ConfigError("sphere nets are implemented for dimension 1 and 2 only");
}

Point SphereSpace::sample(std::mt19937_64& rng) const {
  std::normal_distribution<double> g(0.0, 1.0);
  Vec x(dimension_ + 1);
  do {
    for (double& c : x) c = g(rng);
  } while (norm(x) < 1e-12);
  return Point{-1, normalized(std::move(x))};
}

Point SphereSpace::at_angle(double theta) const {
  if (dimension_ != 1) throw ConfigError("at_angle is defined on S^1 only");
  return Point{-1, {std::cos(theta), std::sin(theta)}};
}

Point SphereSpace::antipode(const Point& p) const {
  validate(p);
  Point out = p;
  for (double& c : out.x) c = -c;
  return out;
}

}  // namespace pursuit
