#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "pursuit/error.hpp"
#include "pursuit/spaces.hpp"
#include "certify.hpp"

namespace pursuit {
namespace {

constexpr double kNormSlack = 1e-9;

double norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double c : v) s += c * c;
  return std::sqrt(s);
}

// Rounded key so that points produced twice (projection, ring) collapse.
std::vector<long long> key_of(const std::vector<double>& v) {
  std::vector<long long> k(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) k[i] = std::llround(v[i] * 1e10);
  return k;
}

}  // namespace

BallSpace::BallSpace(int dimension, double radius) : dimension_(dimension), radius_(radius) {
  if (dimension_ < 1) throw ConfigError("ball dimension must be >= 1");
  if (!(radius_ > 0.0)) throw ConfigError("ball radius must be positive");
}

void BallSpace::validate(const Point& p) const {
  if (p.edge != -1 || static_cast<int>(p.x.size()) != dimension_) {
    throw MalformedPoint("ball point needs " + std::to_string(dimension_) + " coordinates");
  }
  if (norm(p.x) > radius_ + kNormSlack) {
    throw MalformedPoint("point has norm " + std::to_string(norm(p.x)) + " beyond radius " +
                         std::to_string(radius_));
  }
}

double BallSpace::distance(const Point& p, const Point& q) const {
  validate(p);
  validate(q);
  double s = 0.0;
  for (int i = 0; i < dimension_; ++i) {
    const double d = p.x[i] - q.x[i];
    s += d * d;
  }
  return std::sqrt(s);
}

Point BallSpace::step_toward(const Point& from, const Point& to, double t) const {
  if (t <= 0.0) {
    validate(from);
    return from;
  }
  const double d = distance(from, to);
  if (t >= d) return to;
  auto step = [&](double s) {
    Point out = from;
    const double f = s / d;
    for (int i = 0; i < dimension_; ++i) out.x[i] = from.x[i] + (to.x[i] - from.x[i]) * f;
    return out;
  };
  return detail::certified_step(step, [this](const Point& a, const Point& b) { return distance(a, b); }, from, to, t, d);
}

// Grid of pitch 2h/sqrt(n), so every point of R^n is within h of a grid
// node. Nodes up to distance R + h are kept and projected onto the ball;
// projection onto a convex set is 1-Lipschitz, so the covering bound holds
// inside the ball too. In the plane a boundary ring at spacing <= h is added.
NetSample BallSpace::net_sample(double h, std::size_t budget) const {
  if (!(h > 0.0)) throw ConfigError("net spacing h must be positive");
  const int n = dimension_;
  const double pitch = 2.0 * h / std::sqrt(static_cast<double>(n));
  const long long reach = static_cast<long long>(std::ceil((radius_ + h) / pitch));
  const double side = static_cast<double>(2 * reach + 1);
  if (std::pow(side, n) > 64.0 * static_cast<double>(budget)) {
    throw CapacityError("ball grid exceeds point budget",
                        static_cast<std::size_t>(std::pow(side, n) * std::pow(std::numbers::pi / 4, n / 2.0)),
                        budget);
  }

  std::map<std::vector<long long>, std::size_t> seen;
  NetSample out;
  out.covering_radius = h;
  auto add = [&](std::vector<double> x) {
    auto k = key_of(x);
    if (seen.count(k)) return;
    seen.emplace(std::move(k), out.points.size());
    out.points.push_back(Point{-1, std::move(x)});
    if (out.points.size() > budget) {
      throw CapacityError("ball net exceeds point budget", out.points.size(), budget);
    }
  };

  std::vector<long long> z(n, -reach);
  while (true) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = pitch * static_cast<double>(z[i]);
    const double r = norm(g);
    if (r <= radius_ + h * (1.0 + 1e-12)) {
      if (r > radius_) {
        for (double& c : g) c *= radius_ / r;
      }
      add(std::move(g));
    }
    int i = n - 1;
    while (i >= 0 && z[i] == reach) {
      z[i] = -reach;
      --i;
    }
    if (i < 0) break;
    ++z[i];
  }

  if (n == 2) {
    const int m = std::max(3, static_cast<int>(std::ceil(2.0 * std::numbers::pi * radius_ / h - 1e-9)));
    for (int j = 0; j < m; ++j) {
      const double a = 2.0 * std::numbers::pi * j / m;
      add({radius_ * std::cos(a), radius_ * std::sin(a)});
    }
  }
  return out;
}

Point BallSpace::sample(std::mt19937_64& rng) const {
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> x(dimension_);
  double s = 0.0;
  do {
    s = 0.0;
    for (double& c : x) {
      c = g(rng);
      s += c * c;
    }
  } while (s == 0.0);
  const double r = radius_ * std::pow(u(rng), 1.0 / dimension_) / std::sqrt(s);
  for (double& c : x) c *= r;
  return Point{-1, std::move(x)};
}

}  // namespace pursuit
