#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "pursuit/arena.hpp"
#include "pursuit/error.hpp"
#include "pursuit/io.hpp"

namespace pursuit {
namespace {

std::size_t nearest_cop(const Space& space, const Position& pos) {
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pos.cops.size(); ++i) {
    const double d = space.distance(pos.robber, pos.cops[i]);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

template <class S>
const S& expect(const Space& space, const char* who, const char* what) {
  const auto* s = dynamic_cast<const S*>(&space);
  if (!s) throw StrategyFault(std::string(who) + " needs a " + what + " space, got " + space.kind());
  return *s;
}

double param(const json& params, const char* key, double fallback) {
  return params.contains(key) ? parse_real(params.at(key), std::string("params.") + key) : fallback;
}

Strategy stand_still_robber(const json&) {
  return {"stand_still_robber", Side::robber,
          [](const Space&, const Position& pos, double, int) { return std::vector<Point>{pos.robber}; }};
}

Strategy follower_cop(const json&) {
  return {"follower_cop", Side::cops, [](const Space& space, const Position& pos, double t, int) {
            std::vector<Point> out;
            for (const Point& c : pos.cops) out.push_back(space.step_toward(c, pos.robber, t));
            return out;
          }};
}

// Runs for the antipode of the closest cop.
Strategy antipodal_robber(const json&) {
  return {"antipodal_robber", Side::robber, [](const Space& space, const Position& pos, double t, int) {
            const auto& sphere = expect<SphereSpace>(space, "antipodal_robber", "sphere");
            const Point target = sphere.antipode(pos.cops[nearest_cop(space, pos)]);
            return std::vector<Point>{space.step_toward(pos.robber, target, t)};
          }};
}

// Keeps to the segment from the centre to the robber, as close to the
// robber as the step allows; heads for the centre when the segment is out
// of reach.
Strategy radial_cop(const json&) {
  return {"radial_cop", Side::cops, [](const Space& space, const Position& pos, double t, int) {
            expect<BallSpace>(space, "radial_cop", "ball");
            const std::vector<double>& r = pos.robber.x;
            const Point centre{-1, std::vector<double>(r.size(), 0.0)};
            double rr = 0.0;
            for (double v : r) rr += v * v;
            std::vector<Point> out;
            for (const Point& cop : pos.cops) {
              const std::vector<double>& c = cop.x;
              double rc = 0.0;
              double cc = 0.0;
              for (std::size_t i = 0; i < r.size(); ++i) {
                rc += r[i] * c[i];
                cc += c[i] * c[i];
              }
              if (rr == 0.0) {
                out.push_back(space.step_toward(cop, centre, t));
                continue;
              }
              // |lambda r - c|^2 <= t^2 for lambda in [lo, hi].
              const double disc = rc * rc - rr * (cc - t * t);
              const double hi = disc >= 0.0 ? (rc + std::sqrt(disc)) / rr : -1.0;
              const double lo = disc >= 0.0 ? (rc - std::sqrt(disc)) / rr : 2.0;
              if (disc < 0.0 || hi < 0.0 || lo > 1.0) {
                out.push_back(space.step_toward(cop, centre, t));
                continue;
              }
              const double lambda = std::min(1.0, hi);
              Point target{-1, r};
              for (double& v : target.x) v *= lambda;
              out.push_back(space.step_toward(cop, target, t));
            }
            return out;
          }};
}

// Moves tangentially at constant radius, in the plane of the first two axes.
Strategy circling_robber(const json& params) {
  const double direction = param(params, "direction", 1.0) >= 0.0 ? 1.0 : -1.0;
  return {"circling_robber", Side::robber, [direction](const Space& space, const Position& pos, double t, int) {
            const auto& ball = expect<BallSpace>(space, "circling_robber", "ball");
            std::vector<double> p = pos.robber.x;
            if (ball.dimension() < 2) return std::vector<Point>{pos.robber};
            const double rho = std::hypot(p[0], p[1]);
            if (rho == 0.0) {
              p[0] += std::min(t, ball.radius());
              return std::vector<Point>{Point{-1, p}};
            }
            std::vector<double> q = p;
            q[0] -= direction * t * p[1] / rho;
            q[1] += direction * t * p[0] / rho;
            const double scale = rho / std::hypot(q[0], q[1]);
            q[0] *= scale;
            q[1] *= scale;
            return std::vector<Point>{Point{-1, q}};
          }};
}

// Placeholder evader: samples reachable points and keeps the one farthest
// from the closest cop. Not a faithful boundary-approach strategy.
Strategy greedy_robber(const json& params) {
  const int samples = static_cast<int>(param(params, "samples", 32));
  const auto seed = static_cast<std::uint64_t>(param(params, "seed", 0));
  if (samples < 1) throw ConfigError("params.samples must be >= 1");
  return {"greedy_robber", Side::robber, [samples, seed](const Space& space, const Position& pos, double t, int n) {
            std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(n));
            auto score = [&](const Point& p) {
              Position q = pos;
              q.robber = p;
              return robber_cop_distance(space, q);
            };
            Point best = pos.robber;
            double best_score = score(best);
            for (int i = 0; i < samples; ++i) {
              Point cand = space.step_toward(pos.robber, space.sample(rng), t);
              const double s = score(cand);
              if (s > best_score) {
                best_score = s;
                best = std::move(cand);
              }
            }
            return std::vector<Point>{best};
          }};
}

// Cylinder cop: mirrors the robber in the base while drifting toward the
// robber's fiber coordinate at slope 1/T, so each step covers t * (1 - T^-p)^(1/p)
// in the base and t / T in the fiber.
Strategy cylinder_lift_cop(const json& params) {
  const double eps = param(params, "eps", 0.1);
  return {"cylinder_lift_cop", Side::cops, [eps](const Space& space, const Position& pos, double t, int) {
            const auto& prod = expect<ProductSpace>(space, "cylinder_lift_cop", "product");
            const double p = prod.exponent();
            const double T = lift_slope(p, eps);
            const double base_t = t * std::pow(1.0 - std::pow(T, -p), 1.0 / p);
            const double fiber_t = t / T;
            const Point rb = ProductSpace::base_part(pos.robber);
            const double rs = ProductSpace::fiber_part(pos.robber);
            std::vector<Point> out;
            for (const Point& c : pos.cops) {
              const Point cb = prod.base().step_toward(ProductSpace::base_part(c), rb, base_t);
              const double cs = ProductSpace::fiber_part(c);
              const double s = cs + std::clamp(rs - cs, -fiber_t, fiber_t);
              out.push_back(ProductSpace::lift(cb, s));
            }
            return out;
          }};
}

}  // namespace

double lift_slope(double p, double eps) {
  if (!(p > 1.0) || !std::isfinite(p)) throw ConfigError("lift slope needs p > 1");
  if (!(eps > 0.0)) throw ConfigError("lift slope needs eps > 0");
  // f(T) = T - (T^p - 1)^(1/p) decreases from 1 at T = 1 toward 0.
  auto f = [p](double T) { return T - std::pow(std::pow(T, p) - 1.0, 1.0 / p); };
  if (f(1.0) < eps) return 1.0;
  double lo = 1.0;
  double hi = 2.0;
  while (f(hi) >= eps) hi *= 2.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) >= eps ? lo : hi) = mid;
  }
  return hi;
}

const std::vector<CatalogEntry>& builtin_strategies() {
  static const std::vector<CatalogEntry> catalog = {
      {"stand_still_robber", Side::robber, "never moves", stand_still_robber},
      {"follower_cop", Side::cops, "every cop steps along a geodesic toward the robber", follower_cop},
      {"antipodal_robber", Side::robber, "sphere only: heads for the antipode of the closest cop", antipodal_robber},
      {"radial_cop", Side::cops,
       "ball only: stays on the centre-robber segment as near the robber as possible, else moves to the centre",
       radial_cop},
      {"circling_robber", Side::robber, "ball only: circles at constant radius; params: direction (+1 or -1)",
       circling_robber},
      {"greedy_robber", Side::robber,
       "samples reachable points and keeps the farthest from the cops (placeholder evader); params: samples, seed",
       greedy_robber},
      {"cylinder_lift_cop", Side::cops,
       "product only: follows the robber in the base while lifting toward its fiber coordinate; params: eps",
       cylinder_lift_cop},
  };
  return catalog;
}

Strategy lookup_strategy(const std::string& name, const json& params) {
  std::string names;
  for (const CatalogEntry& e : builtin_strategies()) {
    if (e.name == name) return e.make(params);
    names += (names.empty() ? "" : ", ") + e.name;
  }
  throw CatalogError("unknown strategy '" + name + "' (valid: " + names + ")");
}

}  // namespace pursuit
