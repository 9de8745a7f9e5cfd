#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pursuit/spaces.hpp"

namespace pursuit {

// Step-duration schedule tau(1), tau(2), ... chosen by the robber before
// the game starts. Values are computed lazily from a base schedule and the
// chain of shift / elementary-subdivision operators applied to it.
class Agility {
 public:
  enum class Kind { explicit_prefix, uniform, geometric, harmonic };

  static Agility uniform(double t);
  static Agility explicit_steps(std::vector<double> steps);
  static Agility geometric(double a, double rho);
  static Agility harmonic(double a);

  static Agility from_json(const nlohmann::json& j, const std::string& path = "agility");
  nlohmann::json to_json() const;

  Kind kind() const { return kind_; }

  // tau(n) for n >= 1. IndexError beyond the usable range of finite prefixes.
  double operator()(int n) const;
  std::optional<int> length() const;
  std::vector<double> prefix(int n) const;

  // tau(n+1) < tau(n) for n = 1..upto-1.
  bool is_decreasing(int upto) const;
  // Membership in the standard set: positive with divergent sum. Decided by
  // kind, since divergence cannot be observed numerically.
  bool in_standard_set() const;
  bool has_zero_steps() const { return zero_steps_; }
  // True when shift() leaves the schedule unchanged.
  bool is_shift_invariant() const;

  Agility shift() const;
  Agility subdivide(int i, double alpha) const;

 private:
  struct Op {
    bool shift = false;
    int i = 0;
    double alpha = 0.0;
  };

  Agility() = default;
  double eval(std::size_t level, int n) const;

  Kind kind_ = Kind::uniform;
  std::vector<double> steps_;
  double a_ = 0.0;
  double rho_ = 0.0;
  std::vector<Op> ops_;
  bool zero_steps_ = false;
};

// Breakpoint merge of two finite schedules with equal total duration.
std::vector<double> common_subdivision(const std::vector<double>& a, const std::vector<double>& b);

// Elementary subdivisions (i, alpha), in application order, that turn
// `coarse` into `fine`. ConfigError if `fine` does not refine `coarse`.
std::vector<std::pair<int, double>> subdivision_steps(const std::vector<double>& coarse,
                                                      const std::vector<double>& fine);

// (r, c_1 .. c_k).
struct Position {
  Point robber;
  std::vector<Point> cops;

  friend bool operator==(const Position&, const Position&) = default;
};

struct PosMetrics {
  double d_rc = 0.0;   // min_i d(r, c_i) within the first position
  double d_cc = 0.0;   // max_i d(c_i, c'_i)
  double d_pos = 0.0;  // max(d(r, r'), d_cc)
};

double robber_cop_distance(const Space& space, const Position& p);
PosMetrics pos_metrics(const Space& space, const Position& p, const Position& q);

struct TrajectoryStep {
  int n = 0;
  double t = 0.0;  // duration of step n; 0 for the initial record
  Position position;
};

// Positions after the cops' move of every step, starting with n = 0.
struct Trajectory {
  std::vector<TrajectoryStep> steps;
  bool captured = false;
  double kappa = 0.0;
};

std::vector<double> trajectory_gaps(const Space& space, const Trajectory& t);
// 0 on capture, otherwise the smallest recorded robber-to-cop distance.
double trajectory_value(const Space& space, const Trajectory& t);

}  // namespace pursuit
