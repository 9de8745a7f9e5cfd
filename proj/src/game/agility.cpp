#include <algorithm>
#include <cmath>
#include <string>

#include "pursuit/error.hpp"
#include "pursuit/game.hpp"
#include "pursuit/io.hpp"

namespace pursuit {

Agility Agility::uniform(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw ConfigError("uniform agility needs a positive step");
  Agility a;
  a.kind_ = Kind::uniform;
  a.a_ = t;
  return a;
}

Agility Agility::explicit_steps(std::vector<double> steps) {
  Agility a;
  a.kind_ = Kind::explicit_prefix;
  for (double s : steps) {
    if (!(s >= 0.0) || !std::isfinite(s)) throw ConfigError("agility steps must be finite and >= 0");
    if (s == 0.0) a.zero_steps_ = true;
  }
  a.steps_ = std::move(steps);
  return a;
}

Agility Agility::geometric(double first, double rho) {
  if (!(first > 0.0)) throw ConfigError("geometric agility needs a > 0");
  if (!(rho > 0.0 && rho < 1.0)) throw ConfigError("geometric agility needs 0 < rho < 1");
  Agility a;
  a.kind_ = Kind::geometric;
  a.a_ = first;
  a.rho_ = rho;
  return a;
}

Agility Agility::harmonic(double first) {
  if (!(first > 0.0)) throw ConfigError("harmonic agility needs a > 0");
  Agility a;
  a.kind_ = Kind::harmonic;
  a.a_ = first;
  return a;
}

std::optional<int> Agility::length() const {
  if (kind_ != Kind::explicit_prefix) return std::nullopt;
  int len = static_cast<int>(steps_.size());
  for (const Op& op : ops_) len += op.shift ? -1 : 1;
  return len;
}

double Agility::eval(std::size_t level, int n) const {
  if (level == 0) {
    switch (kind_) {
      case Kind::explicit_prefix:
        return steps_[n - 1];
      case Kind::uniform:
        return a_;
      case Kind::geometric:
        return a_ * std::pow(rho_, n - 1);
      case Kind::harmonic:
        return a_ / n;
    }
  }
  const Op& op = ops_[level - 1];
  if (op.shift) return eval(level - 1, n + 1);
  if (n < op.i) return eval(level - 1, n);
  if (n == op.i) return op.alpha * eval(level - 1, op.i);
  if (n == op.i + 1) return (1.0 - op.alpha) * eval(level - 1, op.i);
  return eval(level - 1, n - 1);
}

double Agility::operator()(int n) const {
  if (n < 1) throw IndexError("agility index " + std::to_string(n) + " must be >= 1");
  if (auto len = length(); len && n > *len) {
    throw IndexError("agility index " + std::to_string(n) + " beyond prefix length " + std::to_string(*len));
  }
  return eval(ops_.size(), n);
}

std::vector<double> Agility::prefix(int n) const {
  std::vector<double> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) out.push_back((*this)(i));
  return out;
}

bool Agility::is_decreasing(int upto) const {
  for (int n = 1; n < upto; ++n) {
    if (!((*this)(n + 1) < (*this)(n))) return false;
  }
  return true;
}

bool Agility::in_standard_set() const {
  if (zero_steps_) return false;
  return kind_ == Kind::uniform || kind_ == Kind::harmonic;
}

bool Agility::is_shift_invariant() const {
  if (kind_ != Kind::uniform) return false;
  return std::all_of(ops_.begin(), ops_.end(), [](const Op& op) { return op.shift; });
}

Agility Agility::shift() const {
  if (auto len = length(); len && *len == 0) throw EmptyAgility("cannot shift an empty agility prefix");
  Agility out = *this;
  out.ops_.push_back({true, 0, 0.0});
  return out;
}

Agility Agility::subdivide(int i, double alpha) const {
  if (i < 1) throw IndexError("subdivision index must be >= 1");
  if (auto len = length(); len && i > *len) {
    throw IndexError("subdivision index " + std::to_string(i) + " beyond prefix length " + std::to_string(*len));
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ConfigError("subdivision alpha must lie in [0, 1]");
  Agility out = *this;
  out.ops_.push_back({false, i, alpha});
  if (alpha == 0.0 || alpha == 1.0) out.zero_steps_ = true;
  return out;
}

Agility Agility::from_json(const nlohmann::json& j, const std::string& path) {
  const json& kind = require(j, "kind", path);
  if (!kind.is_string()) throw ConfigError(path + ".kind: expected a string");
  const std::string k = kind.get<std::string>();
  Agility a;
  if (k == "uniform") {
    a = uniform(parse_real(require(j, "t", path), path + ".t"));
  } else if (k == "explicit") {
    const json& steps = require(j, "steps", path);
    if (!steps.is_array()) throw ConfigError(path + ".steps: expected a list");
    std::vector<double> s;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      s.push_back(parse_real(steps[i], path + ".steps[" + std::to_string(i) + "]"));
    }
    a = explicit_steps(std::move(s));
  } else if (k == "harmonic") {
    a = harmonic(parse_real(require(j, "a", path), path + ".a"));
  } else if (k == "geometric") {
    a = geometric(parse_real(require(j, "a", path), path + ".a"), parse_real(require(j, "rho", path), path + ".rho"));
  } else {
    throw ConfigError(path + ".kind: unknown agility kind '" + k + "'");
  }
  if (j.contains("ops")) {
    for (const json& op : j.at("ops")) {
      if (op.contains("shift")) {
        a = a.shift();
      } else {
        a = a.subdivide(require(op, "subdivide", path + ".ops").get<int>(),
                        parse_real(require(op, "alpha", path + ".ops"), path + ".ops.alpha"));
      }
    }
  }
  return a;
}

nlohmann::json Agility::to_json() const {
  json j;
  switch (kind_) {
    case Kind::explicit_prefix:
      j = {{"kind", "explicit"}, {"steps", steps_}};
      break;
    case Kind::uniform:
      j = {{"kind", "uniform"}, {"t", a_}};
      break;
    case Kind::geometric:
      j = {{"kind", "geometric"}, {"a", a_}, {"rho", rho_}};
      break;
    case Kind::harmonic:
      j = {{"kind", "harmonic"}, {"a", a_}};
      break;
  }
  if (!ops_.empty()) {
    json ops = json::array();
    for (const Op& op : ops_) {
      if (op.shift) {
        ops.push_back({{"shift", 1}});
      } else {
        ops.push_back({{"subdivide", op.i}, {"alpha", op.alpha}});
      }
    }
    j["ops"] = ops;
  }
  return j;
}

namespace {

double total(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

bool close(double a, double b, double scale) { return std::abs(a - b) <= 1e-12 * std::max(1.0, scale); }

}  // namespace

std::vector<double> common_subdivision(const std::vector<double>& a, const std::vector<double>& b) {
  const double ta = total(a);
  const double tb = total(b);
  if (std::abs(ta - tb) > 1e-9 * std::max(1.0, ta)) {
    throw ConfigError("common subdivision needs equal total durations");
  }
  std::vector<double> cuts;
  double s = 0.0;
  for (double x : a) cuts.push_back(s += x);
  s = 0.0;
  for (double x : b) cuts.push_back(s += x);
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> merged;
  for (double c : cuts) {
    if (c <= 0.0 || (!merged.empty() && close(c, merged.back(), ta))) continue;
    merged.push_back(c);
  }
  if (merged.empty()) return {};
  merged.back() = ta;
  std::vector<double> steps;
  double prev = 0.0;
  for (double c : merged) {
    steps.push_back(c - prev);
    prev = c;
  }
  return steps;
}

std::vector<std::pair<int, double>> subdivision_steps(const std::vector<double>& coarse,
                                                      const std::vector<double>& fine) {
  const double scale = total(coarse);
  std::vector<std::pair<int, double>> ops;
  std::size_t j = 0;
  int pos = 1;
  for (double step : coarse) {
    double remaining = step;
    while (true) {
      if (j >= fine.size()) throw ConfigError("fine schedule ends before the coarse one");
      const double piece = fine[j];
      if (close(piece, remaining, scale)) {
        ++j;
        ++pos;
        break;
      }
      if (piece > remaining) throw ConfigError("fine schedule does not refine the coarse one");
      const double alpha = piece / remaining;
      ops.push_back({pos, alpha});
      remaining = (1.0 - alpha) * remaining;
      ++j;
      ++pos;
    }
  }
  if (j != fine.size()) throw ConfigError("fine schedule is longer than the coarse one");
  return ops;
}

}  // namespace pursuit
