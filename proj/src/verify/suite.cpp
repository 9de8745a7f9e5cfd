#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <string>

#include "pursuit/error.hpp"
#include "pursuit/io.hpp"
#include "pursuit/verify.hpp"

namespace pursuit {

json LemmaReport::to_json() const {
  return {{"lemma", lemma},         {"instance", instance},   {"violation", violation},
          {"observed", observed},   {"tolerance", tolerance}, {"pass", pass}};
}

namespace {

std::vector<double> reals(const json& j, const std::string& path) {
  if (!j.is_array()) throw ConfigError(path + ": expected a list");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_real(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

json graph(int vertices, const std::vector<std::array<int, 2>>& ends, const std::string& length) {
  json edges = json::array();
  for (auto [u, v] : ends) edges.push_back({{"u", u}, {"v", v}, {"length", length}});
  return {{"type", "metric_graph"}, {"vertices", vertices}, {"edges", edges}};
}

}  // namespace

Instance Instance::from_json(const json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path + ": expected an object");
  Instance in;
  const json& name = require(j, "name", path);
  if (!name.is_string()) throw ConfigError(path + ".name: expected a string");
  in.name = name.get<std::string>();
  in.space = require(j, "space", path);
  in.h = parse_real(require(j, "h", path), path + ".h");
  const json& k = require(j, "k", path);
  if (!k.is_number_integer()) throw ConfigError(path + ".k: expected an integer");
  in.k = k.get<int>();
  in.tau = reals(require(j, "tau", path), path + ".tau");
  if (j.contains("alphas")) in.alphas = reals(j.at("alphas"), path + ".alphas");
  if (j.contains("eps")) {
    const json& e = j.at("eps");
    if (!e.is_array()) throw ConfigError(path + ".eps: expected a list of schedules");
    for (std::size_t i = 0; i < e.size(); ++i) in.eps.push_back(reals(e[i], path + ".eps[" + std::to_string(i) + "]"));
  }
  if (j.contains("coarse_h")) in.coarse_h = parse_real(j.at("coarse_h"), path + ".coarse_h");
  if (j.contains("oracle_N")) in.oracle_N = j.at("oracle_N").get<int>();
  return in;
}

json Instance::to_json() const {
  json j = {{"name", name}, {"space", space}, {"h", h}, {"k", k}, {"tau", tau}, {"alphas", alphas}, {"eps", eps}};
  if (coarse_h) j["coarse_h"] = *coarse_h;
  if (oracle_N) j["oracle_N"] = *oracle_N;
  return j;
}

// Every instance is a lattice: edge lengths, steps, step fractions and
// perturbations are multiples of the net spacing, so net play can copy
// continuum play exactly.
std::vector<Instance> default_pack() {
  std::vector<Instance> pack;
  {
    Instance in;
    in.name = "interval-3";
    in.space = graph(2, {{0, 1}}, "1");
    in.h = 0.5;
    in.k = 1;
    in.tau = {0.5, 0.5, 1.0, 0.5};
    in.alphas = {0.0, 0.5, 1.0};
    in.eps = {{0.5, 0, 0, 0, 0}, {0, 0, 0.5, 0, 0.5}};
    in.oracle_N = 3;
    pack.push_back(in);
  }
  {
    Instance in;
    in.name = "cycle-4";
    in.space = graph(2, {{0, 1}, {1, 0}}, "1");
    in.h = 0.5;
    in.k = 2;
    in.tau = {0.5, 0.5, 1.0};
    in.alphas = {0.0, 0.5, 1.0};
    in.eps = {{0.5, 0, 0, 0}, {0, 0.5, 0, 0.5}};
    in.oracle_N = 3;
    pack.push_back(in);
  }
  {
    Instance in;
    in.name = "cycle-8";
    in.space = graph(2, {{0, 1}, {1, 0}}, "1");
    in.h = 0.25;
    in.k = 1;
    in.tau = {0.25, 0.5, 0.25, 0.5, 0.25};
    in.alphas = {0.0, 0.5, 1.0};
    in.eps = {{0.25, 0, 0, 0, 0, 0}, {0, 0.25, 0, 0.25, 0, 0.25}};
    in.coarse_h = 0.5;
    in.oracle_N = 3;
    pack.push_back(in);
  }
  {
    Instance in;
    in.name = "star-3";
    in.space = graph(4, {{0, 1}, {0, 2}, {0, 3}}, "1");
    in.h = 0.5;
    in.k = 1;
    in.tau = {1.0, 0.5, 1.0, 0.5};
    in.alphas = {0.0, 0.5, 1.0};
    in.eps = {{0.5, 0, 0, 0, 0}, {0, 0.5, 0, 0, 0.5}};
    in.oracle_N = 3;
    pack.push_back(in);
  }
  {
    Instance in;
    in.name = "trivial-2";
    in.space = graph(2, {{0, 1}}, "1");
    in.h = 1.0;
    in.k = 1;
    in.tau = {1.0, 1.0};
    in.alphas = {0.0, 1.0};
    in.eps = {{1.0, 0, 0}};
    in.oracle_N = 2;
    pack.push_back(in);
  }
  return pack;
}

std::vector<Instance> load_pack(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "default") return default_pack();
    throw ConfigError("pack: expected \"default\", a list of instances or {\"instances\": [...]}");
  }
  const json* list = &j;
  std::string path = "pack";
  if (j.is_object()) {
    list = &require(j, "instances", "pack");
    path = "pack.instances";
  }
  if (!list->is_array()) throw ConfigError(path + ": expected a list");
  if (list->empty()) throw ConfigError(path + ": no instances");
  std::vector<Instance> out;
  for (std::size_t i = 0; i < list->size(); ++i) {
    out.push_back(Instance::from_json((*list)[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

void check_capacity(const Instance& in, const Net& net) {
  const std::string limits = " (suite limits: net <= " + std::to_string(kSuiteMaxNet) +
                             " points, k <= " + std::to_string(kSuiteMaxK) + ", N <= " + std::to_string(kSuiteMaxN) + ")";
  if (net.size() > kSuiteMaxNet) {
    throw CapacityError("instance '" + in.name + "' net too large" + limits, net.size(), kSuiteMaxNet);
  }
  if (in.k < 1 || in.k > kSuiteMaxK) {
    throw CapacityError("instance '" + in.name + "' has too many cops" + limits, static_cast<std::size_t>(std::max(in.k, 0)),
                        kSuiteMaxK);
  }
  if (in.tau.size() > static_cast<std::size_t>(kSuiteMaxN)) {
    throw CapacityError("instance '" + in.name + "' horizon too long" + limits, in.tau.size(), kSuiteMaxN);
  }
}

namespace {

constexpr double kContinuitySlack = 1e-9;

struct Checker {
  const Instance& in;
  NetPtr net;
  SolveOptions serial;

  std::vector<double> solve(const std::vector<double>& tau, Variant v = Variant::endpoint) const {
    return solve_finite(net, in.k, tau, v, serial).table.values;
  }

  LemmaReport report(const std::string& lemma, double violation, double observed, double tolerance) const {
    return {lemma, in.name, violation, observed, tolerance, violation <= tolerance};
  }

  // Smallest max_i d(c_i, c'_i) over the ways of pairing up the cops.
  double cop_distance(std::span<const int> a, std::span<const int> b) const {
    std::vector<int> perm(b.begin(), b.end());
    std::sort(perm.begin(), perm.end());
    double best = std::numeric_limits<double>::infinity();
    do {
      double d = 0.0;
      for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, net->distance(a[i], perm[i]));
      best = std::min(best, d);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }

  LemmaReport l1_equality() const {
    SolveOptions keep = serial;
    keep.keep_layers = true;
    const auto e = solve_finite(net, in.k, in.tau, Variant::endpoint, keep).table;
    const auto i = solve_finite(net, in.k, in.tau, Variant::intermediate, keep).table;
    double worst = 0.0;
    for (std::size_t m = 0; m < e.layers.size(); ++m) {
      for (std::size_t t = 0; t < e.layers[m].size(); ++t) {
        worst = std::max(worst, std::abs(e.layers[m][t] - i.layers[m][t]));
      }
    }
    return report("L1-equality", worst, worst, 0.0);
  }

  LemmaReport step_monotone() const {
    std::vector<double> prev = solve({});
    double worst = 0.0;
    for (std::size_t M = 1; M <= in.tau.size(); ++M) {
      const std::vector<double> cur = solve({in.tau.begin(), in.tau.begin() + M});
      for (std::size_t t = 0; t < cur.size(); ++t) worst = std::max(worst, cur[t] - prev[t]);
      prev = cur;
    }
    return report("step-monotone", std::max(worst, 0.0), worst, 0.0);
  }

  LemmaReport pos_continuity() const {
    SolveOptions keep = serial;
    keep.keep_layers = true;
    const auto table = solve_finite(net, in.k, in.tau, Variant::endpoint, keep).table;
    const TupleIndex& index = table.index;
    const double spacing = net->spacing();
    double violation = 0.0;
    double observed = 0.0;
    for (std::size_t a = 0; a < index.size(); ++a) {
      for (std::size_t b = a + 1; b < index.size(); ++b) {
        const double d_pos = std::max(net->distance(index.robber_of(a), index.robber_of(b)),
                                      cop_distance(index.cop_set(index.rank_of(a)), index.cop_set(index.rank_of(b))));
        for (const auto& layer : table.layers) {
          const double diff = std::abs(layer[a] - layer[b]);
          violation = std::max(violation, diff - 2.0 * d_pos);
          if (d_pos <= spacing + 1e-12) observed = std::max(observed, diff);
        }
      }
    }
    return report("pos-continuity", violation, observed, kContinuitySlack);
  }

  LemmaReport agility_continuity() const {
    const std::vector<double> base = solve(in.tau);
    const double s = net->spacing();
    double violation = 0.0;
    double observed = 0.0;
    for (std::size_t i = 0; i < in.tau.size(); ++i) {
      for (double sign : {1.0, -1.0}) {
        std::vector<double> tau = in.tau;
        tau[i] += sign * s;
        if (tau[i] < 0.0) continue;
        const std::vector<double> v = solve(tau);
        for (std::size_t t = 0; t < v.size(); ++t) {
          const double diff = std::abs(v[t] - base[t]);
          observed = std::max(observed, diff);
          violation = std::max(violation, diff - 2.0 * s);
        }
      }
    }
    return report("agility-continuity", violation, observed, kContinuitySlack);
  }

  LemmaReport subdivision_monotone() const {
    const std::vector<double> base = solve(in.tau);
    const Agility tau = Agility::explicit_steps(in.tau);
    const int N = static_cast<int>(in.tau.size());
    double worst = 0.0;
    for (int i = 1; i <= N; ++i) {
      for (double alpha : in.alphas) {
        const std::vector<double> v = solve(tau.subdivide(i, alpha).prefix(N + 1));
        for (std::size_t t = 0; t < v.size(); ++t) worst = std::max(worst, base[t] - v[t]);
      }
    }
    return report("subdivision-monotone", std::max(worst, 0.0), worst, 0.0);
  }

  LemmaReport volatile_sandwich() const {
    const std::vector<double> val = solve(in.tau);
    const int N = static_cast<int>(in.tau.size());
    std::vector<std::vector<double>> schedules = in.eps;
    schedules.emplace_back();  // the unperturbed game
    double violation = 0.0;
    double observed = 0.0;
    for (std::vector<double> eps : schedules) {
      eps.resize(N + 1, 0.0);
      const Perturbation p{eps};
      const auto cop = solve_volatile(net, in.k, in.tau, p, VolatileSide::cop_guarantee, serial).values;
      const auto rob = solve_volatile(net, in.k, in.tau, p, VolatileSide::robber_guarantee, serial).values;
      for (std::size_t t = 0; t < val.size(); ++t) {
        violation = std::max(violation, (val[t] - 2.0 * p.delta(N)) - cop[t]);
        violation = std::max(violation, rob[t] - (val[t] + 2.0 * p.delta(N - 1)));
        observed = std::max({observed, val[t] - cop[t], rob[t] - val[t]});
      }
    }
    return report("volatile-sandwich", std::max(violation, 0.0), observed, 0.0);
  }

  LemmaReport minmax_gap() const {
    NetPtr coarse = net;
    if (in.coarse_h) coarse = build_net(net->space_ptr(), *in.coarse_h);
    const GapProbe probe = minmax_gap_probe(net, coarse, in.k, in.tau);
    const double bound = 4.0 * probe.eps;
    return report("minmax-gap", std::max(probe.gap - bound, 0.0), probe.gap, kContinuitySlack);
  }

  LemmaReport oracle_equivalence() const {
    const int n = std::min<int>(in.oracle_N.value_or(3), static_cast<int>(in.tau.size()));
    const std::vector<double> tau(in.tau.begin(), in.tau.begin() + n);
    double worst = 0.0;
    for (Variant v : {Variant::endpoint, Variant::intermediate}) {
      const auto table = solve_finite(net, in.k, tau, v, serial).table;
      const std::vector<double> oracle = oracle_table(*net, table.index, tau, v);
      for (std::size_t t = 0; t < oracle.size(); ++t) worst = std::max(worst, std::abs(oracle[t] - table.values[t]));
    }
    return report("oracle-equivalence", worst, worst, 0.0);
  }
};

}  // namespace

std::vector<LemmaReport> run_suite(const std::vector<Instance>& instances) {
  if (instances.empty()) throw ConfigError("pack: no instances");
  // Validate everything before any solve.
  std::vector<NetPtr> nets;
  for (const Instance& in : instances) {
    NetPtr net = build_net(space_from_json(in.space, "instance '" + in.name + "'.space"), in.h);
    check_capacity(in, *net);
    nets.push_back(std::move(net));
  }

  std::vector<std::vector<LemmaReport>> per(instances.size());
  std::vector<std::exception_ptr> errors(instances.size());
  const auto count = static_cast<std::int64_t>(instances.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      SolveOptions serial;
      serial.parallel = false;
      const Checker c{instances[i], nets[i], serial};
      per[i] = {c.l1_equality(),       c.step_monotone(),     c.pos_continuity(), c.agility_continuity(),
                c.subdivision_monotone(), c.volatile_sandwich(), c.minmax_gap(),     c.oracle_equivalence()};
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<LemmaReport> out;
  for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
  return out;
}

json reports_to_json(const std::vector<LemmaReport>& reports) {
  json out = json::array();
  for (const LemmaReport& r : reports) out.push_back(r.to_json());
  return out;
}

}  // namespace pursuit
