#include <gtest/gtest.h>

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "minimax_oracle.hpp"
#include "pursuit/arena.hpp"
#include "pursuit/error.hpp"
#include "pursuit/solver.hpp"

using namespace pursuit;

namespace {

constexpr double kPi = std::numbers::pi;

oracle::Game game_of(const Net& net, std::vector<double> tau, bool intermediate = false) {
  oracle::Game g;
  g.d.assign(net.size(), std::vector<double>(net.size()));
  for (std::size_t i = 0; i < net.size(); ++i) {
    for (std::size_t j = 0; j < net.size(); ++j) g.d[i][j] = net.distance(i, j);
  }
  g.tau = std::move(tau);
  g.intermediate = intermediate;
  return g;
}

std::vector<int> cops_of(const TupleIndex& index, std::size_t idx) {
  const auto s = index.cop_set(index.rank_of(idx));
  return {s.begin(), s.end()};
}

int at(const Net& net, const Point& p) { return static_cast<int>(net.nearest(p)); }

// A metric graph on a few vertices with dyadic edge lengths.
NetPtr random_graph_net(std::mt19937_64& rng, int max_points) {
  std::uniform_int_distribution<int> nv(2, 4), len(1, 4);
  for (;;) {
    const int v = nv(rng);
    std::vector<Edge> edges;
    for (int i = 1; i < v; ++i) edges.push_back({std::uniform_int_distribution<int>(0, i - 1)(rng), i, 0.25 * len(rng)});
    if (std::bernoulli_distribution(0.5)(rng) && v > 2) edges.push_back({0, v - 1, 0.25 * len(rng)});
    NetPtr net = build_net(std::make_shared<MetricGraphSpace>(v, edges), 0.5);
    if (static_cast<int>(net->size()) <= max_points) return net;
  }
}

std::vector<double> random_tau(std::mt19937_64& rng, int N) {
  std::uniform_int_distribution<int> u(1, 4);
  std::vector<double> tau(N);
  for (double& t : tau) t = 0.25 * u(rng);
  return tau;
}

struct Volatile {
  const oracle::Game& g;
  std::vector<double> eps;
  bool cops_helped;

  double at_step(std::size_t step, int r, const std::vector<int>& cops) const {
    const std::size_t N = g.tau.size();
    if (step == N) {
      const double gap = g.gap(r, cops);
      return cops_helped ? std::max(gap - 2 * eps[N], 0.0) : gap;
    }
    // The adversary moves every coordinate within eps[step] first.
    std::vector<int> pr;
    for (int x = 0; x < g.n(); ++x) {
      if (g.reach(r, x, eps[step])) pr.push_back(x);
    }
    double out = cops_helped ? 1e300 : -1e300;
    std::vector<int> c2(cops.size());
    auto over_cops = [&](auto&& self, std::size_t slot, int r2) -> void {
      if (slot == cops.size()) {
        const double v = played(step, r2, c2);
        out = cops_helped ? std::min(out, v) : std::max(out, v);
        return;
      }
      for (int x = 0; x < g.n(); ++x) {
        if (!g.reach(cops[slot], x, eps[step])) continue;
        c2[slot] = x;
        self(self, slot + 1, r2);
      }
    };
    for (int r2 : pr) over_cops(over_cops, 0, r2);
    return out;
  }

  double played(std::size_t step, int r, const std::vector<int>& cops) const {
    double best = -1e300;
    for (int r2 = 0; r2 < g.n(); ++r2) {
      if (!g.reach(r, r2, g.tau[step])) continue;
      double worst = 1e300;
      std::vector<int> c2(cops.size());
      auto rec = [&](auto&& self, std::size_t slot) -> void {
        if (slot == cops.size()) {
          worst = std::min(worst, at_step(step + 1, r2, c2));
          return;
        }
        for (int x = 0; x < g.n(); ++x) {
          if (!g.reach(cops[slot], x, g.tau[step])) continue;
          c2[slot] = x;
          self(self, slot + 1);
        }
      };
      rec(rec, 0);
      best = std::max(best, worst);
    }
    return best;
  }
};

}  // namespace

TEST(SolveFinite, BaseCase) {
  const NetPtr net = build_net(MetricGraphSpace::interval(1.0), 0.5);
  const SolveResult s = solve_finite(net, 1, {}, Variant::endpoint);
  const int r = at(*net, Point{0, {1.0}}), c = at(*net, Point{0, {0.0}});
  EXPECT_EQ(s.table.value(r, std::vector<int>{c}), 1.0);
  for (std::size_t idx = 0; idx < s.table.index.size(); ++idx) {
    EXPECT_EQ(s.table.values[idx], net->distance(s.table.index.robber_of(idx), cops_of(s.table.index, idx)[0]));
  }
}

TEST(SolveFinite, IntervalCopCorners) {
  const NetPtr net = build_net(MetricGraphSpace::interval(1.0), 0.5);
  const SolveResult s = solve_finite(net, 1, {0.5, 0.5}, Variant::endpoint);
  const int r = at(*net, Point{0, {1.0}}), c = at(*net, Point{0, {0.0}});
  const double want = game_of(*net, {0.5, 0.5}).value(0, r, {c});
  EXPECT_EQ(want, 0.0);
  EXPECT_EQ(s.table.value(r, std::vector<int>{c}), want);
}

TEST(SolveFinite, CycleAntipodal) {
  auto g = MetricGraphSpace::cycle(2.0);
  const NetPtr net = build_net(g, 0.5);
  ASSERT_EQ(net->size(), 4u);
  const SolveResult s = solve_finite(net, 1, {0.5, 0.5}, Variant::endpoint);
  const int r = at(*net, g->at_arc(1.0)), c = at(*net, g->at_arc(0.0));
  const double want = game_of(*net, {0.5, 0.5}).value(0, r, {c});
  EXPECT_EQ(want, 0.5);
  EXPECT_EQ(s.table.value(r, std::vector<int>{c}), want);
}

TEST(SolveFinite, MatchesOracleOnRandomGraphs) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 12; ++trial) {
    const NetPtr net = random_graph_net(rng, 6);
    const int k = 1 + trial % 2;
    const std::vector<double> tau = random_tau(rng, 1 + trial % 3);
    for (Variant v : {Variant::endpoint, Variant::intermediate}) {
      const SolveResult s = solve_finite(net, k, tau, v);
      const oracle::Game g = game_of(*net, tau, v == Variant::intermediate);
      for (std::size_t idx = 0; idx < s.table.index.size(); ++idx) {
        ASSERT_EQ(s.table.values[idx], g.value(0, s.table.index.robber_of(idx), cops_of(s.table.index, idx)))
            << "trial " << trial << " tuple " << idx;
      }
    }
  }
}

TEST(SolveFinite, CopOrderDoesNotMatter) {
  const NetPtr net = build_net(MetricGraphSpace::star(3, 1.0), 0.5);
  const SolveResult s = solve_finite(net, 2, {0.5, 1.0}, Variant::endpoint);
  for (int r = 0; r < static_cast<int>(net->size()); ++r) {
    for (int a = 0; a < static_cast<int>(net->size()); ++a) {
      for (int b = 0; b < static_cast<int>(net->size()); ++b) {
        EXPECT_EQ(s.table.value(r, std::vector<int>{a, b}), s.table.value(r, std::vector<int>{b, a}));
      }
    }
  }
}

TEST(SolveFinite, EndpointEqualsIntermediate) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 8; ++trial) {
    const NetPtr net = random_graph_net(rng, 9);
    const std::vector<double> tau = random_tau(rng, 4);
    for (int k : {1, 2}) {
      EXPECT_EQ(solve_finite(net, k, tau, Variant::endpoint).table.values,
                solve_finite(net, k, tau, Variant::intermediate).table.values);
    }
  }
}

TEST(SolveFinite, StepMonotone) {
  const NetPtr net = build_net(MetricGraphSpace::cycle(2.0), 0.25);
  const std::vector<double> tau = {0.25, 0.5, 0.25, 0.25, 0.5};
  for (int k : {1, 2}) {
    std::vector<double> prev;
    for (int N = 0; N <= 5; ++N) {
      const auto values = solve_finite(net, k, {tau.begin(), tau.begin() + N}, Variant::endpoint).table.values;
      if (!prev.empty()) {
        for (std::size_t i = 0; i < values.size(); ++i) EXPECT_LE(values[i], prev[i]);
      }
      prev = values;
    }
  }
}

TEST(SolveFinite, CapacityError) {
  const NetPtr net = build_net(MetricGraphSpace::cycle(2.0), 0.125);
  SolveOptions tight;
  tight.layer_budget = 100;
  try {
    solve_finite(net, 2, {0.25}, Variant::endpoint, tight);
    FAIL();
  } catch (const CapacityError& e) {
    EXPECT_NE(std::string(e.what()).find("100"), std::string::npos) << e.what();
  }
}

TEST(Kernels, ParallelSerialAndReferenceAgree) {
  omp_set_num_threads(4);
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 6; ++trial) {
    const NetPtr net = random_graph_net(rng, 12);
    for (int k : {1, 2, 3}) {
      const TupleIndex index(net->size(), k);
      const ReachSet reach(*net, 0.25 * (1 + trial % 3));
      std::vector<double> prev(index.size());
      for (double& v : prev) v = std::uniform_int_distribution<int>(0, 7)(rng) * 0.125;
      std::vector<double> a(index.size()), b(index.size()), c(index.size());
      StepPolicy pa, pb, pc;
      game_step(index, reach, prev, a, &pa, true);
      game_step(index, reach, prev, b, &pb, false);
      game_step_serial_reference(index, reach, prev, c, &pc);
      EXPECT_EQ(a, b);
      EXPECT_EQ(a, c);
      EXPECT_EQ(pa.robber, pb.robber);
      EXPECT_EQ(pa.robber, pc.robber);
      EXPECT_EQ(pa.cops, pb.cops);
      EXPECT_EQ(pa.cops, pc.cops);

      std::vector<double> lo(index.size()), lo_serial(index.size());
      adversary(index, reach, prev, lo, true, true);
      adversary(index, reach, prev, lo_serial, true, false);
      EXPECT_EQ(lo, lo_serial);
    }
  }
}

TEST(Kernels, SolveIsThreadCountIndependent) {
  const NetPtr net = build_net(std::make_shared<BallSpace>(2), 0.3);
  SolveOptions serial;
  serial.parallel = false;
  serial.policy = true;
  SolveOptions par;
  par.policy = true;
  omp_set_num_threads(3);
  const SolveResult a = solve_finite(net, 2, {0.3, 0.6, 0.3}, Variant::intermediate, par);
  const SolveResult b = solve_finite(net, 2, {0.3, 0.6, 0.3}, Variant::intermediate, serial);
  EXPECT_EQ(a.table.values, b.table.values);
  for (int m = 1; m <= 3; ++m) {
    EXPECT_EQ(a.policy->steps[m - 1].robber, b.policy->steps[m - 1].robber);
    EXPECT_EQ(a.policy->steps[m - 1].cops, b.policy->steps[m - 1].cops);
  }
}

TEST(Policy, MovesStayInReach) {
  const NetPtr net = build_net(MetricGraphSpace::star(3, 1.0), 0.5);
  const std::vector<double> tau = {0.5, 1.0, 0.5};
  SolveOptions opts;
  opts.policy = true;
  const SolveResult s = solve_finite(net, 2, tau, Variant::endpoint, opts);
  const Policy& p = *s.policy;
  for (int m = 1; m <= 3; ++m) {
    const double t = tau[3 - m];
    for (std::size_t idx = 0; idx < p.index.size(); ++idx) {
      const int r = p.index.robber_of(idx);
      const std::vector<int> c = cops_of(p.index, idx);
      const int r2 = p.robber_move(m, idx);
      EXPECT_LE(net->distance(r, r2), t + 1e-12);
      const std::vector<int> c2 = p.cop_moves(m, r2, c);
      for (std::size_t i = 0; i < c.size(); ++i) EXPECT_LE(net->distance(c[i], c2[i]), t + 1e-12);
      if (c[0] == c[1]) continue;
      const std::vector<int> swapped = p.cop_moves(m, r2, std::vector<int>{c[1], c[0]});
      EXPECT_EQ(swapped[0], c2[1]);
      EXPECT_EQ(swapped[1], c2[0]);
    }
  }
}

TEST(Volatile, ZeroPerturbationIsEndpoint) {
  const NetPtr net = build_net(MetricGraphSpace::cycle(2.0), 0.25);
  const std::vector<double> tau = {0.25, 0.5, 0.25};
  const auto want = solve_finite(net, 2, tau, Variant::endpoint).table.values;
  const Perturbation zero{{0, 0, 0, 0}};
  EXPECT_EQ(solve_volatile(net, 2, tau, zero, VolatileSide::cop_guarantee).values, want);
  EXPECT_EQ(solve_volatile(net, 2, tau, zero, VolatileSide::robber_guarantee).values, want);
}

TEST(Volatile, BaseClamp) {
  const NetPtr net = build_net(MetricGraphSpace::interval(1.0), 1.0);
  ASSERT_EQ(net->size(), 2u);
  const ValueTable t = solve_volatile(net, 1, {}, Perturbation{{0.6}}, VolatileSide::cop_guarantee);
  EXPECT_EQ(t.value(0, std::vector<int>{1}), std::max(1.0 - 2 * 0.6, 0.0));
}

TEST(Volatile, SandwichAndOracle) {
  const NetPtr net = build_net(MetricGraphSpace::interval(1.0), 0.25);
  ASSERT_EQ(net->size(), 5u);
  const std::vector<double> tau = {0.25};
  const Perturbation eps{{0.25, 0.0}};
  const auto val = solve_finite(net, 1, tau, Variant::endpoint).table.values;
  const ValueTable lo = solve_volatile(net, 1, tau, eps, VolatileSide::cop_guarantee);
  const ValueTable hi = solve_volatile(net, 1, tau, eps, VolatileSide::robber_guarantee);
  const oracle::Game g = game_of(*net, tau);
  const Volatile olo{g, eps.eps, true}, ohi{g, eps.eps, false};
  for (std::size_t i = 0; i < val.size(); ++i) {
    EXPECT_LE(lo.values[i], val[i]);
    EXPECT_LE(val[i], hi.values[i]);
    EXPECT_GE(lo.values[i], val[i] - 2 * eps.delta(1));
    EXPECT_LE(hi.values[i], val[i] + 2 * eps.delta(0));
    const int r = lo.index.robber_of(i);
    const auto c = cops_of(lo.index, i);
    EXPECT_EQ(lo.values[i], olo.at_step(0, r, c));
    EXPECT_EQ(hi.values[i], ohi.at_step(0, r, c));
  }
}

TEST(Volatile, OracleTwoCops) {
  const NetPtr net = build_net(MetricGraphSpace::cycle(2.0), 0.5);
  const std::vector<double> tau = {0.5, 0.5};
  const Perturbation eps{{0.5, 0.0, 0.5}};
  const oracle::Game g = game_of(*net, tau);
  for (bool cops_helped : {true, false}) {
    const ValueTable t = solve_volatile(net, 2, tau, eps,
                                        cops_helped ? VolatileSide::cop_guarantee : VolatileSide::robber_guarantee);
    const Volatile o{g, eps.eps, cops_helped};
    for (std::size_t i = 0; i < t.values.size(); ++i) {
      EXPECT_EQ(t.values[i], o.at_step(0, t.index.robber_of(i), cops_of(t.index, i)));
    }
  }
}

TEST(Volatile, DeltaPartialSums) {
  const Perturbation p{{0.5, 0.25, 0.125}};
  EXPECT_EQ(p.delta(-1), 0.0);
  EXPECT_EQ(p.delta(0), 0.5);
  EXPECT_EQ(p.delta(2), 0.875);
  EXPECT_THROW(solve_volatile(build_net(MetricGraphSpace::interval(1.0), 0.5), 1, {0.5, 0.5, 0.5}, p,
                              VolatileSide::cop_guarantee)
                   .values.size(),
               ConfigError);
}

TEST(Limit, CopOnEveryNetPoint) {
  const NetPtr net = build_net(MetricGraphSpace::interval(1.0), 0.5);
  const LimitResult r = limit_value(net, static_cast<int>(net->size()), Agility::uniform(0.5), 1e-9, 1);
  EXPECT_EQ(r.achieved_N, 1);
  std::vector<int> everywhere(net->size());
  std::iota(everywhere.begin(), everywhere.end(), 0);
  for (int robber = 0; robber < static_cast<int>(net->size()); ++robber) {
    EXPECT_LE(r.table.value(robber, everywhere), net->covering_radius());
  }
}

TEST(Limit, CircleAntipodalPlateau) {
  const NetPtr net = build_net(std::make_shared<SphereSpace>(1), 2 * kPi / 64);
  ASSERT_EQ(net->size(), 64u);
  const LimitResult r = limit_value(net, 1, Agility::uniform(kPi / 16), 1e-9, 1024);
  EXPECT_TRUE(r.converged);
  const auto& s1 = static_cast<const SphereSpace&>(net->space());
  for (int i = 0; i < 64; i += 7) {
    const int r0 = at(*net, s1.at_angle(2 * kPi * i / 64));
    const int c0 = at(*net, s1.antipode(net->point(r0)));
    EXPECT_NEAR(r.table.value(r0, std::vector<int>{c0}), kPi - kPi / 16, 1e-6);
  }
}

TEST(Limit, IntervalFollowerWins) {
  const NetPtr net = build_net(MetricGraphSpace::interval(1.0), 0.125);
  for (double t : {0.125, 0.25, 0.5}) {
    const LimitResult r = limit_value(net, 1, Agility::uniform(t), 1e-9, 64);
    EXPECT_TRUE(r.converged);
    EXPECT_EQ(r.table.worst(), 0.0) << t;
  }
}

TEST(Limit, DoublingMatchesDirectSolve) {
  const NetPtr net = build_net(MetricGraphSpace::cycle(2.0), 0.25);
  const LimitResult fast = limit_value(net, 1, Agility::uniform(0.25), 1e-12, 8);
  const auto direct = solve_finite(net, 1, std::vector<double>(fast.achieved_N, 0.25), Variant::intermediate);
  EXPECT_EQ(fast.table.values, direct.table.values);
  SolveOptions keep;
  keep.keep_layers = true;
  const LimitResult slow = limit_value(net, 1, Agility::uniform(0.25), 1e-12, 8, Variant::intermediate, keep);
  EXPECT_EQ(slow.table.values, fast.table.values);
  EXPECT_EQ(slow.log, fast.log);
}

TEST(Limit, NotConvergedIsAFlag) {
  // The cop needs eight steps to cross the interval.
  const NetPtr net = build_net(MetricGraphSpace::interval(1.0), 0.125);
  const LimitResult r = limit_value(net, 1, Agility::uniform(0.125), 1e-9, 2);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.achieved_N, 2);
  EXPECT_GT(r.decrement, 0.0);
}

TEST(Limit, HarmonicAgility) {
  const NetPtr net = build_net(MetricGraphSpace::interval(1.0), 0.25);
  const LimitResult r = limit_value(net, 1, Agility::harmonic(1.0), 1e-9, 32);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.table.worst(), 0.0);
}

TEST(FixedTime, ValuesGrowWithN) {
  const NetPtr net = build_net(MetricGraphSpace::cycle(2.0), 0.125);
  const LimitResult r = fixed_time_value(net, 1, 1.0, 1e-9, 8, Variant::intermediate);
  std::vector<double> prev;
  for (int N = 1; N <= r.achieved_N; N *= 2) {
    const auto v = solve_finite(net, 1, std::vector<double>(N, 1.0 / N), Variant::intermediate).table.values;
    if (!prev.empty()) {
      for (std::size_t i = 0; i < v.size(); ++i) EXPECT_GE(v[i], prev[i]);
    }
    prev = v;
  }
  EXPECT_EQ(r.table.values, prev);
}

TEST(Standard, CircleFamilyIncreases) {
  const NetPtr net = build_net(std::make_shared<SphereSpace>(1), 2 * kPi / 64);
  const StandardResult s = standard_value(
      net, 1, {Agility::uniform(kPi / 8), Agility::uniform(kPi / 16), Agility::uniform(kPi / 32)}, 1e-9, 1024);
  ASSERT_EQ(s.members.size(), 3u);
  EXPECT_LT(s.members[0].table.worst(), s.members[1].table.worst());
  EXPECT_LT(s.members[1].table.worst(), s.members[2].table.worst());
  EXPECT_LT(s.members[2].table.worst(), kPi);
  EXPECT_EQ(*std::max_element(s.values.begin(), s.values.end()), s.members[2].table.worst());
}

TEST(Standard, Errors) {
  const NetPtr net = build_net(MetricGraphSpace::interval(1.0), 0.5);
  EXPECT_THROW(standard_value(net, 1, {}, 1e-9, 8), ConfigError);
  EXPECT_THROW(standard_value(net, 1, {Agility::geometric(1.0, 0.5)}, 1e-9, 8), ConfigError);
}

TEST(CopNumber, IntervalStrong) {
  CopNumberOptions o;
  o.strong = true;
  const CopNumberResult r = cop_number_estimate(build_net(MetricGraphSpace::interval(1.0), 0.25), o);
  ASSERT_TRUE(r.k);
  EXPECT_EQ(*r.k, 1);
  EXPECT_EQ(r.theta, 0.0);
}

TEST(CopNumber, CycleNeedsTwo) {
  const NetPtr net = build_net(MetricGraphSpace::cycle(2 * kPi), 2 * kPi / 16);
  CopNumberOptions o;
  const CopNumberResult r = cop_number_estimate(net, o);
  ASSERT_TRUE(r.k);
  EXPECT_EQ(*r.k, 2);
  EXPECT_GT(r.worst[0].second, r.theta);

  o.k_max = 1;
  const CopNumberResult one = cop_number_estimate(net, o);
  EXPECT_FALSE(one.k);
  ASSERT_EQ(one.worst.size(), 1u);
  // About half the circumference: the antipodal robber keeps away.
  EXPECT_GT(one.worst[0].second, kPi / 2);
}

TEST(Playout, OptimalVsOptimalEqualsTable) {
  const NetPtr net = build_net(MetricGraphSpace::star(3, 1.0), 0.5);
  const std::vector<double> tau = {0.5, 0.5, 1.0, 0.5};
  SolveOptions opts;
  opts.policy = true;
  for (Variant v : {Variant::endpoint, Variant::intermediate}) {
    const SolveResult s = solve_finite(net, 1, tau, v, opts);
    const Policy* p = &*s.policy;
    for (std::size_t idx = 0; idx < s.table.index.size(); ++idx) {
      const Trajectory t = policy_playout(*net, p, p, s.table.index.robber_of(idx), cops_of(s.table.index, idx), tau);
      EXPECT_EQ(trajectory_value(net->space(), t), s.table.values[idx]) << idx;
    }
  }
}

TEST(Playout, OptimalRobberVsFollower) {
  auto g = MetricGraphSpace::cycle(2.0);
  const NetPtr net = build_net(g, 0.25);
  const std::vector<double> tau(6, 0.25);
  SolveOptions opts;
  opts.policy = true;
  const SolveResult s = solve_finite(net, 1, tau, Variant::intermediate, opts);
  const Strategy follower = lookup_strategy("follower_cop");
  for (std::size_t idx = 0; idx < s.table.index.size(); ++idx) {
    const Trajectory t =
        policy_playout(*net, &*s.policy, follower, s.table.index.robber_of(idx), cops_of(s.table.index, idx), tau);
    EXPECT_GE(trajectory_value(*g, t), s.table.values[idx]);
  }
}

TEST(Playout, OptimalCopVsStandStill) {
  auto g = MetricGraphSpace::interval(1.0);
  const NetPtr net = build_net(g, 0.25);
  const std::vector<double> tau(4, 0.25);
  SolveOptions opts;
  opts.policy = true;
  const SolveResult s = solve_finite(net, 1, tau, Variant::intermediate, opts);
  const Trajectory t = policy_playout(*net, lookup_strategy("stand_still_robber"), &*s.policy,
                                      at(*net, Point{0, {1.0}}), {at(*net, Point{0, {0.0}})}, tau);
  EXPECT_TRUE(t.captured);
  EXPECT_EQ(trajectory_value(*g, t), 0.0);
}

TEST(Playout, OffNetPositionIsAnError) {
  auto g = MetricGraphSpace::interval(1.0);
  const NetPtr net = build_net(g, 0.5);
  SolveOptions opts;
  opts.policy = true;
  const SolveResult s = solve_finite(net, 1, {0.5, 0.5}, Variant::endpoint, opts);
  const Strategy nudge{"nudge", Side::robber, [](const Space&, const Position& pos, double, int) {
                         Point p = pos.robber;
                         p.x[0] = p.x[0] > 0.5 ? p.x[0] - 0.1 : p.x[0] + 0.1;
                         return std::vector<Point>{p};
                       }};
  try {
    policy_playout(*net, nudge, &*s.policy, at(*net, Point{0, {1.0}}), {at(*net, Point{0, {0.0}})}, {0.5, 0.5});
    FAIL();
  } catch (const PlayoutError& e) {
    EXPECT_NE(std::string(e.what()).find("step 1"), std::string::npos) << e.what();
  }
}
