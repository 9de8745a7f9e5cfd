#include "pursuit/kernels.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>

namespace pursuit {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using Slots = std::array<int, TupleIndex::kMaxK>;

std::size_t sorted_rank(const TupleIndex& index, const Slots& c, int k) {
  Slots s = c;
  std::sort(s.begin(), s.begin() + k);
  return index.cop_rank({s.data(), static_cast<std::size_t>(k)});
}

// Reduce `in(r', sort(c'))` over c' in ball^k(c) for a fixed r'. Minimizing
// keeps the first strict improvement, so ties go to the earliest tuple in
// odometer order (slot 0 slowest).
template <bool Minimize>
double reduce_cops(const TupleIndex& index, const ReachSet& ball, std::span<const double> in, std::size_t row,
                   std::span<const int> cops, int* arg) {
  const int k = index.k();
  double best = Minimize ? kInf : -kInf;
  auto better = [](double a, double b) { return Minimize ? a < b : a > b; };

  if (k == 1) {
    for (int a : ball(cops[0])) {
      const double v = in[row + a];
      if (better(v, best)) {
        best = v;
        if (arg) arg[0] = a;
      }
    }
    return best;
  }
  if (k == 2) {
    for (int a : ball(cops[0])) {
      for (int b : ball(cops[1])) {
        const std::size_t rank = a <= b ? index.cop_rank(std::array{a, b}) : index.cop_rank(std::array{b, a});
        const double v = in[row + rank];
        if (better(v, best)) {
          best = v;
          if (arg) {
            arg[0] = a;
            arg[1] = b;
          }
        }
      }
    }
    return best;
  }

  std::array<std::span<const int>, TupleIndex::kMaxK> lists;
  std::array<std::size_t, TupleIndex::kMaxK> pos{};
  Slots cur{};
  for (int i = 0; i < k; ++i) {
    lists[i] = ball(cops[i]);
    cur[i] = lists[i][0];
  }
  while (true) {
    const double v = in[row + sorted_rank(index, cur, k)];
    if (better(v, best)) {
      best = v;
      if (arg) std::copy(cur.begin(), cur.begin() + k, arg);
    }
    int i = k - 1;
    while (i >= 0 && pos[i] + 1 == lists[i].size()) {
      pos[i] = 0;
      cur[i] = lists[i][0];
      --i;
    }
    if (i < 0) break;
    cur[i] = lists[i][++pos[i]];
  }
  return best;
}

// Cop pass into `mid`, indexed like a layer: mid(r', c) = reduce over c'.
template <bool Minimize>
void cop_pass(const TupleIndex& index, const ReachSet& ball, std::span<const double> in, std::vector<double>& mid,
              std::vector<int>* arg, bool parallel) {
  const std::size_t sets = index.cop_sets();
  const auto total = static_cast<std::int64_t>(index.size());
  const int k = index.k();
  mid.resize(index.size());
  if (arg) arg->resize(index.size() * k);
#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t t = 0; t < total; ++t) {
    const auto idx = static_cast<std::size_t>(t);
    const std::size_t row = (idx / sets) * sets;
    int* out = arg ? arg->data() + idx * k : nullptr;
    mid[idx] = reduce_cops<Minimize>(index, ball, in, row, index.cop_set(idx % sets), out);
  }
}

// Robber pass: out(r, c) = reduce over r' in ball(r) of mid(r', c).
template <bool Minimize>
void robber_pass(const TupleIndex& index, const ReachSet& ball, const std::vector<double>& mid, std::span<double> out,
                 std::vector<int>* arg, bool parallel) {
  const std::size_t sets = index.cop_sets();
  const auto total = static_cast<std::int64_t>(index.size());
  if (arg) arg->resize(index.size());
#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t t = 0; t < total; ++t) {
    const auto idx = static_cast<std::size_t>(t);
    const std::size_t rank = idx % sets;
    double best = Minimize ? kInf : -kInf;
    int best_r = -1;
    for (int r : ball(idx / sets)) {
      const double v = mid[r * sets + rank];
      if (Minimize ? v < best : v > best) {
        best = v;
        best_r = r;
      }
    }
    out[idx] = best;
    if (arg) (*arg)[idx] = best_r;
  }
}

}  // namespace

std::vector<double> base_layer(const Net& net, const TupleIndex& index) {
  std::vector<double> out(index.size());
  const std::size_t sets = index.cop_sets();
  for (std::size_t r = 0; r < index.net_size(); ++r) {
    auto row = net.row(r);
    for (std::size_t rank = 0; rank < sets; ++rank) {
      double d = kInf;
      for (int c : index.cop_set(rank)) d = std::min(d, row[c]);
      out[r * sets + rank] = d;
    }
  }
  return out;
}

void game_step(const TupleIndex& index, const ReachSet& reach, std::span<const double> prev, std::span<double> next,
               StepPolicy* policy, bool parallel) {
  std::vector<double> mid;
  cop_pass<true>(index, reach, prev, mid, policy ? &policy->cops : nullptr, parallel);
  robber_pass<false>(index, reach, mid, next, policy ? &policy->robber : nullptr, parallel);
}

void game_step_serial_reference(const TupleIndex& index, const ReachSet& reach, std::span<const double> prev,
                                std::span<double> next, StepPolicy* policy) {
  const std::size_t sets = index.cop_sets();
  const int k = index.k();
  if (policy) {
    policy->robber.assign(index.size(), -1);
    policy->cops.assign(index.size() * k, -1);
  }
  for (std::size_t idx = 0; idx < index.size(); ++idx) {
    const std::span<const int> cops = index.cop_set(idx % sets);
    double best = -kInf;
    for (int r : reach(idx / sets)) {
      // Plain odometer over every cop tuple; slot 0 slowest.
      double worst = kInf;
      Slots cur{};
      Slots arg{};
      std::array<std::size_t, TupleIndex::kMaxK> pos{};
      for (int i = 0; i < k; ++i) cur[i] = reach(cops[i])[0];
      while (true) {
        const double v = prev[r * sets + sorted_rank(index, cur, k)];
        if (v < worst) {
          worst = v;
          arg = cur;
        }
        int i = k - 1;
        while (i >= 0 && pos[i] + 1 == reach(cops[i]).size()) {
          pos[i] = 0;
          cur[i] = reach(cops[i])[0];
          --i;
        }
        if (i < 0) break;
        cur[i] = reach(cops[i])[++pos[i]];
      }
      if (policy) {
        std::copy(arg.begin(), arg.begin() + k, policy->cops.begin() + (r * sets + idx % sets) * k);
      }
      if (worst > best) {
        best = worst;
        if (policy) policy->robber[idx] = r;
      }
    }
    next[idx] = best;
  }
  // The reference only fills cop replies for robber destinations it tried;
  // complete the table so it is comparable with the two-pass kernel.
  if (policy) {
    for (std::size_t idx = 0; idx < index.size(); ++idx) {
      if (policy->cops[idx * k] >= 0) continue;
      Slots arg{};
      double worst = kInf;
      const std::span<const int> cops = index.cop_set(idx % sets);
      Slots cur{};
      std::array<std::size_t, TupleIndex::kMaxK> pos{};
      for (int i = 0; i < k; ++i) cur[i] = reach(cops[i])[0];
      while (true) {
        const double v = prev[(idx / sets) * sets + sorted_rank(index, cur, k)];
        if (v < worst) {
          worst = v;
          arg = cur;
        }
        int i = k - 1;
        while (i >= 0 && pos[i] + 1 == reach(cops[i]).size()) {
          pos[i] = 0;
          cur[i] = reach(cops[i])[0];
          --i;
        }
        if (i < 0) break;
        cur[i] = reach(cops[i])[++pos[i]];
      }
      std::copy(arg.begin(), arg.begin() + k, policy->cops.begin() + idx * k);
    }
  }
}

void apply_floor(std::span<double> layer, std::span<const double> base, bool parallel) {
  const auto total = static_cast<std::int64_t>(layer.size());
#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t i = 0; i < total; ++i) layer[i] = std::min(layer[i], base[i]);
}

void adversary(const TupleIndex& index, const ReachSet& ball, std::span<const double> in, std::span<double> out,
               bool minimize, bool parallel) {
  std::vector<double> mid;
  if (minimize) {
    cop_pass<true>(index, ball, in, mid, nullptr, parallel);
    robber_pass<true>(index, ball, mid, out, nullptr, parallel);
  } else {
    cop_pass<false>(index, ball, in, mid, nullptr, parallel);
    robber_pass<false>(index, ball, mid, out, nullptr, parallel);
  }
}

}  // namespace pursuit
