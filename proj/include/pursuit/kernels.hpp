#pragma once

// One backward-induction layer over the tuple index, plus the few helpers
// the solver composes layers from. Each kernel comes in an OpenMP version
// and, where it matters, a plain triple-loop reference used by the tests.

#include <span>
#include <vector>

#include "pursuit/net.hpp"
#include "pursuit/tuples.hpp"

namespace pursuit {

// Argmax / argmin of one layer. `robber[tuple]` is the robber's destination.
// `cops[(r' * cop_sets + rank) * k + i]` is where the i-th cop of the sorted
// cop set moves once the robber stands on r'.
struct StepPolicy {
  std::vector<int> robber;
  std::vector<int> cops;
};

// d(r, c) = min_i d(r, c_i) for every tuple.
std::vector<double> base_layer(const Net& net, const TupleIndex& index);

// next(r, c) = max_{r' in reach(r)} min_{c' in reach^k(c)} prev(r', c').
// Ties: lowest robber index; first cop tuple in slot-wise odometer order.
void game_step(const TupleIndex& index, const ReachSet& reach, std::span<const double> prev,
               std::span<double> next, StepPolicy* policy = nullptr, bool parallel = true);

// Same contract, evaluated directly with no intermediate table.
void game_step_serial_reference(const TupleIndex& index, const ReachSet& reach, std::span<const double> prev,
                                std::span<double> next, StepPolicy* policy = nullptr);

// layer = min(layer, base).
void apply_floor(std::span<double> layer, std::span<const double> base, bool parallel = true);

// out(r, c) = min (or max) of in over r' in ball(r), c'_i in ball(c_i).
void adversary(const TupleIndex& index, const ReachSet& ball, std::span<const double> in, std::span<double> out,
               bool minimize, bool parallel = true);

}  // namespace pursuit
