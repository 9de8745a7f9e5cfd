#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pursuit/net.hpp"

namespace pursuit {

// Linear index of net positions (r, {c_1..c_k}). Cops are interchangeable,
// so the cop part is a multiset ranked in the combinatorial number system:
// sorted c_0 <= ... <= c_{k-1} maps to sum_i C(c_i + i, i + 1).
class TupleIndex {
 public:
  TupleIndex(std::size_t net_size, int k);

  std::size_t net_size() const { return net_size_; }
  int k() const { return k_; }
  std::size_t cop_sets() const { return cop_sets_; }
  std::size_t size() const { return net_size_ * cop_sets_; }

  // `sorted` must be non-decreasing.
  std::size_t cop_rank(std::span<const int> sorted) const {
    std::size_t r = 0;
    for (int i = 0; i < k_; ++i) r += binom(static_cast<std::size_t>(sorted[i]) + i, i + 1);
    return r;
  }
  // Any cop order.
  std::size_t cop_rank_unsorted(std::span<const int> cops) const;

  std::span<const int> cop_set(std::size_t rank) const {
    return {decoded_.data() + rank * k_, static_cast<std::size_t>(k_)};
  }

  std::size_t encode(int robber, std::size_t rank) const { return static_cast<std::size_t>(robber) * cop_sets_ + rank; }
  std::size_t encode(int robber, std::span<const int> cops) const { return encode(robber, cop_rank_unsorted(cops)); }
  int robber_of(std::size_t idx) const { return static_cast<int>(idx / cop_sets_); }
  std::size_t rank_of(std::size_t idx) const { return idx % cop_sets_; }

  std::size_t binom(std::size_t n, std::size_t r) const {
    return n < binom_rows_ ? binom_[n * (kMaxK + 1) + r] : 0;
  }

  static constexpr int kMaxK = 8;

 private:
  std::size_t net_size_;
  int k_;
  std::size_t cop_sets_;
  std::size_t binom_rows_;
  std::vector<std::size_t> binom_;
  std::vector<int> decoded_;
};

// Closed balls on a net: j is in ball(i) iff d(i, j) <= radius + 1e-12.
// Each list is sorted and contains i itself.
class ReachSet {
 public:
  ReachSet(const Net& net, double radius);

  double radius() const { return radius_; }
  std::span<const int> operator()(std::size_t i) const {
    return {members_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  std::size_t max_size() const { return max_size_; }

  static constexpr double kSlack = 1e-12;

 private:
  double radius_;
  std::vector<std::size_t> offsets_;
  std::vector<int> members_;
  std::size_t max_size_ = 0;
};

}  // namespace pursuit
