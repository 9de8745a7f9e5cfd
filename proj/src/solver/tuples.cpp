#include "pursuit/tuples.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "pursuit/error.hpp"

namespace pursuit {

TupleIndex::TupleIndex(std::size_t net_size, int k) : net_size_(net_size), k_(k) {
  if (k_ < 1 || k_ > kMaxK) throw ArityError("cop count must be in [1, " + std::to_string(kMaxK) + "]");
  if (net_size_ == 0) throw ConfigError("empty net");
  binom_rows_ = net_size_ + k_ + 1;
  binom_.assign(binom_rows_ * (kMaxK + 1), 0);
  for (std::size_t n = 0; n < binom_rows_; ++n) {
    binom_[n * (kMaxK + 1)] = 1;
    for (std::size_t r = 1; r <= static_cast<std::size_t>(kMaxK) && r <= n; ++r) {
      const std::size_t left = binom_[(n - 1) * (kMaxK + 1) + r - 1];
      const std::size_t right = r <= n - 1 ? binom_[(n - 1) * (kMaxK + 1) + r] : 0;
      binom_[n * (kMaxK + 1) + r] = left + right;
    }
  }
  cop_sets_ = binom(net_size_ + k_ - 1, k_);

  decoded_.assign(cop_sets_ * k_, 0);
  std::array<int, kMaxK> c{};
  while (true) {
    const std::size_t r = cop_rank({c.data(), static_cast<std::size_t>(k_)});
    std::copy(c.begin(), c.begin() + k_, decoded_.begin() + r * k_);
    int i = k_ - 1;
    while (i >= 0 && c[i] == static_cast<int>(net_size_) - 1) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k_; ++j) c[j] = c[i];
  }
}

std::size_t TupleIndex::cop_rank_unsorted(std::span<const int> cops) const {
  if (static_cast<int>(cops.size()) != k_) {
    throw ArityError("expected " + std::to_string(k_) + " cops, got " + std::to_string(cops.size()));
  }
  std::array<int, kMaxK> c{};
  std::copy(cops.begin(), cops.end(), c.begin());
  std::sort(c.begin(), c.begin() + k_);
  return cop_rank({c.data(), static_cast<std::size_t>(k_)});
}

ReachSet::ReachSet(const Net& net, double radius) : radius_(radius) {
  const std::size_t n = net.size();
  offsets_.reserve(n + 1);
  offsets_.push_back(0);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = net.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || row[j] <= radius + kSlack) members_.push_back(static_cast<int>(j));
    }
    offsets_.push_back(members_.size());
    max_size_ = std::max(max_size_, offsets_[i + 1] - offsets_[i]);
  }
}

}  // namespace pursuit
