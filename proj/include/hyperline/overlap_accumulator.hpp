#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace hyperline {

// Open-addressing map from candidate edge ID to a running overlap count.
// Keys only ever enter via increment(), so no stored count is 0. clear() is
// O(touched) via generation stamps; capacity is retained, which is what the
// preallocated thread-local mode relies on.
class OverlapAccumulator {
 public:
  explicit OverlapAccumulator(std::uint32_t expected = 8) {
    std::uint32_t cap = 16;
    while (cap < expected * 2) cap <<= 1;
    keys_.resize(cap);
    counts_.resize(cap);
    stamps_.assign(cap, 0);
    mask_ = cap - 1;
  }

  void increment(std::uint32_t key) {
    std::uint32_t i = probe(key);
    if (stamps_[i] != generation_) {
      stamps_[i] = generation_;
      keys_[i] = key;
      counts_[i] = 1;
      touched_.push_back(i);
      if (touched_.size() * 10 > keys_.size() * 7) grow();
    } else {
      ++counts_[i];
    }
  }

  std::uint32_t count(std::uint32_t key) const {
    std::uint32_t i = probe(key);
    return stamps_[i] == generation_ ? counts_[i] : 0;
  }

  std::uint32_t size() const { return static_cast<std::uint32_t>(touched_.size()); }

  // Visits entries in insertion order.
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::uint32_t i : touched_) fn(keys_[i], counts_[i]);
  }

  void clear() {
    ++generation_;
    touched_.clear();
  }

 private:
  std::uint32_t probe(std::uint32_t key) const {
    // Fibonacci hashing spreads consecutive IDs.
    std::uint32_t i = (key * 2654435769u) & mask_;
    while (stamps_[i] == generation_ && keys_[i] != key) i = (i + 1) & mask_;
    return i;
  }

  void grow() {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> live;
    live.reserve(touched_.size());
    for (std::uint32_t i : touched_) live.emplace_back(keys_[i], counts_[i]);

    std::uint32_t cap = static_cast<std::uint32_t>(keys_.size()) * 2;
    keys_.assign(cap, 0);
    counts_.assign(cap, 0);
    stamps_.assign(cap, 0);
    mask_ = cap - 1;
    generation_ = 1;
    touched_.clear();
    for (const auto& [k, c] : live) {
      std::uint32_t i = probe(k);
      stamps_[i] = generation_;
      keys_[i] = k;
      counts_[i] = c;
      touched_.push_back(i);
    }
  }

  std::vector<std::uint32_t> keys_;
  std::vector<std::uint32_t> counts_;
  std::vector<std::uint64_t> stamps_;
  std::vector<std::uint32_t> touched_;
  std::uint32_t mask_ = 0;
  std::uint64_t generation_ = 1;
};

}  // namespace hyperline
