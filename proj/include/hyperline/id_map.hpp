#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hyperline {

using NodeId = std::uint32_t;

// Bijection between contiguous compact IDs [0, k) and a sparse set of
// original IDs. forward() is strictly increasing, so compact order equals
// original-ID order and the inverse is a binary search.
class IdMap {
 public:
  IdMap() = default;

  // `originals` must be strictly increasing.
  explicit IdMap(std::vector<NodeId> originals) : forward_(std::move(originals)) {
    for (std::size_t i = 1; i < forward_.size(); ++i) {
      if (forward_[i - 1] >= forward_[i])
        throw std::invalid_argument("IdMap: originals must be strictly increasing");
    }
  }

  static IdMap identity(NodeId k) {
    std::vector<NodeId> fwd(k);
    for (NodeId i = 0; i < k; ++i) fwd[i] = i;
    return IdMap(std::move(fwd));
  }

  NodeId size() const { return static_cast<NodeId>(forward_.size()); }
  bool empty() const { return forward_.empty(); }

  NodeId original_of(NodeId compact) const {
    if (compact >= forward_.size()) throw std::out_of_range("IdMap: compact id out of range");
    return forward_[compact];
  }

  // Compact ID of `original`; throws if the ID was not retained.
  NodeId compact_of(NodeId original) const {
    auto it = std::lower_bound(forward_.begin(), forward_.end(), original);
    if (it == forward_.end() || *it != original)
      throw std::out_of_range("IdMap: original id not present");
    return static_cast<NodeId>(it - forward_.begin());
  }

  bool contains(NodeId original) const {
    auto it = std::lower_bound(forward_.begin(), forward_.end(), original);
    return it != forward_.end() && *it == original;
  }

  std::span<const NodeId> forward() const { return forward_; }

  bool operator==(const IdMap&) const = default;

 private:
  std::vector<NodeId> forward_;
};

}  // namespace hyperline
