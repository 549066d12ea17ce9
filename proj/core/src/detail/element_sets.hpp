#pragma once

#include <cstdint>
#include <algorithm>
#include <vector>

#include "carter/group.hpp"

namespace carter::detail {

/// Subgroup as the sorted ranks of its elements in the parent's index.
using ElementSet = std::vector<ElementIndex::Rank>;

struct ElementSetHash {
  std::size_t operator()(ElementSet const& s) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto r : s) {
      h ^= r;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Membership flags over ranks, cleared in O(1) by bumping an epoch.
class Marker {
 public:
  explicit Marker(std::size_t n) : stamp_(n, 0) {}

  void reset() {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
  }
  bool test(ElementIndex::Rank r) const { return stamp_[r] == epoch_; }
  void set(ElementIndex::Rank r) { stamp_[r] = epoch_; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 1;
};

/// Elements of <gens>, in discovery order.
inline ElementSet closure(ElementIndex const& index,
                          std::vector<ElementIndex::Rank> const& gens,
                          Marker& marker) {
  marker.reset();
  ElementSet list{index.identity()};
  marker.set(index.identity());
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (auto s : gens) {
      auto const y = index.product(list[i], s);
      if (!marker.test(y)) {
        marker.set(y);
        list.push_back(y);
      }
    }
  }
  return list;
}

/// Greedy generators: each new one is the least element not yet generated.
inline std::vector<ElementIndex::Rank> small_generating_set(
    ElementIndex const& index, ElementSet const& elements, Marker& marker) {
  std::vector<ElementIndex::Rank> gens;
  std::vector<bool> generated(index.size(), false);
  generated[index.identity()] = true;
  std::size_t count = 1;
  for (auto r : elements) {
    if (count == elements.size()) break;
    if (generated[r]) continue;
    gens.push_back(r);
    auto const span = closure(index, gens, marker);
    for (auto y : span) generated[y] = true;
    count = span.size();
  }
  return gens;
}

}  // namespace carter::detail
