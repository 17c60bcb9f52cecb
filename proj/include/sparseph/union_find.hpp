#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace sparseph {

/// Disjoint-set forest with union by size and path halving. Tracks the
/// number of disjoint sets.
class DisjointSet {
 public:
  explicit DisjointSet(std::size_t count)
      : parent_(count), size_(count, 1), sets_(count) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns true when x and y were in different sets.
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    --sets_;
    return true;
  }

  std::size_t set_count() const { return sets_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t sets_;
};

}  // namespace sparseph
