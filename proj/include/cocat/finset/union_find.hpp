#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace cocat::finset {

/// Disjoint sets over {0, ..., n-1}; union by size with path halving.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns true if a merge happened.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  /// Class index of every element, classes numbered by their smallest member.
  std::vector<std::size_t> canonical_classes(std::size_t& class_count) {
    const std::size_t n = parent_.size();
    std::vector<std::size_t> root_label(n, n);
    std::vector<std::size_t> label(n);
    class_count = 0;
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t root = find(x);
      if (root_label[root] == n) root_label[root] = class_count++;
      label[x] = root_label[root];
    }
    return label;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace cocat::finset
