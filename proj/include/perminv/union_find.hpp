#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace perminv {

/// Disjoint sets with union by size and path halving. Each element also
/// carries a parity relative to its root, so the structure can record
/// constraints of the form value[a] = (+-1) * value[b] and detect when a
/// component is forced to be inconsistent.
class UnionFind {
 public:
  explicit UnionFind(std::size_t size)
      : parent_(size), size_(size, 1), parity_(size, 0), conflict_(size, false) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t size() const { return parent_.size(); }

  /// Root of x and the parity of x relative to it.
  std::pair<std::size_t, int> find(std::size_t x) {
    int par = 0;
    std::size_t r = x;
    while (parent_[r] != r) {
      par ^= parity_[r];
      r = parent_[r];
    }
    // Path compression with parity rewrite.
    int acc = par;
    while (parent_[x] != x) {
      const std::size_t next = parent_[x];
      const int old = parity_[x];
      parent_[x] = r;
      parity_[x] = acc;
      acc ^= old;
      x = next;
    }
    return {r, par};
  }

  std::size_t root(std::size_t x) { return find(x).first; }

  /// Records value[a] = (-1)^relative * value[b]. Returns true if a and b
  /// were in different sets.
  bool unite(std::size_t a, std::size_t b, int relative = 0) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) {
      if ((pa ^ pb) != relative) conflict_[ra] = true;
      return false;
    }
    if (size_[ra] < size_[rb]) {
      std::swap(ra, rb);
      std::swap(pa, pb);
    }
    parent_[rb] = ra;
    parity_[rb] = pa ^ pb ^ relative;
    size_[ra] += size_[rb];
    conflict_[ra] = conflict_[ra] || conflict_[rb];
    return true;
  }

  /// True if some recorded constraint in x's set contradicts the others.
  bool conflicted(std::size_t x) { return conflict_[root(x)]; }

  std::size_t set_size(std::size_t x) { return size_[root(x)]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::vector<int> parity_;
  std::vector<bool> conflict_;
};

}  // namespace perminv
