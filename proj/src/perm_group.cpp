#include "perminv/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "perminv/error.hpp"
#include "perminv/union_find.hpp"

namespace perminv {

namespace {

void check_arity(std::span<const Permutation> perms, std::size_t n, const Limits& limits) {
  if (n == 0) throw InvalidArgument("arity must be at least 1");
  if (n > limits.max_n) {
    throw CapExceeded("arity " + std::to_string(n) + " exceeds cap " +
                          std::to_string(limits.max_n),
                      n);
  }
  for (const auto& p : perms) {
    if (p.arity() != n) {
      throw InvalidArgument("generator " + p.to_cycle_string() + " has arity " +
                            std::to_string(p.arity()) + ", expected " + std::to_string(n));
    }
  }
}

Partition blocks_of_transpositions(std::span<const Permutation> transpositions, std::size_t n) {
  UnionFind uf(n);
  for (const auto& t : transpositions) {
    auto img = t.zero_based();
    std::size_t first = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (img[i] == static_cast<int>(i)) continue;
      if (first == n) {
        first = i;
      } else {
        uf.unite(first, i);
      }
    }
  }
  std::vector<std::vector<int>> by_root(n);
  for (std::size_t i = 0; i < n; ++i) by_root[uf.root(i)].push_back(static_cast<int>(i + 1));
  Partition blocks;
  for (auto& b : by_root) {
    if (!b.empty()) blocks.push_back(std::move(b));
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

std::uint64_t factorial_capped(std::size_t k, std::uint64_t cap) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) {
    f *= i;
    if (f > cap) return cap + 1;
  }
  return f;
}

}  // namespace

bool PermGroup::contained_in_alternating() const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [](const Permutation& p) { return sign_of(p) == 1; });
}

std::optional<std::size_t> PermGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::vector<Permutation> close_under_composition(std::span<const Permutation> gens, std::size_t n,
                                                 const Limits& limits) {
  check_arity(gens, n, limits);
  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> frontier;
  auto id = Permutation::identity(n);
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    const Permutation x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      Permutation y = compose(g, x);
      if (seen.insert(y).second) {
        if (seen.size() > limits.max_order) {
          throw CapExceeded("group order exceeds cap " + std::to_string(limits.max_order) +
                                " (at least " + std::to_string(seen.size()) + ")",
                            seen.size());
        }
        frontier.push_back(std::move(y));
      }
    }
  }
  std::vector<Permutation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> young_subgroup(const Partition& blocks, std::size_t n,
                                        const Limits& limits) {
  std::uint64_t order = 1;
  for (const auto& b : blocks) {
    order *= factorial_capped(b.size(), limits.max_order);
    if (order > limits.max_order) {
      throw CapExceeded("Young subgroup order exceeds cap " + std::to_string(limits.max_order),
                        limits.max_order + 1);
    }
  }
  // Odometer over one arrangement per block.
  std::vector<std::vector<int>> arrangement(blocks.begin(), blocks.end());
  std::vector<Permutation> out;
  out.reserve(order);
  for (;;) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (std::size_t k = 0; k < blocks[b].size(); ++k) {
        img[static_cast<std::size_t>(blocks[b][k] - 1)] = arrangement[b][k];
      }
    }
    out.emplace_back(img);
    std::size_t b = 0;
    while (b < blocks.size() &&
           !std::next_permutation(arrangement[b].begin(), arrangement[b].end())) {
      ++b;  // wrapped around to sorted order; carry
    }
    if (b == blocks.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

TranspositionClosure transposition_closure(const PermGroup& g, const Limits& limits) {
  const std::size_t n = g.arity();
  TranspositionClosure tc;
  tc.elements = close_under_composition(g.transpositions(), n, limits);
  tc.partition = blocks_of_transpositions(g.transpositions(), n);

  // N must be the full symmetric product over the blocks.
  if (young_subgroup(tc.partition, n, limits) != tc.elements) {
    throw InternalError("subgroup generated by transpositions is not the Young subgroup of "
                        "its blocks");
  }
  if (g.order() % tc.elements.size() != 0) {
    throw InternalError("|N| does not divide |G|");
  }
  tc.index_g_n = g.order() / tc.elements.size();
  return tc;
}

PermGroup generate_group(std::span<const Permutation> gens, std::size_t n, const Limits& limits) {
  PermGroup g;
  g.n_ = n;
  g.generators_.assign(gens.begin(), gens.end());
  g.elements_ = close_under_composition(gens, n, limits);
  for (const auto& p : g.elements_) {
    if (is_transposition(p)) g.transpositions_.push_back(p);
  }
  g.closure_ = transposition_closure(g, limits);
  return g;
}

PermGroup n_subgroup_group(const PermGroup& g, const Limits& limits) {
  return generate_group(g.transpositions(), g.arity(), limits);
}

}  // namespace perminv
