#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "perminv/limits.hpp"
#include "perminv/permutation.hpp"

namespace perminv {

/// A block partition of {1..n}; blocks are sorted and listed by smallest point.
using Partition = std::vector<std::vector<int>>;

/// The subgroup N generated by the transpositions of a group, together with
/// the blocks it is the full symmetric product over.
struct TranspositionClosure {
  std::vector<Permutation> elements;  // sorted
  Partition partition;
  std::uint64_t index_g_n = 1;        // |G| / |N|
};

class PermGroup;

PermGroup generate_group(std::span<const Permutation> gens, std::size_t n,
                         const Limits& limits = {});

TranspositionClosure transposition_closure(const PermGroup& g, const Limits& limits = {});

/// A finite permutation group with its transposition-derived structure.
/// Immutable once built by generate_group.
class PermGroup {
 public:
  std::size_t arity() const { return n_; }
  std::span<const Permutation> generators() const { return generators_; }

  /// Sorted by one-line form; the identity is always elements()[0].
  std::span<const Permutation> elements() const { return elements_; }
  std::uint64_t order() const { return elements_.size(); }

  /// Transpositions contained in the group, sorted.
  std::span<const Permutation> transpositions() const { return transpositions_; }
  std::size_t transposition_count() const { return transpositions_.size(); }

  std::span<const Permutation> n_subgroup() const { return closure_.elements; }
  const Partition& partition() const { return closure_.partition; }
  std::uint64_t index_g_n() const { return closure_.index_g_n; }

  bool generated_by_transpositions() const { return closure_.index_g_n == 1; }
  bool contained_in_alternating() const;

  /// Position of p in elements(), if present.
  std::optional<std::size_t> index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }

 private:
  friend PermGroup generate_group(std::span<const Permutation>, std::size_t, const Limits&);

  std::size_t n_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<Permutation> transpositions_;
  TranspositionClosure closure_;
};

/// Sorted element list of the closure of gens (identity included).
std::vector<Permutation> close_under_composition(std::span<const Permutation> gens, std::size_t n,
                                                 const Limits& limits = {});

/// The Young subgroup S_{A_1} x ... x S_{A_r} as a sorted element list.
std::vector<Permutation> young_subgroup(const Partition& blocks, std::size_t n,
                                        const Limits& limits = {});

/// The subgroup N as a PermGroup in its own right.
PermGroup n_subgroup_group(const PermGroup& g, const Limits& limits = {});

}  // namespace perminv
