#pragma once

#include <cstdint>
#include <vector>

#include "perminv/characters.hpp"
#include "perminv/limits.hpp"
#include "perminv/perm_group.hpp"

namespace perminv {

/// Dense matrix over F_p, entries in [0, p).
class ModularMatrix {
 public:
  ModularMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t modulus() const { return p_; }

  std::uint32_t at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  /// Stores value mod p; negative values wrap.
  void set(std::size_t r, std::size_t c, std::int64_t value);

  std::vector<std::uint64_t> row(std::size_t r) const;

  /// Rank by Gaussian elimination on a copy.
  std::size_t rank() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::uint32_t p_;
  std::vector<std::uint32_t> entries_;
};

/// Number of chi-good G-orbits on degree-d monomials, recomputed without
/// the orbit sweep: a parity union-find over the edges m -> g.m for the
/// generators g records chi(g), and an orbit is good iff its parity
/// constraints are consistent.
std::uint64_t brute_dim_by_orbits(const PermGroup& g, const CharacterTable& chi, int d,
                                  const Limits& limits = {});

enum class ConstraintSet { generators, all_elements };

/// dim over F_p of { v in span of degree-d monomials : s.v = chi(s) v } by
/// row-reducing the stacked constraints. Throws InvalidArgument for p = 2
/// with a nontrivial chi, or if p is not prime.
std::uint64_t fixed_space_dim_mod_p(const PermGroup& g, const CharacterTable& chi, int d,
                                    std::uint32_t p,
                                    ConstraintSet constraints = ConstraintSet::generators,
                                    const Limits& limits = {});

}  // namespace perminv
