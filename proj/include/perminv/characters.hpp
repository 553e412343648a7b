#pragma once

#include <span>
#include <vector>

#include "perminv/perm_group.hpp"
#include "perminv/permutation.hpp"

namespace perminv {

/// A {+1,-1}-valued function on a group, stored densely and aligned with
/// PermGroup::elements(). A table is only meaningful alongside the group it
/// was built from.
class CharacterTable {
 public:
  CharacterTable() = default;
  explicit CharacterTable(std::vector<int> values);

  std::size_t size() const { return values_.size(); }
  int value_at(std::size_t element_index) const { return values_[element_index]; }
  std::span<const int> values() const { return values_; }

  /// Value at sigma; throws InvalidArgument if sigma is not in g.
  int operator()(const PermGroup& g, const Permutation& sigma) const;

  bool is_trivial() const;
  bool operator==(const CharacterTable&) const = default;

 private:
  std::vector<int> values_;
};

CharacterTable trivial_character(const PermGroup& g);
CharacterTable sign_character(const PermGroup& g);

/// chi(sigma) = sigma(theta) / theta for theta the product of (x_i - x_j)
/// over transpositions (i j) in t_set with i < j. Equals (-1)^s with s the
/// number of such pairs that sigma inverts.
int chi_of(const Permutation& sigma, std::span<const Permutation> t_set);

/// The table of chi_of over g with t_set = the transpositions of g.
CharacterTable theta_character(const PermGroup& g);

/// sign / chi, pointwise.
CharacterTable quotient(const CharacterTable& a, const CharacterTable& b);

bool characters_equal_on_group(const PermGroup& g, const CharacterTable& c1,
                               const CharacterTable& c2);

/// Checks c(ab) = c(a)c(b) for all pairs and c(id) = 1.
bool is_multiplicative(const PermGroup& g, const CharacterTable& c);

}  // namespace perminv
