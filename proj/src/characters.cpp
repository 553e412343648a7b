#include "perminv/characters.hpp"

#include <algorithm>

#include "perminv/error.hpp"

namespace perminv {

CharacterTable::CharacterTable(std::vector<int> values) : values_(std::move(values)) {
  for (int v : values_) {
    if (v != 1 && v != -1) throw InvalidArgument("character values must be +1 or -1");
  }
}

int CharacterTable::operator()(const PermGroup& g, const Permutation& sigma) const {
  auto idx = g.index_of(sigma);
  if (!idx || *idx >= values_.size()) {
    throw InvalidArgument("permutation " + sigma.to_cycle_string() + " is not in the group");
  }
  return values_[*idx];
}

bool CharacterTable::is_trivial() const {
  return std::all_of(values_.begin(), values_.end(), [](int v) { return v == 1; });
}

CharacterTable trivial_character(const PermGroup& g) {
  return CharacterTable(std::vector<int>(g.order(), 1));
}

CharacterTable sign_character(const PermGroup& g) {
  std::vector<int> v;
  v.reserve(g.order());
  for (const auto& p : g.elements()) v.push_back(sign_of(p));
  return CharacterTable(std::move(v));
}

int chi_of(const Permutation& sigma, std::span<const Permutation> t_set) {
  auto img = sigma.zero_based();
  int s = 0;
  for (const auto& t : t_set) {
    auto timg = t.zero_based();
    std::size_t i = 0;
    while (i < timg.size() && timg[i] == static_cast<int>(i)) ++i;
    const auto j = static_cast<std::size_t>(timg[i]);  // i < j: first moved point
    if (img[i] > img[j]) ++s;
  }
  return s % 2 == 0 ? 1 : -1;
}

CharacterTable theta_character(const PermGroup& g) {
  std::vector<int> v;
  v.reserve(g.order());
  for (const auto& p : g.elements()) v.push_back(chi_of(p, g.transpositions()));
  return CharacterTable(std::move(v));
}

CharacterTable quotient(const CharacterTable& a, const CharacterTable& b) {
  if (a.size() != b.size()) throw InvalidArgument("character tables of different groups");
  std::vector<int> v(a.size());
  // Values are +-1, so division is multiplication.
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.value_at(i) * b.value_at(i);
  return CharacterTable(std::move(v));
}

bool characters_equal_on_group(const PermGroup& g, const CharacterTable& c1,
                               const CharacterTable& c2) {
  if (c1.size() != g.order() || c2.size() != g.order()) {
    throw InvalidArgument("character table does not cover the group");
  }
  return c1 == c2;
}

bool is_multiplicative(const PermGroup& g, const CharacterTable& c) {
  auto els = g.elements();
  if (c.size() != els.size() || c.value_at(0) != 1) return false;
  for (std::size_t a = 0; a < els.size(); ++a) {
    for (std::size_t b = 0; b < els.size(); ++b) {
      const auto ab = g.index_of(compose(els[a], els[b]));
      if (!ab || c.value_at(*ab) != c.value_at(a) * c.value_at(b)) return false;
    }
  }
  return true;
}

}  // namespace perminv
