#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "perminv/characters.hpp"
#include "perminv/limits.hpp"
#include "perminv/perm_group.hpp"

namespace perminv {

/// x_1^e_1 ... x_n^e_n as its exponent vector.
struct Monomial {
  std::vector<int> exponents;

  int degree() const;
  auto operator<=>(const Monomial&) const = default;
};

/// sigma . m, where sigma sends x_i to x_sigma(i): (sigma.m)[sigma(i)] = m[i].
Monomial act(const Permutation& sigma, const Monomial& m);

/// C(d+n-1, n-1), saturating at UINT64_MAX.
std::uint64_t monomial_count(std::size_t n, int d);

/// All degree-d monomials in n variables, lexicographically descending
/// (x_1^d first). Throws CapExceeded past limits.max_monomials.
std::vector<Monomial> enumerate_monomials(std::size_t n, int d, const Limits& limits = {});

std::vector<Permutation> stabilizer_of(const Monomial& m, const PermGroup& g);

/// True iff every element stabilizing m has chi-value +1.
bool is_chi_good(const Monomial& m, const PermGroup& g, const CharacterTable& chi);

struct OrbitRecord {
  Monomial representative;  // lexicographically greatest member
  std::uint64_t size = 0;
  bool good = false;
};

/// The G-orbits on degree-d monomials, ordered by descending representative.
std::vector<OrbitRecord> orbit_decompose(const PermGroup& g, int d, const CharacterTable& chi,
                                         const Limits& limits = {});

/// Number of chi-good orbits in degree d; the dimension of the degree-d
/// chi-semi-invariants wherever chi is realizable.
std::uint64_t count_good_orbits(const PermGroup& g, const CharacterTable& chi, int d,
                                const Limits& limits = {});

/// Smallest d with a chi-good degree-d monomial. At most n(n-1)/2, since
/// the staircase monomial x_2 x_3^2 ... x_n^(n-1) has trivial stabilizer.
int min_good_degree(const PermGroup& g, const CharacterTable& chi, const Limits& limits = {});

}  // namespace perminv
