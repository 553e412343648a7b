#include "perminv/monomial_orbits.hpp"

#include <limits>
#include <numeric>
#include <unordered_map>

#include "perminv/error.hpp"

namespace perminv {

namespace {

struct ExponentHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 14695981039346656037ull;
    for (int e : v) {
      h ^= static_cast<std::size_t>(e);
      h *= 1099511628211ull;
    }
    return h;
  }
};

bool stabilizer_in_kernel(const Monomial& m, const PermGroup& g, const CharacterTable& chi) {
  auto els = g.elements();
  for (std::size_t k = 0; k < els.size(); ++k) {
    if (chi.value_at(k) == 1) continue;
    if (act(els[k], m) == m) return false;
  }
  return true;
}

void check_character(const PermGroup& g, const CharacterTable& chi) {
  if (chi.size() != g.order()) throw InvalidArgument("character table does not cover the group");
}

}  // namespace

int Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

Monomial act(const Permutation& sigma, const Monomial& m) {
  if (sigma.arity() != m.exponents.size()) {
    throw InvalidArgument("monomial and permutation arity differ");
  }
  auto img = sigma.zero_based();
  Monomial out;
  out.exponents.resize(m.exponents.size());
  for (std::size_t i = 0; i < img.size(); ++i) {
    out.exponents[static_cast<std::size_t>(img[i])] = m.exponents[i];
  }
  return out;
}

std::uint64_t monomial_count(std::size_t n, int d) {
  if (n == 0 || d < 0) return d == 0 ? 1 : 0;
  // C(d+n-1, k) with k = min(d, n-1), computed incrementally.
  const std::uint64_t top = static_cast<std::uint64_t>(d) + n - 1;
  const std::uint64_t k = std::min<std::uint64_t>(static_cast<std::uint64_t>(d), n - 1);
  unsigned __int128 c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c = c * (top - k + i) / i;
    if (c > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(c);
}

std::vector<Monomial> enumerate_monomials(std::size_t n, int d, const Limits& limits) {
  if (n == 0) throw InvalidArgument("arity must be at least 1");
  if (d < 0) throw InvalidArgument("degree must be non-negative");
  const auto count = monomial_count(n, d);
  if (count > limits.max_monomials) {
    throw CapExceeded("degree-" + std::to_string(d) + " monomial basis in " + std::to_string(n) +
                          " variables has " + std::to_string(count) + " elements, cap is " +
                          std::to_string(limits.max_monomials),
                      count);
  }
  std::vector<Monomial> out;
  out.reserve(count);
  std::vector<int> e(n, 0);
  e[0] = d;
  for (;;) {
    out.push_back(Monomial{e});
    // Next in descending lex order: find the rightmost nonzero entry left of
    // the last slot, move one unit right and sweep the tail into it.
    const int tail = e[n - 1];
    e[n - 1] = 0;
    std::size_t j = n - 1;
    while (j > 0 && e[j - 1] == 0) --j;
    if (j == 0) break;
    const std::size_t i = j - 1;
    --e[i];
    e[i + 1] = tail + 1;
  }
  return out;
}

std::vector<Permutation> stabilizer_of(const Monomial& m, const PermGroup& g) {
  std::vector<Permutation> out;
  for (const auto& p : g.elements()) {
    if (act(p, m) == m) out.push_back(p);
  }
  return out;
}

bool is_chi_good(const Monomial& m, const PermGroup& g, const CharacterTable& chi) {
  check_character(g, chi);
  return stabilizer_in_kernel(m, g, chi);
}

std::vector<OrbitRecord> orbit_decompose(const PermGroup& g, int d, const CharacterTable& chi,
                                         const Limits& limits) {
  check_character(g, chi);
  const auto monomials = enumerate_monomials(g.arity(), d, limits);
  std::unordered_map<std::vector<int>, std::size_t, ExponentHash> position;
  position.reserve(monomials.size());
  for (std::size_t i = 0; i < monomials.size(); ++i) position.emplace(monomials[i].exponents, i);

  std::vector<bool> visited(monomials.size(), false);
  std::vector<OrbitRecord> orbits;
  auto els = g.elements();
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    if (visited[i]) continue;
    // Sweeping in descending order, the first unvisited member is the
    // greatest in its orbit.
    OrbitRecord rec{monomials[i], 0, true};
    for (std::size_t k = 0; k < els.size(); ++k) {
      Monomial image = act(els[k], monomials[i]);
      if (image == monomials[i] && chi.value_at(k) != 1) rec.good = false;
      const std::size_t j = position.at(image.exponents);
      if (!visited[j]) {
        visited[j] = true;
        ++rec.size;
      }
    }
    orbits.push_back(std::move(rec));
  }
  return orbits;
}

std::uint64_t count_good_orbits(const PermGroup& g, const CharacterTable& chi, int d,
                                const Limits& limits) {
  std::uint64_t good = 0;
  for (const auto& o : orbit_decompose(g, d, chi, limits)) {
    if (o.good) ++good;
  }
  return good;
}

int min_good_degree(const PermGroup& g, const CharacterTable& chi, const Limits& limits) {
  check_character(g, chi);
  const auto n = static_cast<int>(g.arity());
  const int bound = n * (n - 1) / 2;
  for (int d = 0; d <= bound; ++d) {
    for (const auto& m : enumerate_monomials(g.arity(), d, limits)) {
      if (stabilizer_in_kernel(m, g, chi)) return d;
    }
  }
  throw InternalError("no good monomial up to the staircase degree " + std::to_string(bound));
}

}  // namespace perminv
