#include "perminv/decisions.hpp"

#include <algorithm>

#include "perminv/characters.hpp"
#include "perminv/error.hpp"
#include "perminv/molien.hpp"

namespace perminv {

namespace {

bool is_power_of(std::uint64_t value, std::uint64_t p) {
  if (value == 0) return false;
  while (value % p == 0) value /= p;
  return value == 1;
}

}  // namespace

bool quasi_gorenstein(const PermGroup& g, FieldChar ch, const Limits& limits) {
  if (ch.is_two()) return true;
  const bool by_characters =
      characters_equal_on_group(g, sign_character(g), theta_character(g));
  const int c = static_cast<int>(g.transposition_count());
  const int n = static_cast<int>(g.arity());
  const bool by_degree = a_invariant(g, ch, limits) == -(c + n);
  if (by_characters != by_degree) {
    throw InternalError(std::string("quasi-Gorenstein routes disagree: character test says ") +
                        (by_characters ? "yes" : "no") + ", a-invariant test says " +
                        (by_degree ? "yes" : "no"));
  }
  return by_characters;
}

bool splits(const PermGroup& g, FieldChar ch) {
  return ch.is_zero() || g.index_g_n() % ch.p() != 0;
}

std::size_t transvection_count(const PermGroup& g, FieldChar ch) {
  return ch.is_two() ? g.transposition_count() : 0;
}

PolynomialityVerdict is_invariant_ring_polynomial_for_N(const PermGroup& g, const Limits& limits) {
  const PermGroup n_group = n_subgroup_group(g, limits);
  PolynomialityVerdict v{true, young_product_series(g.partition())};
  if (v.hilbert_series != molien_series(n_group, trivial_character(n_group))) {
    throw InternalError("Molien series of N differs from the Young block product " +
                        v.hilbert_series.to_string());
  }
  return v;
}

ShankWehlauVerdict shank_wehlau_verdict(const PermGroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  return {is_power_of(g.order(), p), splits(g, FieldChar(p)), g.generated_by_transpositions()};
}

InvariantReport build_report(const PermGroup& g, std::span<const FieldChar> chars, int depth,
                             const Limits& limits) {
  if (depth < 0) throw InvalidArgument("window depth must be non-negative");
  if (chars.empty()) throw InvalidArgument("at least one characteristic is required");
  std::vector<FieldChar> unique(chars.begin(), chars.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

  const int n = static_cast<int>(g.arity());
  const int c = static_cast<int>(g.transposition_count());

  InvariantReport r;
  r.n = g.arity();
  r.order = g.order();
  r.transpositions.assign(g.transpositions().begin(), g.transpositions().end());
  r.partition = g.partition();
  r.index_g_n = g.index_g_n();
  r.hilb_invariants = molien_series(g, trivial_character(g));
  r.hilb_sign_semi_invariants = molien_series(g, sign_character(g));
  r.hilb_invariants_degree = rf_degree(r.hilb_invariants);
  r.generated_by_transpositions = g.generated_by_transpositions();
  r.depth = depth;

  // Splitting at every prime; only primes up to |G/N| can divide it.
  r.uniformly_split = true;
  for (std::uint64_t p = 2; p <= std::max<std::uint64_t>(r.index_g_n, 2); ++p) {
    if (is_prime(p) && !splits(g, FieldChar(p))) r.uniformly_split = false;
  }
  if (r.uniformly_split != (r.index_g_n == 1) ||
      r.uniformly_split != (g.n_subgroup().size() == g.order())) {
    throw InternalError("uniform splitting disagrees with generation by transpositions");
  }

  const auto young = is_invariant_ring_polynomial_for_N(g, limits);
  if (r.generated_by_transpositions && young.hilbert_series != r.hilb_invariants) {
    throw InternalError("G = N but its Molien series is not the Young block product");
  }

  for (FieldChar ch : unique) {
    CharacteristicReport cr;
    cr.characteristic = ch;
    cr.a_invariant = a_invariant(g, ch, limits);
    cr.quasi_gorenstein = quasi_gorenstein(g, ch, limits);
    if (ch.is_zero()) cr.gorenstein = cr.quasi_gorenstein;
    cr.splits = splits(g, ch);
    cr.transvections = transvection_count(g, ch);
    cr.canonical = canonical_descriptor(g, ch);
    cr.invariants_of_cohomology = hilb_top_cohomology_invariants(g, ch, depth, limits);
    cr.cohomology_of_invariants = hilb_top_cohomology_of_invariant_ring(g, ch, depth, limits);

    const int t = static_cast<int>(cr.transvections);
    if (cr.cohomology_of_invariants.shifted(-t) != cr.invariants_of_cohomology) {
      throw InternalError("cohomology windows do not agree up to the transvection shift");
    }
    if (ch.is_two() && !cr.quasi_gorenstein) {
      throw InternalError("characteristic 2 invariant ring reported not quasi-Gorenstein");
    }
    // The a-invariant is visible in the window once it reaches deep enough.
    const int reach = cr.cohomology_of_invariants.lo;
    if (cr.a_invariant >= reach) {
      if (cr.cohomology_of_invariants.top_nonzero_degree() != cr.a_invariant) {
        throw InternalError("a-invariant " + std::to_string(cr.a_invariant) +
                            " is not the top nonzero degree of the cohomology window");
      }
    }
    if (ch.is_two() && cr.canonical.shift != -(c + n)) {
      throw InternalError("characteristic 2 canonical shift is not -(c+n)");
    }
    r.per_char.push_back(std::move(cr));
  }
  return r;
}

}  // namespace perminv
