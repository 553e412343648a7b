#include "perminv/cohomology.hpp"

#include "perminv/characters.hpp"
#include "perminv/error.hpp"
#include "perminv/molien.hpp"
#include "perminv/monomial_orbits.hpp"

namespace perminv {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

FieldChar::FieldChar(std::uint64_t p) : p_(p) {
  if (p != 0 && !is_prime(p)) {
    throw InvalidArgument("characteristic " + std::to_string(p) + " is neither 0 nor prime");
  }
}

std::uint64_t GradedWindow::at(int degree) const {
  if (degree < lo || degree > hi) {
    throw InvalidArgument("degree " + std::to_string(degree) + " outside window [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return dims[static_cast<std::size_t>(degree - lo)];
}

std::optional<int> GradedWindow::top_nonzero_degree() const {
  for (int j = hi; j >= lo; --j) {
    if (at(j) != 0) return j;
  }
  return std::nullopt;
}

GradedWindow GradedWindow::shifted(int s) const { return GradedWindow{lo - s, hi - s, dims}; }

std::string to_string(CanonicalBase b) {
  switch (b) {
    case CanonicalBase::invariant_ring:
      return "invariant-ring";
    case CanonicalBase::sign_semi_invariants:
      return "sign-semi-invariants";
  }
  return "?";
}

GradedWindow hilb_top_cohomology_invariants(const PermGroup& g, FieldChar ch, int depth,
                                            const Limits& limits) {
  if (depth < 0) throw InvalidArgument("window depth must be non-negative");
  // sign is trivial in characteristic 2.
  const CharacterTable chi = ch.is_two() ? trivial_character(g) : sign_character(g);
  const int n = static_cast<int>(g.arity());
  GradedWindow w{-n - depth, -n, std::vector<std::uint64_t>(static_cast<std::size_t>(depth) + 1)};
  for (int d = 0; d <= depth; ++d) {
    // degree -n-d sits at offset depth-d from lo.
    w.dims[static_cast<std::size_t>(depth - d)] = count_good_orbits(g, chi, d, limits);
  }
  return w;
}

GradedWindow hilb_top_cohomology_of_invariant_ring(const PermGroup& g, FieldChar ch, int depth,
                                                   const Limits& limits) {
  GradedWindow w = hilb_top_cohomology_invariants(g, ch, depth, limits);
  if (!ch.is_two()) return w;
  return w.shifted(static_cast<int>(g.transposition_count()));
}

int a_invariant(const PermGroup& g, FieldChar ch, const Limits& limits) {
  const int n = static_cast<int>(g.arity());
  const int c = static_cast<int>(g.transposition_count());
  if (ch.is_two()) return -(c + n);

  const int d = min_good_degree(g, sign_character(g), limits);
  const int by_orbits = -(d + n);
  const int by_series = rf_degree(molien_series(g, trivial_character(g)));
  if (by_orbits != by_series) {
    throw InternalError("a-invariant routes disagree: minimal sign-good degree gives " +
                        std::to_string(by_orbits) + ", Molien series degree gives " +
                        std::to_string(by_series));
  }
  return by_orbits;
}

CanonicalDescriptor canonical_descriptor(const PermGroup& g, FieldChar ch) {
  const int n = static_cast<int>(g.arity());
  if (ch.is_two()) {
    return {CanonicalBase::invariant_ring, -(static_cast<int>(g.transposition_count()) + n)};
  }
  return {CanonicalBase::sign_semi_invariants, -n};
}

}  // namespace perminv
