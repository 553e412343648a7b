#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "perminv/limits.hpp"
#include "perminv/perm_group.hpp"

namespace perminv {

bool is_prime(std::uint64_t p);

/// Characteristic of the ground field: 0 or a prime.
class FieldChar {
 public:
  /// Throws InvalidArgument unless p is 0 or prime.
  explicit FieldChar(std::uint64_t p);

  std::uint64_t p() const { return p_; }
  bool is_two() const { return p_ == 2; }
  bool is_zero() const { return p_ == 0; }

  auto operator<=>(const FieldChar&) const = default;

 private:
  std::uint64_t p_;
};

/// Hilbert-function values of a graded vector space on [lo, hi].
/// dims[k] is the dimension in degree lo + k.
struct GradedWindow {
  int lo = 0;
  int hi = -1;
  std::vector<std::uint64_t> dims;

  /// Dimension in the given degree; throws InvalidArgument outside [lo, hi].
  std::uint64_t at(int degree) const;
  std::optional<int> top_nonzero_degree() const;

  /// The window of M(s), whose degree-j piece is M's degree-(j+s) piece.
  GradedWindow shifted(int s) const;

  bool operator==(const GradedWindow&) const = default;
};

enum class CanonicalBase { invariant_ring, sign_semi_invariants };

std::string to_string(CanonicalBase b);

/// omega of the invariant ring as base(shift).
struct CanonicalDescriptor {
  CanonicalBase base = CanonicalBase::invariant_ring;
  int shift = 0;

  bool operator==(const CanonicalDescriptor&) const = default;
};

/// Hilbert function of the G-invariants of H^n_m(S), on degrees [-n-D, -n]:
/// the degree -n-d piece has the dimension of the degree-d sign-semi-
/// invariants (all invariants in characteristic 2).
GradedWindow hilb_top_cohomology_invariants(const PermGroup& g, FieldChar ch, int depth,
                                            const Limits& limits = {});

/// Hilbert function of H^n_n(S^G). Same as above away from characteristic
/// 2; in characteristic 2 it is that window shifted by c, i.e. on
/// [-(c+n)-D, -(c+n)].
GradedWindow hilb_top_cohomology_of_invariant_ring(const PermGroup& g, FieldChar ch, int depth,
                                                   const Limits& limits = {});

/// a(S^G). Characteristic 2: -(c+n). Otherwise -(d+n) with d the least
/// degree of a sign-good monomial, cross-checked against the degree of the
/// Molien series; disagreement throws InternalError.
int a_invariant(const PermGroup& g, FieldChar ch, const Limits& limits = {});

CanonicalDescriptor canonical_descriptor(const PermGroup& g, FieldChar ch);

}  // namespace perminv
