#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "perminv/cohomology.hpp"
#include "perminv/limits.hpp"
#include "perminv/perm_group.hpp"
#include "perminv/rational_function.hpp"

namespace perminv {

/// Whether S^G is quasi-Gorenstein. Always true in characteristic 2.
/// Otherwise decided twice, by comparing sign with the theta character and
/// by testing a(S^G) = -(c+n); InternalError if the two disagree.
bool quasi_gorenstein(const PermGroup& g, FieldChar ch, const Limits& limits = {});

/// Whether S^G -> S splits: the characteristic does not divide |G/N|.
bool splits(const PermGroup& g, FieldChar ch);

/// Number of transvections in G: its transpositions in characteristic 2,
/// none otherwise.
std::size_t transvection_count(const PermGroup& g, FieldChar ch);

struct PolynomialityVerdict {
  bool polynomial = false;
  RationalFunction hilbert_series;  // of S^N
};

/// S^N is a polynomial ring on the Young blocks. Returns the block product
/// series after checking it against the Molien series of N.
PolynomialityVerdict is_invariant_ring_polynomial_for_N(const PermGroup& g,
                                                        const Limits& limits = {});

struct ShankWehlauVerdict {
  bool is_p_group = false;
  bool splits = false;
  bool polynomial = false;  // G == N

  bool operator==(const ShankWehlauVerdict&) const = default;
};

ShankWehlauVerdict shank_wehlau_verdict(const PermGroup& g, std::uint64_t p);

/// Verdicts for one characteristic.
struct CharacteristicReport {
  FieldChar characteristic{0};
  int a_invariant = 0;
  bool quasi_gorenstein = false;
  /// Only decided in characteristic 0, where S^G is Cohen-Macaulay.
  std::optional<bool> gorenstein;
  bool splits = false;
  std::size_t transvections = 0;
  CanonicalDescriptor canonical;
  GradedWindow invariants_of_cohomology;  // H^n_m(S)^G
  GradedWindow cohomology_of_invariants;  // H^n_n(S^G)
};

struct InvariantReport {
  std::size_t n = 0;
  std::uint64_t order = 0;
  std::vector<Permutation> transpositions;
  Partition partition;
  std::uint64_t index_g_n = 1;
  RationalFunction hilb_invariants;
  RationalFunction hilb_sign_semi_invariants;
  int hilb_invariants_degree = 0;
  bool generated_by_transpositions = false;
  bool uniformly_split = false;
  int depth = 0;
  std::vector<CharacteristicReport> per_char;  // ascending characteristic
};

/// Runs every verdict and cross-check for each characteristic (duplicates
/// dropped). Throws InternalError if any two independent routes disagree.
InvariantReport build_report(const PermGroup& g, std::span<const FieldChar> chars, int depth,
                             const Limits& limits = {});

}  // namespace perminv
