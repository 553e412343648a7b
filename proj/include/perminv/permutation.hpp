#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace perminv {

/// Multiset of cycle lengths, fixed points included, sorted descending.
struct CycleType {
  std::vector<int> lengths;

  int arity() const;
  auto operator<=>(const CycleType&) const = default;
};

/// A bijection of {1,...,n}. All public indices are 1-based; storage is
/// 0-based. Composition is right-to-left: compose(a, b)(i) = a(b(i)).
class Permutation {
 public:
  Permutation() = default;

  /// From a one-line image list, images[i-1] = sigma(i). Throws
  /// InvalidArgument if the list is not a bijection of {1..n}.
  explicit Permutation(std::span<const int> images);
  Permutation(std::initializer_list<int> images);

  static Permutation identity(std::size_t n);

  std::size_t arity() const { return img_.size(); }

  /// sigma(i), 1-based.
  int operator()(int i) const { return img_[static_cast<std::size_t>(i - 1)] + 1; }

  /// One-line form, 1-based.
  std::vector<int> images() const;

  /// Raw 0-based images, used by hot loops.
  std::span<const int> zero_based() const { return img_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Disjoint-cycle form such as "(1 2)(3 4)"; "()" for the identity.
  std::string to_cycle_string() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> img_;
};

/// (a o b)(i) = a(b(i)). Throws InvalidArgument on arity mismatch.
Permutation compose(const Permutation& a, const Permutation& b);

/// (-1)^(n - number of cycles).
int sign_of(const Permutation& p);

CycleType cycle_type(const Permutation& p);

/// True iff p swaps exactly two points and fixes the rest.
bool is_transposition(const Permutation& p);

/// Parses a product of cycles such as "(1 2 3)(2 4)". The rightmost cycle
/// acts first. An empty (or all-whitespace) string is the identity.
/// Throws ParseError on syntax errors, out-of-range or repeated indices.
Permutation parse_cycles(std::string_view text, std::size_t n);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace perminv
