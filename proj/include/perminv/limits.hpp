#pragma once

#include <cstddef>
#include <cstdint>

namespace perminv {

/// Size caps. Hitting one raises CapExceeded instead of truncating.
struct Limits {
  std::size_t max_n = 12;
  std::uint64_t max_order = 1'000'000;
  /// Largest monomial basis enumerated for one degree.
  std::uint64_t max_monomials = 2'000'000;
  /// Largest basis the linear-algebra oracle will row-reduce.
  std::uint64_t max_oracle_monomials = 5'000;
};

}  // namespace perminv
