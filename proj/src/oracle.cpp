#include "perminv/oracle.hpp"

#include <map>

#include "perminv/cohomology.hpp"
#include "perminv/error.hpp"
#include "perminv/union_find.hpp"

namespace perminv {

namespace {

// Ascending odometer over exponent vectors of total degree d. Kept apart
// from the orbit module's enumerator.
std::vector<std::vector<int>> exponent_vectors(std::size_t n, int d, std::uint64_t cap) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(n, 0);
  auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
    if (pos + 1 == n) {
      e[pos] = remaining;
      out.push_back(e);
      if (out.size() > cap) {
        throw CapExceeded("oracle monomial basis exceeds cap " + std::to_string(cap), out.size());
      }
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      e[pos] = k;
      self(self, pos + 1, remaining - k);
    }
  };
  rec(rec, 0, d);
  return out;
}

std::vector<int> permute(std::span<const int> img, const std::vector<int>& e) {
  std::vector<int> out(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) out[static_cast<std::size_t>(img[i])] = e[i];
  return out;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

// Reduced rows keyed by pivot column; rows are inserted one at a time so
// the stacked constraint matrix is never materialized.
class EchelonRows {
 public:
  EchelonRows(std::size_t cols, std::uint64_t p) : cols_(cols), p_(p) {}

  void insert(std::vector<std::uint64_t> row) {
    for (std::size_t col = 0; col < cols_; ++col) {
      if (row[col] == 0) continue;
      auto it = pivots_.find(col);
      if (it == pivots_.end()) {
        const std::uint64_t inv = inverse_mod(row[col], p_);
        for (std::size_t c = col; c < cols_; ++c) row[c] = row[c] * inv % p_;
        pivots_.emplace(col, std::move(row));
        return;
      }
      const std::uint64_t f = row[col];
      const auto& pr = it->second;
      for (std::size_t c = col; c < cols_; ++c) row[c] = (row[c] + (p_ - f) * pr[c]) % p_;
    }
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  std::size_t cols_;
  std::uint64_t p_;
  std::map<std::size_t, std::vector<std::uint64_t>> pivots_;
};

}  // namespace

std::vector<std::uint64_t> ModularMatrix::row(std::size_t r) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

ModularMatrix::ModularMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), entries_(rows * cols, 0) {
  if (!is_prime(p)) throw InvalidArgument("modulus " + std::to_string(p) + " is not prime");
}

void ModularMatrix::set(std::size_t r, std::size_t c, std::int64_t value) {
  const auto p = static_cast<std::int64_t>(p_);
  entries_[r * cols_ + c] = static_cast<std::uint32_t>(((value % p) + p) % p);
}

std::size_t ModularMatrix::rank() const {
  std::vector<std::uint64_t> a(entries_.begin(), entries_.end());
  const std::uint64_t p = p_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && a[pivot * cols_ + col] == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank) {
      for (std::size_t c = 0; c < cols_; ++c) std::swap(a[pivot * cols_ + c], a[rank * cols_ + c]);
    }
    const std::uint64_t inv = inverse_mod(a[rank * cols_ + col], p);
    for (std::size_t c = col; c < cols_; ++c) a[rank * cols_ + c] = a[rank * cols_ + c] * inv % p;
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      const std::uint64_t f = a[r * cols_ + col];
      if (f == 0) continue;
      for (std::size_t c = col; c < cols_; ++c) {
        a[r * cols_ + c] = (a[r * cols_ + c] + (p - f) * a[rank * cols_ + c]) % p;
      }
    }
    ++rank;
  }
  return rank;
}

std::uint64_t brute_dim_by_orbits(const PermGroup& g, const CharacterTable& chi, int d,
                                  const Limits& limits) {
  if (chi.size() != g.order()) throw InvalidArgument("character table does not cover the group");
  const auto basis = exponent_vectors(g.arity(), d, limits.max_monomials);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

  UnionFind uf(basis.size());
  for (const auto& s : g.generators()) {
    const int parity = chi(g, s) == 1 ? 0 : 1;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      uf.unite(index.at(permute(s.zero_based(), basis[i])), i, parity);
    }
  }
  std::uint64_t good = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (uf.root(i) == i && !uf.conflicted(i)) ++good;
  }
  return good;
}

std::uint64_t fixed_space_dim_mod_p(const PermGroup& g, const CharacterTable& chi, int d,
                                    std::uint32_t p, ConstraintSet constraints,
                                    const Limits& limits) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  if (chi.size() != g.order()) throw InvalidArgument("character table does not cover the group");
  if (p == 2 && !chi.is_trivial()) {
    throw InvalidArgument("a nontrivial sign character is not realizable in characteristic 2");
  }
  const auto basis = exponent_vectors(g.arity(), d, limits.max_oracle_monomials);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

  std::vector<Permutation> acting;
  if (constraints == ConstraintSet::generators) {
    acting.assign(g.generators().begin(), g.generators().end());
  } else {
    acting.assign(g.elements().begin(), g.elements().end());
  }

  // Coefficient of s.m in s.v is v_m, so s.v = chi(s) v reads
  // v_m - chi(s) v_{s.m} = 0 for every monomial m: the rows of
  // I - chi(s) R(s)^T with R(s) the representation matrix on the basis.
  const std::size_t n_basis = basis.size();
  EchelonRows echelon(n_basis, p);
  for (const auto& s : acting) {
    const int value = chi(g, s);
    ModularMatrix block(n_basis, n_basis, p);
    for (std::size_t i = 0; i < n_basis; ++i) {
      const std::size_t j = index.at(permute(s.zero_based(), basis[i]));
      block.set(i, i, 1);
      block.set(i, j, static_cast<std::int64_t>(block.at(i, j)) - value);
    }
    for (std::size_t i = 0; i < n_basis; ++i) echelon.insert(block.row(i));
  }
  return n_basis - echelon.rank();
}

}  // namespace perminv
