#include "perminv/molien.hpp"

#include <map>

#include "perminv/error.hpp"

namespace perminv {

Polynomial denom_factor_of(const CycleType& ct) {
  Polynomial out = Polynomial::one();
  for (int l : ct.lengths) {
    if (l < 1) throw InvalidArgument("cycle lengths must be positive");
    out = out * (Polynomial::one() - Polynomial::term(1, l));
  }
  return out;
}

RationalFunction molien_series(const PermGroup& g, const CharacterTable& chi) {
  if (chi.size() != g.order()) throw InvalidArgument("character table does not cover the group");
  // det(1 - sigma t) depends only on the cycle type, so collect the
  // character sum per cycle type first.
  std::map<CycleType, long> weight;
  auto els = g.elements();
  for (std::size_t k = 0; k < els.size(); ++k) weight[cycle_type(els[k])] += chi.value_at(k);

  RationalFunction sum;
  for (const auto& [ct, w] : weight) {
    if (w == 0) continue;
    sum += RationalFunction(Polynomial::term(w, 0), denom_factor_of(ct));
  }
  return sum * mpq_class(1, static_cast<unsigned long>(g.order()));
}

RationalFunction young_product_series(const Partition& blocks) {
  Polynomial den = Polynomial::one();
  for (const auto& b : blocks) {
    for (int i = 1; i <= static_cast<int>(b.size()); ++i) {
      den = den * (Polynomial::one() - Polynomial::term(1, i));
    }
  }
  return RationalFunction(Polynomial::one(), den);
}

}  // namespace perminv
