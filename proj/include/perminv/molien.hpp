#pragma once

#include "perminv/characters.hpp"
#include "perminv/perm_group.hpp"
#include "perminv/polynomial.hpp"
#include "perminv/rational_function.hpp"

namespace perminv {

/// det(1 - sigma t) for sigma of the given cycle type: the product of
/// (1 - t^l) over cycle lengths l.
Polynomial denom_factor_of(const CycleType& ct);

/// (1/|G|) * sum over sigma of chi(sigma) / det(1 - sigma t), reduced.
/// With chi trivial this is the Hilbert series of the invariant ring; with
/// chi = sign, that of the sign-semi-invariants away from characteristic 2.
RationalFunction molien_series(const PermGroup& g, const CharacterTable& chi);

/// Hilbert series of the invariants of the Young subgroup on `blocks`: the
/// product over blocks A of prod_{i=1}^{|A|} 1/(1 - t^i).
RationalFunction young_product_series(const Partition& blocks);

}  // namespace perminv
