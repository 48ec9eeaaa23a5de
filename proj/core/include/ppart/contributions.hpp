#pragma once

#include "ppart/coeff_ring.hpp"
#include "ppart/decorations.hpp"

namespace ppart {

/// Factor of one decorated entry in types A, B and C.
CoeffElement entry_factor(const DecoratedPattern& dp, Position p, int n);

/// σ of one type-D entry. Circled-and-boxed gives 0, boxed gives
/// g_1(a) q^{-a}, and an unboxed entry gives h_1(a) q^{-a} whether or not
/// it is circled (so an unboxed 0 gives 1).
CoeffElement sigma_entry(const DecoratedPattern& dp, Position p, int n);

/// σ(C) for one connected component of a type-D row.
CoeffElement sigma_component(const ComponentD& c, const DecoratedPattern& dp, int n);

/// G(L): product of entry factors (A/B/C) or of component σ's (D).
CoeffElement pattern_coefficient(const DecoratedPattern& dp, int n,
                                 LeanerBoundary boundary = LeanerBoundary::row_end_is_drop);

}  // namespace ppart
