#pragma once

#include "dirsub/directed_set.hpp"
#include "dirsub/expr.hpp"
#include "dirsub/geometry.hpp"

namespace dirsub {

// Embedding J_n of a polytope into the space of directed sets: for n = 1 the
// interval embedding (-a, b); for n >= 2, per grid direction, the embedded
// projected supporting face plus the support value.
DirectedSet embed(const Polytope& c, const GridPtr& grid);

// J_n(subdiff g(x)) - J_n(subdiff h(x)); g, h must be in max-affine form.
DirectedSet dc_directed_subdifferential(const Expr& g, const Expr& h, const Vec& x,
                                        const GridPtr& grid);

// J_n(lower) - J_n(neg upper); `upper` is the superdifferential, negated
// internally (the algebraic negative, vertexwise).
DirectedSet qd_directed_subdifferential(const Polytope& lower, const Polytope& upper,
                                        const GridPtr& grid);

}  // namespace dirsub
