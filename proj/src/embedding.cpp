#include "dirsub/embedding.hpp"

#include <algorithm>

#include "dirsub/parallel.hpp"

namespace dirsub {

namespace {

DirectedSet embed_recurse(const Polytope& c, const GridPtr& grid) {
  if (grid->n == 1) {
    double lo = c.vertices[0][0], hi = lo;
    for (const auto& v : c.vertices) {
      lo = std::min(lo, v[0]);
      hi = std::max(hi, v[0]);
    }
    return DirectedSet(di_from_interval(lo, hi));
  }
  std::vector<DirectedSet::Entry> entries(grid->directions.size());
  for (std::size_t i = 0; i < grid->directions.size(); ++i) {
    const Vec& l = grid->directions[i];
    Polytope face = supporting_face(c, l);
    entries[i] = DirectedSet::Entry{embed_recurse(project_polytope(l, face), grid->sub),
                  support_function(c, l)};
  }
  return DirectedSet(grid, std::move(entries));
}

}  // namespace

DirectedSet embed(const Polytope& c, const GridPtr& grid) {
  if (!grid) throw DimensionError("embed: null grid");
  if (c.n != grid->n) throw DimensionError("embed: polytope/grid dimension mismatch");
  if (grid->n == 1) return embed_recurse(c, grid);
  // parallel over the top-level directions only
  std::vector<DirectedSet::Entry> entries(grid->directions.size());
  parallel_for(grid->directions.size(), [&](std::size_t i) {
    const Vec& l = grid->directions[i];
    Polytope face = supporting_face(c, l);
    entries[i] = DirectedSet::Entry{embed_recurse(project_polytope(l, face), grid->sub),
                  support_function(c, l)};
  });
  return DirectedSet(grid, std::move(entries));
}

DirectedSet dc_directed_subdifferential(const Expr& g, const Expr& h, const Vec& x,
                                        const GridPtr& grid) {
  Polytope dg = convex_polyhedral_subdifferential(g, x);
  Polytope dh = convex_polyhedral_subdifferential(h, x);
  return ds_linear_comb(1.0, embed(dg, grid), -1.0, embed(dh, grid));
}

DirectedSet qd_directed_subdifferential(const Polytope& lower, const Polytope& upper,
                                        const GridPtr& grid) {
  if (lower.n != upper.n)
    throw DimensionError("qd_directed_subdifferential: dimension mismatch");
  return ds_linear_comb(1.0, embed(lower, grid), -1.0,
                        embed(negate_polytope(upper), grid));
}

}  // namespace dirsub
