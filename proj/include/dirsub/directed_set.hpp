#pragma once

#include <string>
#include <vector>

#include "dirsub/geometry.hpp"

namespace dirsub {

// Ordered pair (a1(-1), a1(+1)) of support values; no ordering constraint,
// so "inverted" intervals (representing non-convex data) are valid.
struct DirectedInterval {
  double neg = 0.0;  // value at direction -1
  double pos = 0.0;  // value at direction +1
};

// Embedded image of [a, b]: (-a, b). Requires a <= b; use di_raw otherwise.
DirectedInterval di_from_interval(double a, double b);
inline DirectedInterval di_raw(double neg, double pos) { return {neg, pos}; }

struct DirectedSetEntry;

// Element of the space of directed sets at grid resolution. n = 1 is a
// directed interval; for n >= 2 each grid direction carries a
// lower-dimensional directed set plus a scalar support value.
class DirectedSet {
 public:
  using Entry = DirectedSetEntry;

  DirectedSet() = default;
  explicit DirectedSet(DirectedInterval iv) : n_(1), iv_(iv) {}
  DirectedSet(GridPtr grid, std::vector<Entry> entries);

  int dimension() const { return n_; }
  const DirectedInterval& interval() const;
  const GridPtr& grid() const { return grid_; }
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  int n_ = 0;
  DirectedInterval iv_;
  GridPtr grid_;
  std::vector<Entry> entries_;
};

struct DirectedSetEntry {
  DirectedSet lower;
  double support = 0.0;
};

// All-zero directed set on the given grid (grid may be null for n = 1).
DirectedSet ds_zero(const GridPtr& grid);

// Componentwise alpha * A + beta * B; grids must match.
DirectedSet ds_linear_comb(double alpha, const DirectedSet& a, double beta,
                           const DirectedSet& b);

double ds_norm(const DirectedSet& a);

struct EqualReport {
  bool equal = false;
  double max_abs_err = 0.0;
  std::string worst_path;  // direction chain realizing the max discrepancy
};

EqualReport ds_equal(const DirectedSet& a, const DirectedSet& b, double tol);

}  // namespace dirsub
