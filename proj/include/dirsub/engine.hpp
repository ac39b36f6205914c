#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dirsub/directed_set.hpp"
#include "dirsub/embedding.hpp"
#include "dirsub/expr.hpp"

namespace dirsub {

// Boundedness certificate for the recursive construction. M equals the norm
// of the computed directed subdifferential; continuity of the directional
// derivative on the sphere is reported (max adjacent-node jump), not decided.
struct MCertificate {
  double m = 0.0;
  std::vector<double> level_max;  // per recursion level, outermost first
  double continuity_max_jump = 0.0;
  bool continuity_flag = false;  // jump exceeded 10 * spacing * max(1, M)
};

enum class Route { Derivative, DC, QD };

struct DirSubResult {
  DirectedSet value;
  MCertificate certificate;
  Route route = Route::Derivative;
};

// Restriction of a directional-derivative expression to l + span{l}^perp:
// y -> phi(l + lift(l, y)); drops the arity by one.
Expr restrict_to_sphere_point(const Expr& phi, const Vec& l);

// The recursive directional-derivative construction: for n = 1 the directed
// interval (f'(x;-1), f'(x;+1)); for n >= 2, per grid direction l, the
// support f'(x;l) and the directed subdifferential of the restriction at 0.
DirSubResult directed_subdifferential(const Expr& f, const Vec& x, const GridPtr& grid);

MCertificate certify(const Expr& f, const Vec& x, const GridPtr& grid);

struct RouteInputs {
  std::optional<Expr> f;                         // derivative route
  std::optional<std::pair<Expr, Expr>> dc;       // (g, h) with f = g - h
  std::optional<std::pair<Polytope, Polytope>> qd;  // (lower, upper)
};

struct RoutePair {
  std::string a, b;
  EqualReport report;
};

struct RouteComparison {
  bool pass = false;
  std::vector<RoutePair> pairs;
};

// Computes every requested route and cross-checks them pairwise with
// ds_equal at the given tolerance. When both f and (g, h) are supplied,
// f = g - h is spot-checked at 100 random points first; a mismatch raises
// StructureError.
RouteComparison compare_routes(const RouteInputs& inputs, const Vec& x,
                               const GridPtr& grid, double tol);

}  // namespace dirsub
