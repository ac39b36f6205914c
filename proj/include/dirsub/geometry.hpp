#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dirsub {

using Vec = std::vector<double>;
using Mat = std::vector<Vec>;  // row-major

class DimensionError : public std::runtime_error {
 public:
  explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

double dot(const Vec& a, const Vec& b);
double norm2(const Vec& a);

// Convex compact set given by its vertices. The normalized form keeps
// extreme points only.
struct Polytope {
  int n = 0;
  std::vector<Vec> vertices;
};

Polytope make_polytope(int n, std::vector<Vec> vertices);
Polytope singleton(Vec point);

double support_function(const Polytope& c, const Vec& l);

// Vertices attaining the support value within tol * max(1, |support|).
// For l = 0 the whole set is returned.
Polytope supporting_face(const Polytope& c, const Vec& l, double tol = 1e-9);

// Drops every vertex that lies in the convex hull of the others.
Polytope prune_extreme(const Polytope& c, double tol = 1e-9);

// Exact for vertex lists: sums all pairs, then prunes to extreme points.
Polytope minkowski_sum(const Polytope& a, const Polytope& b);
Polytope scale_polytope(double lambda, const Polytope& c);
Polytope negate_polytope(const Polytope& c);

// True iff p lies in conv(points), decided via Caratheodory subsets
// (subsets of <= n+1 vertices, small least-squares solves).
bool in_convex_hull(const Vec& p, const std::vector<Vec>& points, double tol = 1e-9);

// Deterministic sampling of S^{n-1}. For n >= 3 each grid carries the grid
// used for its (n-1)-sphere recursion.
struct SphereGrid {
  int n = 0;
  std::vector<Vec> directions;
  std::shared_ptr<const SphereGrid> sub;  // null for n == 1

  // descriptor (grid identity)
  int resolution = 0;        // K for n == 2
  int polar = 0, azimuth = 0;  // for n == 3

  // index pairs of neighbouring directions, used for continuity reports
  std::vector<std::pair<int, int>> adjacent_pairs;
  double angular_spacing = 0.0;
};

using GridPtr = std::shared_ptr<const SphereGrid>;

// n = 1: [-1, +1]. n = 2: K equally spaced angles, 8 | K so the special
// directions pi*j/4 are grid nodes (snapped to exact coordinates).
GridPtr make_sphere_grid(int n, int resolution);

// n = 3 grid: rings phi = i*pi/polar (0 < i < polar) with `azimuth` angles
// each, plus both poles. The n = 2 recursion runs at resolution sub_k.
GridPtr make_sphere_grid3(int polar, int azimuth, int sub_k);

bool grids_match(const SphereGrid& a, const SphereGrid& b);

// The fixed rotation R_{n,l} with R_{n,l} l = e^n, det = +1.
// n = 2: [[l2, -l1], [l1, l2]].
// n = 3: rotation about the axis (l x e3)/|l x e3| by arccos<l, e3>;
// identity at l = e3 and diag(1,-1,-1) at l = -e3.
Mat rotation(const Vec& l);

// Pi_{n-1,l} x: rotate by R_{n,l}, drop the last coordinate.
Vec project(const Vec& l, const Vec& x);

// Pi^T_{n-1,l} y = R^{-1}_{n,l} (y, 0); right inverse of project on span{l}^perp.
Vec lift(const Vec& l, const Vec& y);

// n x (n-1) matrix A with A y = lift(l, y); the first n-1 columns of R^T.
Mat lift_matrix(const Vec& l);

Polytope project_polytope(const Vec& l, const Polytope& c);

}  // namespace dirsub
