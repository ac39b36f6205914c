#include "dirsub/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

namespace dirsub {

double dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("dot: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

Polytope make_polytope(int n, std::vector<Vec> vertices) {
  if (vertices.empty()) throw DimensionError("polytope: empty vertex list");
  for (const auto& v : vertices) {
    if (static_cast<int>(v.size()) != n)
      throw DimensionError("polytope: vertex dimension mismatch");
    for (double c : v)
      if (!std::isfinite(c)) throw DimensionError("polytope: non-finite vertex");
  }
  return prune_extreme(Polytope{n, std::move(vertices)});
}

Polytope singleton(Vec point) {
  int n = static_cast<int>(point.size());
  return make_polytope(n, {std::move(point)});
}

double support_function(const Polytope& c, const Vec& l) {
  if (static_cast<int>(l.size()) != c.n)
    throw DimensionError("support_function: dimension mismatch");
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : c.vertices) best = std::max(best, dot(l, v));
  return best;
}

Polytope supporting_face(const Polytope& c, const Vec& l, double tol) {
  bool zero = true;
  for (double li : l)
    if (li != 0.0) zero = false;
  if (zero) return c;
  double sup = support_function(c, l);
  double cut = sup - tol * std::max(1.0, std::abs(sup));
  std::vector<Vec> face;
  for (const auto& v : c.vertices)
    if (dot(l, v) >= cut) face.push_back(v);
  return Polytope{c.n, std::move(face)};
}

namespace {

// Solves min |M x - r| for a small (rows x cols) system via normal equations.
// Returns false if the system is numerically singular.
bool solve_least_squares(const Mat& m, const Vec& r, Vec& x) {
  std::size_t rows = m.size(), cols = m[0].size();
  Mat a(cols, Vec(cols, 0.0));
  Vec b(cols, 0.0);
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t k = 0; k < rows; ++k) a[i][j] += m[k][i] * m[k][j];
    for (std::size_t k = 0; k < rows; ++k) b[i] += m[k][i] * r[k];
  }
  // Gaussian elimination with partial pivoting.
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t piv = col;
    for (std::size_t i = col + 1; i < cols; ++i)
      if (std::abs(a[i][col]) > std::abs(a[piv][col])) piv = i;
    if (std::abs(a[piv][col]) < 1e-13) return false;
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    for (std::size_t i = col + 1; i < cols; ++i) {
      double f = a[i][col] / a[col][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[col][j];
      b[i] -= f * b[col];
    }
  }
  x.assign(cols, 0.0);
  for (std::size_t i = cols; i-- > 0;) {
    double s = b[i];
    for (std::size_t j = i + 1; j < cols; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return true;
}

// Checks whether p = sum lambda_i q_i with lambda >= -tol, sum lambda = 1,
// for the given subset; residual must vanish within scale * tol.
bool subset_contains(const Vec& p, const std::vector<const Vec*>& q, double tol) {
  std::size_t dim = p.size(), s = q.size();
  Mat m(dim + 1, Vec(s, 0.0));
  Vec r(dim + 1, 0.0);
  double scale = 1.0;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      m[i][j] = (*q[j])[i];
      scale = std::max(scale, std::abs(m[i][j]));
    }
    r[i] = p[i];
    scale = std::max(scale, std::abs(p[i]));
  }
  for (std::size_t j = 0; j < s; ++j) m[dim][j] = 1.0;
  r[dim] = 1.0;
  Vec lambda;
  if (!solve_least_squares(m, r, lambda)) return false;
  for (double w : lambda)
    if (w < -tol) return false;
  for (std::size_t i = 0; i <= dim; ++i) {
    double ri = -r[i];
    for (std::size_t j = 0; j < s; ++j) ri += m[i][j] * lambda[j];
    if (std::abs(ri) > tol * scale) return false;
  }
  return true;
}

}  // namespace

bool in_convex_hull(const Vec& p, const std::vector<Vec>& points, double tol) {
  if (points.empty()) return false;
  std::size_t m = points.size(), dim = p.size();
  std::size_t max_size = std::min(m, dim + 1);
  // Enumerate subsets of growing size (Caratheodory bound dim + 1).
  std::vector<std::size_t> idx;
  std::vector<const Vec*> q;
  // iterative combinations
  for (std::size_t s = 1; s <= max_size; ++s) {
    idx.assign(s, 0);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      q.clear();
      for (std::size_t i : idx) q.push_back(&points[i]);
      if (subset_contains(p, q, tol)) return true;
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == m - s + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t i = k; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return false;
}

Polytope prune_extreme(const Polytope& c, double tol) {
  std::vector<Vec> kept = c.vertices;
  for (std::size_t i = 0; i < kept.size();) {
    std::vector<Vec> others;
    others.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    if (!others.empty() && in_convex_hull(kept[i], others, tol))
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  return Polytope{c.n, std::move(kept)};
}

Polytope minkowski_sum(const Polytope& a, const Polytope& b) {
  if (a.n != b.n) throw DimensionError("minkowski_sum: dimension mismatch");
  std::vector<Vec> sums;
  sums.reserve(a.vertices.size() * b.vertices.size());
  for (const auto& u : a.vertices)
    for (const auto& v : b.vertices) {
      Vec w(static_cast<std::size_t>(a.n));
      for (int i = 0; i < a.n; ++i)
        w[static_cast<std::size_t>(i)] =
            u[static_cast<std::size_t>(i)] + v[static_cast<std::size_t>(i)];
      sums.push_back(std::move(w));
    }
  return prune_extreme(Polytope{a.n, std::move(sums)});
}

Polytope scale_polytope(double lambda, const Polytope& c) {
  std::vector<Vec> vs = c.vertices;
  for (auto& v : vs)
    for (double& x : v) x *= lambda;
  if (lambda == 0.0) vs.assign(1, Vec(static_cast<std::size_t>(c.n), 0.0));
  return Polytope{c.n, std::move(vs)};
}

Polytope negate_polytope(const Polytope& c) { return scale_polytope(-1.0, c); }

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_unit(const Vec& l) {
  if (std::abs(norm2(l) - 1.0) > 1e-9)
    throw DimensionError("rotation/project: direction is not a unit vector");
}

GridPtr make_line_grid() {
  auto g = std::make_shared<SphereGrid>();
  g->n = 1;
  g->directions = {Vec{-1.0}, Vec{1.0}};
  return g;
}

GridPtr make_circle_grid(int k) {
  if (k <= 0 || k % 8 != 0)
    throw DimensionError("sphere grid: n = 2 resolution must be divisible by 8");
  auto g = std::make_shared<SphereGrid>();
  g->n = 2;
  g->resolution = k;
  g->sub = make_line_grid();
  g->angular_spacing = 2.0 * kPi / k;
  const double s = std::sqrt(0.5);
  const double special[8][2] = {{1, 0}, {s, s},  {0, 1},  {-s, s},
                                {-1, 0}, {-s, -s}, {0, -1}, {s, -s}};
  g->directions.reserve(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    if ((8 * j) % k == 0) {
      int idx = 8 * j / k;
      g->directions.push_back(Vec{special[idx][0], special[idx][1]});
    } else {
      double th = 2.0 * kPi * j / k;
      g->directions.push_back(Vec{std::cos(th), std::sin(th)});
    }
  }
  g->adjacent_pairs.reserve(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) g->adjacent_pairs.emplace_back(j, (j + 1) % k);
  return g;
}

}  // namespace

GridPtr make_sphere_grid(int n, int resolution) {
  if (n == 1) return make_line_grid();
  if (n == 2) return make_circle_grid(resolution);
  throw DimensionError("make_sphere_grid: supported n are 1 and 2 (use make_sphere_grid3)");
}

GridPtr make_sphere_grid3(int polar, int azimuth, int sub_k) {
  if (polar < 2 || azimuth < 3)
    throw DimensionError("sphere grid: n = 3 resolution too small");
  auto g = std::make_shared<SphereGrid>();
  g->n = 3;
  g->polar = polar;
  g->azimuth = azimuth;
  g->sub = make_circle_grid(sub_k);
  g->angular_spacing = std::max(kPi / polar, 2.0 * kPi / azimuth);
  // rings i = 1 .. polar-1, then both poles at the end
  for (int i = 1; i < polar; ++i) {
    double phi = kPi * i / polar;
    double sp = std::sin(phi), cp = std::cos(phi);
    for (int j = 0; j < azimuth; ++j) {
      double th = 2.0 * kPi * j / azimuth;
      g->directions.push_back(Vec{sp * std::cos(th), sp * std::sin(th), cp});
    }
  }
  int north = static_cast<int>(g->directions.size());
  g->directions.push_back(Vec{0.0, 0.0, 1.0});
  int south = north + 1;
  g->directions.push_back(Vec{0.0, 0.0, -1.0});
  auto ring_index = [azimuth](int ring, int j) { return ring * azimuth + j; };
  int rings = polar - 1;
  for (int ring = 0; ring < rings; ++ring) {
    for (int j = 0; j < azimuth; ++j) {
      g->adjacent_pairs.emplace_back(ring_index(ring, j),
                                     ring_index(ring, (j + 1) % azimuth));
      if (ring + 1 < rings)
        g->adjacent_pairs.emplace_back(ring_index(ring, j), ring_index(ring + 1, j));
    }
  }
  for (int j = 0; j < azimuth; ++j) {
    g->adjacent_pairs.emplace_back(north, ring_index(0, j));
    g->adjacent_pairs.emplace_back(south, ring_index(rings - 1, j));
  }
  return g;
}

bool grids_match(const SphereGrid& a, const SphereGrid& b) {
  if (a.n != b.n) return false;
  if (a.n == 1) return true;
  if (a.n == 2) return a.resolution == b.resolution;
  return a.polar == b.polar && a.azimuth == b.azimuth &&
         grids_match(*a.sub, *b.sub);
}

Mat rotation(const Vec& l) {
  check_unit(l);
  std::size_t n = l.size();
  if (n == 2) {
    return Mat{{l[1], -l[0]}, {l[0], l[1]}};
  }
  if (n == 3) {
    double s2 = l[0] * l[0] + l[1] * l[1];
    if (s2 == 0.0) {
      if (l[2] > 0.0) return Mat{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
      return Mat{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
    }
    // Rodrigues formula about u = (l x e3)/|l x e3|, angle arccos l3.
    double s = std::sqrt(s2);
    double ux = l[1] / s, uy = -l[0] / s;  // uz = 0
    double ca = l[2], sa = s;
    double omc = 1.0 - ca;
    Mat r(3, Vec(3, 0.0));
    r[0][0] = ca + ux * ux * omc;
    r[0][1] = ux * uy * omc;
    r[0][2] = uy * sa;
    r[1][0] = ux * uy * omc;
    r[1][1] = ca + uy * uy * omc;
    r[1][2] = -ux * sa;
    r[2][0] = -uy * sa;
    r[2][1] = ux * sa;
    r[2][2] = ca;
    return r;
  }
  throw DimensionError("rotation: supported dimensions are 2 and 3");
}

Vec project(const Vec& l, const Vec& x) {
  if (l.size() != x.size()) throw DimensionError("project: dimension mismatch");
  Mat r = rotation(l);
  std::size_t n = l.size();
  Vec y(n - 1, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) y[i] = dot(r[i], x);
  return y;
}

Vec lift(const Vec& l, const Vec& y) {
  std::size_t n = l.size();
  if (y.size() + 1 != n) throw DimensionError("lift: dimension mismatch");
  Mat r = rotation(l);
  Vec x(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) x[i] += r[j][i] * y[j];
  return x;
}

Mat lift_matrix(const Vec& l) {
  Mat r = rotation(l);
  std::size_t n = l.size();
  Mat a(n, Vec(n - 1, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) a[i][j] = r[j][i];
  return a;
}

Polytope project_polytope(const Vec& l, const Polytope& c) {
  if (static_cast<int>(l.size()) != c.n)
    throw DimensionError("project_polytope: dimension mismatch");
  Mat r = rotation(l);
  std::vector<Vec> vs;
  vs.reserve(c.vertices.size());
  for (const auto& v : c.vertices) {
    Vec y(static_cast<std::size_t>(c.n - 1), 0.0);
    for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(c.n); ++i)
      y[i] = dot(r[i], v);
    vs.push_back(std::move(y));
  }
  return Polytope{c.n - 1, std::move(vs)};
}

}  // namespace dirsub
