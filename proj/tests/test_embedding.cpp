#include <cmath>
#include <random>

#include "dirsub/embedding.hpp"
#include "dirsub/expr.hpp"
#include "doctest.h"

using namespace dirsub;

namespace {

Polytope random_polytope(std::mt19937& rng, int n, int max_vertices) {
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  std::uniform_int_distribution<int> count(1, max_vertices);
  int m = count(rng);
  std::vector<Vec> vs;
  for (int i = 0; i < m; ++i) {
    Vec v(n);
    for (double& c : v) c = coord(rng);
    vs.push_back(std::move(v));
  }
  return make_polytope(n, std::move(vs));
}

}  // namespace

TEST_CASE("embed: interval endpoints in dimension one") {
  GridPtr g1 = make_sphere_grid(1, 0);
  Polytope seg = make_polytope(1, {{-2.0}, {5.0}});
  DirectedSet d = embed(seg, g1);
  CHECK(d.interval().neg == doctest::Approx(2.0));  // -min endpoint
  CHECK(d.interval().pos == doctest::Approx(5.0));
  DirectedSet pt = embed(singleton({3.0}), g1);
  CHECK(pt.interval().neg == doctest::Approx(-3.0));
  CHECK(pt.interval().pos == doctest::Approx(3.0));
}

TEST_CASE("embed: unit square in the plane") {
  GridPtr grid = make_sphere_grid(2, 8);
  Polytope box = make_polytope(2, {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
  DirectedSet d = embed(box, grid);
  for (std::size_t i = 0; i < grid->directions.size(); ++i) {
    const Vec& l = grid->directions[i];
    const auto& e = d.entries()[i];
    CHECK(e.support == doctest::Approx(std::abs(l[0]) + std::abs(l[1])));
    // axis directions see a full edge: the projected face is [-1, 1]
    if (l[0] == 0.0 || l[1] == 0.0) {
      CHECK(e.lower.interval().neg == doctest::Approx(1.0));
      CHECK(e.lower.interval().pos == doctest::Approx(1.0));
    } else {
      // diagonal directions see a corner: a projected point
      CHECK(e.lower.interval().neg == doctest::Approx(-e.lower.interval().pos));
    }
  }
}

TEST_CASE("embed: singleton has point intervals everywhere") {
  GridPtr grid = make_sphere_grid(2, 16);
  Vec p = {0.75, -0.5};
  DirectedSet d = embed(singleton(p), grid);
  for (std::size_t i = 0; i < grid->directions.size(); ++i) {
    const Vec& l = grid->directions[i];
    const auto& e = d.entries()[i];
    CHECK(e.support == doctest::Approx(dot(p, l)));
    CHECK(e.lower.interval().neg ==
          doctest::Approx(-e.lower.interval().pos).epsilon(1e-12));
  }
}

TEST_CASE("embed is positively linear") {
  std::mt19937 rng(61);
  GridPtr grid = make_sphere_grid(2, 16);
  for (int trial = 0; trial < 30; ++trial) {
    Polytope a = random_polytope(rng, 2, 5);
    Polytope b = random_polytope(rng, 2, 5);
    double lam = std::uniform_real_distribution<double>(0.0, 3.0)(rng);
    double mu = std::uniform_real_distribution<double>(0.0, 3.0)(rng);
    Polytope comb = minkowski_sum(scale_polytope(lam, a), scale_polytope(mu, b));
    DirectedSet lhs = embed(comb, grid);
    DirectedSet rhs =
        ds_linear_comb(lam, embed(a, grid), mu, embed(b, grid));
    EqualReport rep = ds_equal(lhs, rhs, 1e-9);
    CHECK(rep.equal);
  }
}

TEST_CASE("embed: support components equal the support function") {
  std::mt19937 rng(67);
  for (GridPtr grid : {make_sphere_grid(2, 24), make_sphere_grid3(4, 8, 8)}) {
    Polytope p = random_polytope(rng, grid->n, 6);
    DirectedSet d = embed(p, grid);
    for (std::size_t i = 0; i < grid->directions.size(); ++i) {
      CHECK(d.entries()[i].support ==
            doctest::Approx(support_function(p, grid->directions[i])).epsilon(1e-13));
    }
  }
}

TEST_CASE("dc route: g = h gives the zero directed set") {
  GridPtr grid = make_sphere_grid(2, 16);
  Expr g = parse("max(abs(x1), abs(x2))", 2);
  DirectedSet d = dc_directed_subdifferential(g, g, {0.0, 0.0}, grid);
  CHECK(ds_norm(d) == 0.0);
}

TEST_CASE("dc route: smooth minus smooth is the gradient difference") {
  GridPtr grid = make_sphere_grid(2, 16);
  Expr g = parse("3 * x1 + x2", 2);
  Expr h = parse("x1 - 2 * x2", 2);
  DirectedSet d = dc_directed_subdifferential(g, h, {0.3, 0.7}, grid);
  DirectedSet expect = embed(singleton({2.0, 3.0}), grid);
  CHECK(ds_equal(d, expect, 1e-12).equal);
}

TEST_CASE("qd route: zero upper part reduces to the embedded lower part") {
  GridPtr grid = make_sphere_grid(2, 16);
  Polytope lower = make_polytope(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  Polytope upper = singleton({0.0, 0.0});
  DirectedSet d = qd_directed_subdifferential(lower, upper, grid);
  CHECK(ds_equal(d, embed(lower, grid), 1e-12).equal);
}

TEST_CASE("qd route subtracts the embedded negated upper part") {
  GridPtr grid = make_sphere_grid(2, 16);
  Polytope lower = singleton({1.0, 0.0});
  Polytope upper = singleton({0.25, -0.5});
  DirectedSet d = qd_directed_subdifferential(lower, upper, grid);
  // J(lower) - J(-upper) = J({(1,0)}) - J({(-0.25, 0.5)})
  DirectedSet expect = ds_linear_comb(1.0, embed(lower, grid), -1.0,
                                      embed(singleton({-0.25, 0.5}), grid));
  CHECK(ds_equal(d, expect, 0.0).equal);
}
