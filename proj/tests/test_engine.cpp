#include <cmath>
#include <random>
#include <string>

#include "dirsub/engine.hpp"
#include "doctest.h"

using namespace dirsub;

namespace {

Expr truncated_min_abs(int n_terms) {
  std::vector<Expr> parts;
  for (int k = 1; k <= n_terms; ++k) {
    Expr diff = Expr::affine({1.0, -1.0 / k}, 0.0);
    parts.push_back(Expr::max_of({diff, Expr::negate(diff)}));
  }
  return Expr::min_of(std::move(parts));
}

}  // namespace

TEST_CASE("restrict_to_sphere_point: one fewer variable, values match") {
  Expr f = parse("max(abs(x1), abs(x2))", 2);
  Expr phi = dd_function(f, {0.0, 0.0});  // phi(l) = max(|l1|, |l2|)
  Vec l = {0.0, 1.0};
  Expr r = restrict_to_sphere_point(phi, l);
  CHECK(r.arity() == 1);
  // lift((0,1), y) = (y, 0), so r(y) = max(|y|, |1|) = max(|y|, 1)
  CHECK(eval(r, {0.5}) == doctest::Approx(1.0));
  CHECK(eval(r, {3.0}) == doctest::Approx(3.0));
  CHECK(eval(r, {-2.0}) == doctest::Approx(2.0));
}

TEST_CASE("directed subdifferential of max(|x1|, |x2|) at the origin") {
  GridPtr grid = make_sphere_grid(2, 360);
  Expr f = parse("max(abs(x1), abs(x2))", 2);
  DirSubResult res = directed_subdifferential(f, {0.0, 0.0}, grid);
  const double s = std::sqrt(0.5);
  for (std::size_t i = 0; i < grid->directions.size(); ++i) {
    const Vec& l = grid->directions[i];
    const auto& e = res.value.entries()[i];
    CHECK(e.support == doctest::Approx(std::max(std::abs(l[0]), std::abs(l[1])))
                           .epsilon(1e-12));
    double neg = e.lower.interval().neg;
    double pos = e.lower.interval().pos;
    double a1 = std::abs(l[0]), a2 = std::abs(l[1]);
    if (std::abs(a1 - a2) <= 1e-12) {
      // diagonals: the restriction is smooth with slope +-1/sqrt(2)
      CHECK(std::abs(std::abs(neg) - s) <= 1e-12);
      CHECK(std::abs(std::abs(pos) - s) <= 1e-12);
      CHECK(neg == doctest::Approx(pos).epsilon(1e-12));  // a point interval
    } else if (l[0] > a2) {
      CHECK(neg == doctest::Approx(-l[1]).epsilon(1e-10));
      CHECK(pos == doctest::Approx(l[1]).epsilon(1e-10));
    } else if (l[0] < -a2) {
      CHECK(neg == doctest::Approx(l[1]).epsilon(1e-10));
      CHECK(pos == doctest::Approx(-l[1]).epsilon(1e-10));
    } else if (l[1] > a1) {
      CHECK(neg == doctest::Approx(l[0]).epsilon(1e-10));
      CHECK(pos == doctest::Approx(-l[0]).epsilon(1e-10));
    } else {
      CHECK(neg == doctest::Approx(-l[0]).epsilon(1e-10));
      CHECK(pos == doctest::Approx(l[0]).epsilon(1e-10));
    }
  }
  CHECK(res.certificate.m == doctest::Approx(1.0));
  CHECK(!res.certificate.continuity_flag);
}

TEST_CASE("directed subdifferential of the truncated non-QD example") {
  GridPtr grid = make_sphere_grid(2, 16);
  for (int n_terms : {5, 10, 50}) {
    Expr f = truncated_min_abs(n_terms);
    DirSubResult res = directed_subdifferential(f, {0.0, 0.0}, grid);
    CHECK(res.certificate.m <= std::sqrt(2.0) + 1e-12);
    // at l+ = (0, 1): support 1/N; restriction min_k |y - 1/k| has slope -1 at 0
    std::size_t up = 4;  // (0, 1) in the K = 16 grid starting at angle 0
    REQUIRE(grid->directions[up][1] == 1.0);
    const auto& e = res.value.entries()[up];
    CHECK(e.support == doctest::Approx(1.0 / n_terms));
    CHECK(e.lower.interval().neg == doctest::Approx(1.0));
    CHECK(e.lower.interval().pos == doctest::Approx(-1.0));
  }
}

TEST_CASE("certificate: M is the norm, levels bound each depth") {
  GridPtr grid = make_sphere_grid(2, 32);
  Expr aff = parse("3 * x1 - 4 * x2", 2);
  MCertificate cert = certify(aff, {1.0, 1.0}, grid);
  // smooth case: M approaches |gradient| from below as the grid refines
  CHECK(cert.m <= 5.0 + 1e-12);
  CHECK(cert.m >= 4.9);
  REQUIRE(cert.level_max.size() == 2);
  CHECK(cert.level_max[0] <= cert.m + 1e-12);
  CHECK(cert.level_max[1] <= cert.m + 1e-12);
  CHECK(!cert.continuity_flag);

  DirSubResult res =
      directed_subdifferential(parse("max(abs(x1), abs(x2)) + x1 * x2", 2),
                               {0.1, -0.2}, grid);
  CHECK(res.certificate.m == doctest::Approx(ds_norm(res.value)));
}

TEST_CASE("certificate norm is subadditive under max and sum structure") {
  GridPtr grid = make_sphere_grid(2, 32);
  Vec x = {0.0, 0.0};
  Expr f = parse("max(abs(x1), abs(x2))", 2);
  Expr g = parse("abs(x1 - x2)", 2);
  double mf = certify(f, x, grid).m;
  double mg = certify(g, x, grid).m;
  CHECK(certify(Expr::sum(f, g), x, grid).m <= mf + mg + 1e-12);
  CHECK(certify(Expr::max_of({f, g}), x, grid).m <= std::max(mf, mg) + mf + mg + 1e-12);
}

TEST_CASE("compare_routes: derivative, dc and qd agree for a convex max") {
  GridPtr grid = make_sphere_grid(2, 120);
  Expr f = parse("max(abs(x1), abs(x2))", 2);
  Expr g = f;
  Expr h = parse("0", 2);
  Vec x = {0.0, 0.0};
  RouteInputs in;
  in.f = f;
  in.dc = {g, h};
  in.qd = {convex_polyhedral_subdifferential(g, x), singleton({0.0, 0.0})};
  RouteComparison cmp = compare_routes(in, x, grid, 1e-9);
  CHECK(cmp.pass);
  CHECK(cmp.pairs.size() == 3);
  for (const auto& pr : cmp.pairs) CHECK(pr.report.equal);
}

TEST_CASE("compare_routes: genuinely dc function") {
  GridPtr grid = make_sphere_grid(2, 64);
  // f = max(x1, x2) - max(-x1, 2 * x2): neither convex nor concave
  Expr g = parse("max(x1, x2)", 2);
  Expr h = parse("max(-x1, 2 * x2)", 2);
  Expr f = Expr::difference(g, h);
  Vec x = {0.0, 0.0};
  RouteInputs in;
  in.f = f;
  in.dc = {g, h};
  RouteComparison cmp = compare_routes(in, x, grid, 1e-9);
  CHECK(cmp.pass);
}

TEST_CASE("compare_routes rejects inconsistent f and (g, h)") {
  GridPtr grid = make_sphere_grid(2, 16);
  RouteInputs in;
  in.f = parse("abs(x1)", 2);
  in.dc = {parse("abs(x2)", 2), parse("0", 2)};
  CHECK_THROWS_AS(compare_routes(in, {0.0, 0.0}, grid, 1e-9), StructureError);
}

TEST_CASE("compare_routes flags a mismatching qd pair without passing") {
  GridPtr grid = make_sphere_grid(2, 16);
  Vec x = {0.0, 0.0};
  RouteInputs in;
  in.f = parse("max(abs(x1), abs(x2))", 2);
  in.qd = {singleton({5.0, 0.0}), singleton({0.0, 0.0})};  // wrong on purpose
  RouteComparison cmp = compare_routes(in, x, grid, 1e-9);
  CHECK(!cmp.pass);
  REQUIRE(cmp.pairs.size() == 1);
  CHECK(!cmp.pairs[0].report.equal);
  CHECK(cmp.pairs[0].report.max_abs_err > 1.0);
}

TEST_CASE("three-dimensional run: smooth function reduces to its gradient") {
  GridPtr grid = make_sphere_grid3(6, 12, 16);
  Expr f = parse("x1 - 2 * x2 + 0.5 * x3", 3);
  DirSubResult res = directed_subdifferential(f, {0.0, 0.0, 0.0}, grid);
  DirectedSet expect = embed(singleton({1.0, -2.0, 0.5}), grid);
  EqualReport rep = ds_equal(res.value, expect, 1e-9);
  CHECK(rep.equal);
  // the norm is a max over grid directions, so it sits just below |gradient|
  CHECK(res.certificate.m <= std::sqrt(5.25) + 1e-9);
  CHECK(res.certificate.m >= 0.9 * std::sqrt(5.25));
}
