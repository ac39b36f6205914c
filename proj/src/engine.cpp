#include "dirsub/engine.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "dirsub/parallel.hpp"

namespace dirsub {

Expr restrict_to_sphere_point(const Expr& phi, const Vec& l) {
  if (static_cast<int>(l.size()) != phi.arity())
    throw DimensionError("restrict: direction dimension mismatch");
  if (phi.arity() < 2)
    throw DimensionError("restrict: needs arity >= 2");
  return substitute_affine(phi, lift_matrix(l), l);
}

namespace {

// levels[depth] accumulates max |support value| seen at that level.
DirectedSet dsub_recurse(const Expr& f, const Vec& x, const GridPtr& grid,
                         std::vector<double>& levels, std::size_t depth) {
  if (grid->n == 1) {
    double dneg = dini_dd(f, x, Vec{-1.0});
    double dpos = dini_dd(f, x, Vec{1.0});
    if (!std::isfinite(dneg) || !std::isfinite(dpos))
      throw EvalError("directed_subdifferential: non-finite derivative");
    levels[depth] = std::max(levels[depth], std::max(std::abs(dneg), std::abs(dpos)));
    return DirectedSet(di_raw(dneg, dpos));
  }
  Expr phi = dd_function(f, x);
  Vec origin(static_cast<std::size_t>(grid->n - 1), 0.0);
  std::vector<DirectedSet::Entry> entries(grid->directions.size());
  for (std::size_t i = 0; i < grid->directions.size(); ++i) {
    const Vec& l = grid->directions[i];
    double support = eval(phi, l);
    if (!std::isfinite(support))
      throw EvalError("directed_subdifferential: non-finite derivative");
    levels[depth] = std::max(levels[depth], std::abs(support));
    Expr restricted = restrict_to_sphere_point(phi, l);
    entries[i] = DirectedSet::Entry{dsub_recurse(restricted, origin, grid->sub, levels, depth + 1),
                  support};
  }
  return DirectedSet(grid, std::move(entries));
}

MCertificate build_certificate(const DirectedSet& value, const GridPtr& grid,
                               std::vector<double> levels) {
  MCertificate cert;
  cert.m = ds_norm(value);
  cert.level_max = std::move(levels);
  if (value.dimension() >= 2) {
    for (const auto& [i, j] : grid->adjacent_pairs) {
      double jump = std::abs(value.entries()[static_cast<std::size_t>(i)].support -
                             value.entries()[static_cast<std::size_t>(j)].support);
      cert.continuity_max_jump = std::max(cert.continuity_max_jump, jump);
    }
    cert.continuity_flag = cert.continuity_max_jump >
                           10.0 * grid->angular_spacing * std::max(1.0, cert.m);
  }
  return cert;
}

}  // namespace

DirSubResult directed_subdifferential(const Expr& f, const Vec& x, const GridPtr& grid) {
  if (!grid) throw DimensionError("directed_subdifferential: null grid");
  if (f.arity() != grid->n)
    throw DimensionError("directed_subdifferential: expression/grid dimension mismatch");
  if (static_cast<int>(x.size()) != f.arity())
    throw DimensionError("directed_subdifferential: point dimension mismatch");

  std::size_t nlevels = static_cast<std::size_t>(grid->n);
  if (grid->n == 1) {
    std::vector<double> levels(nlevels, 0.0);
    DirectedSet value = dsub_recurse(f, x, grid, levels, 0);
    DirSubResult res{value, build_certificate(value, grid, std::move(levels)),
                     Route::Derivative};
    return res;
  }

  Expr phi = dd_function(f, x);
  Vec origin(static_cast<std::size_t>(grid->n - 1), 0.0);
  std::vector<DirectedSet::Entry> entries(grid->directions.size());
  std::vector<std::vector<double>> partial(grid->directions.size());
  parallel_for(grid->directions.size(), [&](std::size_t i) {
    const Vec& l = grid->directions[i];
    double support = eval(phi, l);
    if (!std::isfinite(support))
      throw EvalError("directed_subdifferential: non-finite derivative");
    std::vector<double> levels(nlevels, 0.0);
    levels[0] = std::abs(support);
    Expr restricted = restrict_to_sphere_point(phi, l);
    entries[i] = DirectedSet::Entry{dsub_recurse(restricted, origin, grid->sub, levels, 1), support};
    partial[i] = std::move(levels);
  });
  std::vector<double> levels(nlevels, 0.0);
  for (const auto& p : partial)
    for (std::size_t d = 0; d < nlevels; ++d) levels[d] = std::max(levels[d], p[d]);
  DirectedSet value(grid, std::move(entries));
  return DirSubResult{value, build_certificate(value, grid, std::move(levels)),
                      Route::Derivative};
}

MCertificate certify(const Expr& f, const Vec& x, const GridPtr& grid) {
  return directed_subdifferential(f, x, grid).certificate;
}

RouteComparison compare_routes(const RouteInputs& inputs, const Vec& x,
                               const GridPtr& grid, double tol) {
  if (!inputs.f && !inputs.dc && !inputs.qd)
    throw StructureError("compare_routes: no route inputs given");

  // Consistency spot-check: f must equal g - h where both are supplied.
  if (inputs.f && inputs.dc) {
    std::mt19937 rng(20240229u);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
      Vec p(x.size());
      for (std::size_t i = 0; i < p.size(); ++i) p[i] = x[i] + coord(rng);
      double lhs = eval(*inputs.f, p);
      double rhs = eval(inputs.dc->first, p) - eval(inputs.dc->second, p);
      double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
      if (std::abs(lhs - rhs) > 1e-9 * scale)
        throw StructureError("compare_routes: f and g - h disagree at sampled points");
    }
  }

  std::vector<std::pair<std::string, DirectedSet>> results;
  if (inputs.f) {
    results.emplace_back("derivative",
                         directed_subdifferential(*inputs.f, x, grid).value);
  } else if (inputs.dc) {
    Expr f = Expr::difference(inputs.dc->first, inputs.dc->second);
    results.emplace_back("derivative", directed_subdifferential(f, x, grid).value);
  }
  if (inputs.dc)
    results.emplace_back(
        "dc", dc_directed_subdifferential(inputs.dc->first, inputs.dc->second, x, grid));
  if (inputs.qd)
    results.emplace_back(
        "qd", qd_directed_subdifferential(inputs.qd->first, inputs.qd->second, grid));

  if (results.size() < 2)
    throw StructureError("compare_routes: needs at least two routes");

  RouteComparison cmp;
  cmp.pass = true;
  for (std::size_t i = 0; i < results.size(); ++i)
    for (std::size_t j = i + 1; j < results.size(); ++j) {
      RoutePair pair{results[i].first, results[j].first,
                     ds_equal(results[i].second, results[j].second, tol)};
      cmp.pass = cmp.pass && pair.report.equal;
      cmp.pairs.push_back(std::move(pair));
    }
  return cmp;
}

}  // namespace dirsub
