#include "dirsub/directed_set.hpp"

#include <cmath>
#include <cstdio>

namespace dirsub {

DirectedInterval di_from_interval(double a, double b) {
  if (a > b)
    throw DimensionError("di_from_interval: requires a <= b (use di_raw)");
  return {-a, b};
}

DirectedSet::DirectedSet(GridPtr grid, std::vector<Entry> entries)
    : grid_(std::move(grid)), entries_(std::move(entries)) {
  if (!grid_ || grid_->n < 2)
    throw DimensionError("directed set: grid required for n >= 2");
  n_ = grid_->n;
  if (entries_.size() != grid_->directions.size())
    throw DimensionError("directed set: one entry per grid direction required");
  for (const auto& e : entries_)
    if (e.lower.dimension() != n_ - 1)
      throw DimensionError("directed set: lower component dimension mismatch");
}

const DirectedInterval& DirectedSet::interval() const {
  if (n_ != 1) throw DimensionError("directed set: interval only at n = 1");
  return iv_;
}

DirectedSet ds_zero(const GridPtr& grid) {
  if (!grid || grid->n == 1) return DirectedSet(DirectedInterval{0.0, 0.0});
  std::vector<DirectedSet::Entry> entries(grid->directions.size());
  for (auto& e : entries) e = DirectedSet::Entry{ds_zero(grid->sub), 0.0};
  return DirectedSet(grid, std::move(entries));
}

DirectedSet ds_linear_comb(double alpha, const DirectedSet& a, double beta,
                           const DirectedSet& b) {
  if (a.dimension() != b.dimension())
    throw DimensionError("ds_linear_comb: dimension mismatch");
  if (a.dimension() == 1) {
    return DirectedSet(DirectedInterval{alpha * a.interval().neg + beta * b.interval().neg,
                                        alpha * a.interval().pos + beta * b.interval().pos});
  }
  if (!grids_match(*a.grid(), *b.grid()))
    throw DimensionError("ds_linear_comb: grid mismatch");
  std::vector<DirectedSet::Entry> entries;
  entries.reserve(a.entries().size());
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    entries.push_back(
        DirectedSet::Entry{ds_linear_comb(alpha, a.entries()[i].lower, beta, b.entries()[i].lower),
         alpha * a.entries()[i].support + beta * b.entries()[i].support});
  }
  return DirectedSet(a.grid(), std::move(entries));
}

double ds_norm(const DirectedSet& a) {
  if (a.dimension() == 1)
    return std::max(std::abs(a.interval().neg), std::abs(a.interval().pos));
  double m = 0.0;
  for (const auto& e : a.entries()) {
    m = std::max(m, std::abs(e.support));
    m = std::max(m, ds_norm(e.lower));
  }
  return m;
}

namespace {

std::string dir_label(const SphereGrid& grid, std::size_t i) {
  const Vec& l = grid.directions[i];
  std::string s = "l[" + std::to_string(i) + "]=(";
  char buf[32];
  for (std::size_t j = 0; j < l.size(); ++j) {
    std::snprintf(buf, sizeof(buf), "%.6g", l[j]);
    if (j) s += ",";
    s += buf;
  }
  return s + ")";
}

void equal_walk(const DirectedSet& a, const DirectedSet& b, const std::string& path,
                double& max_err, std::string& worst) {
  if (a.dimension() == 1) {
    double en = std::abs(a.interval().neg - b.interval().neg);
    double ep = std::abs(a.interval().pos - b.interval().pos);
    if (en > max_err) {
      max_err = en;
      worst = path + "/neg";
    }
    if (ep > max_err) {
      max_err = ep;
      worst = path + "/pos";
    }
    return;
  }
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    std::string here = path + "/" + dir_label(*a.grid(), i);
    double es = std::abs(a.entries()[i].support - b.entries()[i].support);
    if (es > max_err) {
      max_err = es;
      worst = here + "/support";
    }
    equal_walk(a.entries()[i].lower, b.entries()[i].lower, here, max_err, worst);
  }
}

}  // namespace

EqualReport ds_equal(const DirectedSet& a, const DirectedSet& b, double tol) {
  if (a.dimension() != b.dimension())
    throw DimensionError("ds_equal: dimension mismatch");
  if (a.dimension() >= 2 && !grids_match(*a.grid(), *b.grid()))
    throw DimensionError("ds_equal: grid mismatch");
  EqualReport rep;
  equal_walk(a, b, "", rep.max_abs_err, rep.worst_path);
  rep.equal = rep.max_abs_err <= tol;
  return rep;
}

}  // namespace dirsub
