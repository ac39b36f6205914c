#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dirsub/geometry.hpp"

namespace dirsub {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

class EvalError : public std::runtime_error {
 public:
  explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an expression fails a structural precondition (e.g. it is not
// in max-affine form) or when compare inputs are inconsistent.
class StructureError : public std::runtime_error {
 public:
  explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

// A child of max is active iff f_i(x) >= f_max(x) - active_tol; min symmetric.
inline double active_tol(double extremum) {
  return 1e-9 * std::max(1.0, std::abs(extremum));
}

// Immutable AST over affine atoms and {+, -, *, /, min, max, negation}.
// abs(e) is desugared to max(e, -e) at parse time. The factory functions
// fold affine subtrees, so any reachable tree is in canonical form and
// parse(format(e)) reproduces e node for node.
class Expr {
 public:
  enum class Kind { Constant, Affine, Sum, Difference, Product, Quotient, Negate, Min, Max };

  static Expr constant(double value, int arity);
  static Expr affine(Vec coeffs, double offset);  // all-zero coeffs fold to Constant
  static Expr var(int index, int arity);          // 1-based index
  static Expr sum(Expr a, Expr b);
  static Expr difference(Expr a, Expr b);
  static Expr product(Expr a, Expr b);
  static Expr quotient(Expr a, Expr b);
  static Expr negate(Expr e);
  static Expr min_of(std::vector<Expr> children);  // single child collapses
  static Expr max_of(std::vector<Expr> children);
  static Expr scaled(double alpha, Expr e);  // alpha * e with folding

  Kind kind() const { return node_->kind; }
  int arity() const { return node_->arity; }
  double constant_value() const { return node_->value; }
  const Vec& coefficients() const { return node_->coeffs; }
  double offset() const { return node_->value; }
  const std::vector<Expr>& children() const { return node_->children; }

  bool is_affine_like() const {
    return kind() == Kind::Constant || kind() == Kind::Affine;
  }

  // (c, b) with f(x) = <c, x> + b, when the subtree is affine overall.
  std::optional<std::pair<Vec, double>> flatten_affine() const;

  // No product/quotient nodes except by a constant; directional difference
  // quotients of such functions are eventually exact in t.
  bool piecewise_affine() const;

  std::string format() const;

 private:
  struct Node {
    Kind kind;
    int arity;
    double value = 0.0;  // Constant value / Affine offset
    Vec coeffs;
    std::vector<Expr> children;
  };
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Expr make(Node node);
  std::shared_ptr<const Node> node_;
};

Expr parse(const std::string& text, int arity);

double eval(const Expr& f, const Vec& x);

// Exact Dini directional derivative lim_{t->0+} (f(x+tl) - f(x))/t, computed
// structurally (linearity; product/quotient rules; active-branch max/min).
double dini_dd(const Expr& f, const Vec& x, const Vec& l);

// Expression phi of the same arity with phi(d) = f'(x; d) for every d.
Expr dd_function(const Expr& f, const Vec& x);

// g(y) = f(A y + b) where A is m x k and f has arity m; exact rewrite of
// every affine atom.
Expr substitute_affine(const Expr& f, const Mat& a, const Vec& b);

// Moreau-Rockafellar subdifferential of a max-affine (polyhedral convex)
// expression: nonnegative combinations and max of affine atoms only.
// Rejects min, quotients by non-constants, products of non-constants and
// negation of anything non-affine.
Polytope convex_polyhedral_subdifferential(const Expr& f, const Vec& x);

}  // namespace dirsub
