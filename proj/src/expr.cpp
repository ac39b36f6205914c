#include "dirsub/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>

namespace dirsub {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void check_same_arity(const Expr& a, const Expr& b, const char* op) {
  if (a.arity() != b.arity())
    throw DimensionError(std::string(op) + ": operand arity mismatch");
}

}  // namespace

Expr Expr::make(Node node) {
  return Expr(std::make_shared<const Node>(std::move(node)));
}

Expr Expr::constant(double value, int arity) {
  if (arity < 1) throw DimensionError("expr: arity must be positive");
  Node n{Kind::Constant, arity};
  n.value = value;
  return make(std::move(n));
}

Expr Expr::affine(Vec coeffs, double offset) {
  if (coeffs.empty()) throw DimensionError("expr: arity must be positive");
  bool zero = true;
  for (double c : coeffs)
    if (c != 0.0) zero = false;
  if (zero) return constant(offset, static_cast<int>(coeffs.size()));
  Node n{Kind::Affine, static_cast<int>(coeffs.size())};
  n.value = offset;
  n.coeffs = std::move(coeffs);
  return make(std::move(n));
}

Expr Expr::var(int index, int arity) {
  if (index < 1 || index > arity)
    throw DimensionError("expr: variable index out of range");
  Vec c(static_cast<std::size_t>(arity), 0.0);
  c[static_cast<std::size_t>(index - 1)] = 1.0;
  return affine(std::move(c), 0.0);
}

namespace {

// (coeffs, offset) view treating Constant as the zero-coefficient atom.
std::pair<Vec, double> atom_view(const Expr& e) {
  if (e.kind() == Expr::Kind::Constant)
    return {Vec(static_cast<std::size_t>(e.arity()), 0.0), e.constant_value()};
  return {e.coefficients(), e.offset()};
}

}  // namespace

Expr Expr::sum(Expr a, Expr b) {
  check_same_arity(a, b, "sum");
  if (a.is_affine_like() && b.is_affine_like()) {
    auto [ca, oa] = atom_view(a);
    auto [cb, ob] = atom_view(b);
    for (std::size_t i = 0; i < ca.size(); ++i) ca[i] += cb[i];
    return affine(std::move(ca), oa + ob);
  }
  Node n{Kind::Sum, a.arity()};
  n.children = {std::move(a), std::move(b)};
  return make(std::move(n));
}

Expr Expr::difference(Expr a, Expr b) {
  check_same_arity(a, b, "difference");
  if (a.is_affine_like() && b.is_affine_like()) {
    auto [ca, oa] = atom_view(a);
    auto [cb, ob] = atom_view(b);
    for (std::size_t i = 0; i < ca.size(); ++i) ca[i] -= cb[i];
    return affine(std::move(ca), oa - ob);
  }
  Node n{Kind::Difference, a.arity()};
  n.children = {std::move(a), std::move(b)};
  return make(std::move(n));
}

Expr Expr::negate(Expr e) {
  if (e.is_affine_like()) {
    auto [c, o] = atom_view(e);
    for (double& x : c) x = -x;
    return affine(std::move(c), -o);
  }
  Node n{Kind::Negate, e.arity()};
  n.children = {std::move(e)};
  return make(std::move(n));
}

Expr Expr::product(Expr a, Expr b) {
  check_same_arity(a, b, "product");
  if (a.kind() == Kind::Constant && b.is_affine_like())
    return scaled(a.constant_value(), std::move(b));
  if (b.kind() == Kind::Constant && a.is_affine_like())
    return scaled(b.constant_value(), std::move(a));
  Node n{Kind::Product, a.arity()};
  n.children = {std::move(a), std::move(b)};
  return make(std::move(n));
}

Expr Expr::quotient(Expr a, Expr b) {
  check_same_arity(a, b, "quotient");
  if (b.kind() == Kind::Constant && b.constant_value() != 0.0 && a.is_affine_like())
    return scaled(1.0 / b.constant_value(), std::move(a));
  Node n{Kind::Quotient, a.arity()};
  n.children = {std::move(a), std::move(b)};
  return make(std::move(n));
}

Expr Expr::scaled(double alpha, Expr e) {
  if (e.is_affine_like()) {
    auto [c, o] = atom_view(e);
    for (double& x : c) x *= alpha;
    return affine(std::move(c), alpha * o);
  }
  if (alpha == 0.0) return constant(0.0, e.arity());
  if (alpha == 1.0) return e;
  Node n{Kind::Product, e.arity()};
  n.children = {constant(alpha, e.arity()), std::move(e)};
  return make(std::move(n));
}

Expr Expr::min_of(std::vector<Expr> children) {
  if (children.empty()) throw DimensionError("min: needs at least one child");
  if (children.size() == 1) return children.front();
  for (std::size_t i = 1; i < children.size(); ++i)
    check_same_arity(children[0], children[i], "min");
  Node n{Kind::Min, children[0].arity()};
  n.children = std::move(children);
  return make(std::move(n));
}

Expr Expr::max_of(std::vector<Expr> children) {
  if (children.empty()) throw DimensionError("max: needs at least one child");
  if (children.size() == 1) return children.front();
  for (std::size_t i = 1; i < children.size(); ++i)
    check_same_arity(children[0], children[i], "max");
  Node n{Kind::Max, children[0].arity()};
  n.children = std::move(children);
  return make(std::move(n));
}

std::optional<std::pair<Vec, double>> Expr::flatten_affine() const {
  switch (kind()) {
    case Kind::Constant:
      return std::make_pair(Vec(static_cast<std::size_t>(arity()), 0.0),
                            constant_value());
    case Kind::Affine:
      return std::make_pair(coefficients(), offset());
    case Kind::Sum:
    case Kind::Difference: {
      auto a = children()[0].flatten_affine();
      auto b = children()[1].flatten_affine();
      if (!a || !b) return std::nullopt;
      double sign = kind() == Kind::Sum ? 1.0 : -1.0;
      for (std::size_t i = 0; i < a->first.size(); ++i)
        a->first[i] += sign * b->first[i];
      a->second += sign * b->second;
      return a;
    }
    case Kind::Negate: {
      auto a = children()[0].flatten_affine();
      if (!a) return std::nullopt;
      for (double& c : a->first) c = -c;
      a->second = -a->second;
      return a;
    }
    case Kind::Product: {
      auto a = children()[0].flatten_affine();
      auto b = children()[1].flatten_affine();
      if (!a || !b) return std::nullopt;
      auto is_const = [](const std::pair<Vec, double>& p) {
        for (double c : p.first)
          if (c != 0.0) return false;
        return true;
      };
      if (is_const(*a)) {
        for (double& c : b->first) c *= a->second;
        b->second *= a->second;
        return b;
      }
      if (is_const(*b)) {
        for (double& c : a->first) c *= b->second;
        a->second *= b->second;
        return a;
      }
      return std::nullopt;
    }
    case Kind::Quotient: {
      auto a = children()[0].flatten_affine();
      auto b = children()[1].flatten_affine();
      if (!a || !b) return std::nullopt;
      for (double c : b->first)
        if (c != 0.0) return std::nullopt;
      if (b->second == 0.0) return std::nullopt;
      for (double& c : a->first) c /= b->second;
      a->second /= b->second;
      return a;
    }
    case Kind::Min:
    case Kind::Max:
      return std::nullopt;
  }
  return std::nullopt;
}

bool Expr::piecewise_affine() const {
  switch (kind()) {
    case Kind::Constant:
    case Kind::Affine:
      return true;
    case Kind::Sum:
    case Kind::Difference:
    case Kind::Negate:
    case Kind::Min:
    case Kind::Max: {
      for (const auto& c : children())
        if (!c.piecewise_affine()) return false;
      return true;
    }
    case Kind::Product: {
      auto a = children()[0].flatten_affine();
      auto b = children()[1].flatten_affine();
      auto is_const = [](const std::optional<std::pair<Vec, double>>& p) {
        if (!p) return false;
        for (double c : p->first)
          if (c != 0.0) return false;
        return true;
      };
      return (is_const(a) && children()[1].piecewise_affine()) ||
             (is_const(b) && children()[0].piecewise_affine());
    }
    case Kind::Quotient: {
      auto b = children()[1].flatten_affine();
      if (!b) return false;
      for (double c : b->first)
        if (c != 0.0) return false;
      return b->second != 0.0 && children()[0].piecewise_affine();
    }
  }
  return false;
}

std::string Expr::format() const {
  switch (kind()) {
    case Kind::Constant:
      return num(constant_value());
    case Kind::Affine: {
      std::string out;
      const Vec& c = coefficients();
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0.0) continue;
        if (!out.empty()) out += " + ";
        if (c[i] == 1.0)
          out += "x" + std::to_string(i + 1);
        else if (c[i] == -1.0)
          out += "-x" + std::to_string(i + 1);
        else
          out += num(c[i]) + "*x" + std::to_string(i + 1);
      }
      if (offset() != 0.0 || out.empty()) {
        if (!out.empty()) out += " + ";
        out += num(offset());
      }
      return out.find(' ') == std::string::npos ? out : "(" + out + ")";
    }
    case Kind::Sum:
      return "(" + children()[0].format() + " + " + children()[1].format() + ")";
    case Kind::Difference:
      return "(" + children()[0].format() + " - " + children()[1].format() + ")";
    case Kind::Product:
      return "(" + children()[0].format() + " * " + children()[1].format() + ")";
    case Kind::Quotient:
      return "(" + children()[0].format() + " / " + children()[1].format() + ")";
    case Kind::Negate:
      return "(-" + children()[0].format() + ")";
    case Kind::Min:
    case Kind::Max: {
      std::string out = kind() == Kind::Min ? "min(" : "max(";
      for (std::size_t i = 0; i < children().size(); ++i) {
        if (i) out += ", ";
        out += children()[i].format();
      }
      return out + ")";
    }
  }
  return {};
}

// ---------- parser ----------

namespace {

struct Parser {
  const std::string& text;
  int arity;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c))
      throw ParseError(std::string("expected '") + c + "'", pos);
  }

  Expr parse_expr() {
    Expr e = parse_term();
    while (true) {
      skip_ws();
      if (eat('+'))
        e = Expr::sum(std::move(e), parse_term());
      else if (eat('-'))
        e = Expr::difference(std::move(e), parse_term());
      else
        return e;
    }
  }

  Expr parse_term() {
    Expr e = parse_factor();
    while (true) {
      skip_ws();
      if (eat('*'))
        e = Expr::product(std::move(e), parse_factor());
      else if (eat('/'))
        e = Expr::quotient(std::move(e), parse_factor());
      else
        return e;
    }
  }

  Expr parse_factor() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
    char c = text[pos];
    if (c == '-') {
      ++pos;
      return Expr::negate(parse_factor());
    }
    if (c == '(') {
      ++pos;
      Expr e = parse_expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_ident();
    throw ParseError("unexpected character", pos);
  }

  Expr parse_number() {
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.'))
      ++pos;
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
      std::size_t exp = pos + 1;
      if (exp < text.size() && (text[exp] == '+' || text[exp] == '-')) ++exp;
      if (exp < text.size() && std::isdigit(static_cast<unsigned char>(text[exp]))) {
        pos = exp;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      }
    }
    try {
      return Expr::constant(std::stod(text.substr(start, pos - start)), arity);
    } catch (const std::exception&) {
      throw ParseError("malformed number", start);
    }
  }

  Expr parse_ident() {
    std::size_t start = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string name = text.substr(start, pos - start);
    if (name == "x") {
      std::size_t dstart = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == dstart) throw ParseError("variable needs an index", dstart);
      int idx = std::stoi(text.substr(dstart, pos - dstart));
      if (idx < 1 || idx > arity)
        throw ParseError("variable index out of range", dstart);
      return Expr::var(idx, arity);
    }
    if (name == "abs") {
      expect('(');
      Expr e = parse_expr();
      expect(')');
      Expr neg = Expr::negate(e);
      return Expr::max_of({std::move(e), std::move(neg)});
    }
    if (name == "max" || name == "min") {
      expect('(');
      std::vector<Expr> children;
      children.push_back(parse_expr());
      while (eat(',')) children.push_back(parse_expr());
      expect(')');
      return name == "max" ? Expr::max_of(std::move(children))
                           : Expr::min_of(std::move(children));
    }
    throw ParseError("unknown identifier '" + name + "'", start);
  }
};

}  // namespace

Expr parse(const std::string& text, int arity) {
  if (arity < 1) throw DimensionError("parse: arity must be positive");
  Parser p{text, arity};
  Expr e = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) throw ParseError("trailing input", p.pos);
  return e;
}

// ---------- evaluation and derivative calculus ----------

double eval(const Expr& f, const Vec& x) {
  if (static_cast<int>(x.size()) != f.arity())
    throw DimensionError("eval: point dimension mismatch");
  for (double c : x)
    if (!std::isfinite(c)) throw EvalError("eval: non-finite point");
  switch (f.kind()) {
    case Expr::Kind::Constant:
      return f.constant_value();
    case Expr::Kind::Affine:
      return dot(f.coefficients(), x) + f.offset();
    case Expr::Kind::Sum:
      return eval(f.children()[0], x) + eval(f.children()[1], x);
    case Expr::Kind::Difference:
      return eval(f.children()[0], x) - eval(f.children()[1], x);
    case Expr::Kind::Product:
      return eval(f.children()[0], x) * eval(f.children()[1], x);
    case Expr::Kind::Quotient: {
      double d = eval(f.children()[1], x);
      if (d == 0.0) throw EvalError("division by zero at evaluation point");
      return eval(f.children()[0], x) / d;
    }
    case Expr::Kind::Negate:
      return -eval(f.children()[0], x);
    case Expr::Kind::Min: {
      double v = eval(f.children()[0], x);
      for (std::size_t i = 1; i < f.children().size(); ++i)
        v = std::min(v, eval(f.children()[i], x));
      return v;
    }
    case Expr::Kind::Max: {
      double v = eval(f.children()[0], x);
      for (std::size_t i = 1; i < f.children().size(); ++i)
        v = std::max(v, eval(f.children()[i], x));
      return v;
    }
  }
  throw EvalError("eval: corrupt expression");
}

double dini_dd(const Expr& f, const Vec& x, const Vec& l) {
  if (static_cast<int>(l.size()) != f.arity())
    throw DimensionError("dini_dd: direction dimension mismatch");
  switch (f.kind()) {
    case Expr::Kind::Constant:
      return 0.0;
    case Expr::Kind::Affine:
      return dot(f.coefficients(), l);
    case Expr::Kind::Sum:
      return dini_dd(f.children()[0], x, l) + dini_dd(f.children()[1], x, l);
    case Expr::Kind::Difference:
      return dini_dd(f.children()[0], x, l) - dini_dd(f.children()[1], x, l);
    case Expr::Kind::Negate:
      return -dini_dd(f.children()[0], x, l);
    case Expr::Kind::Product: {
      double f1 = eval(f.children()[0], x), f2 = eval(f.children()[1], x);
      return f1 * dini_dd(f.children()[1], x, l) + f2 * dini_dd(f.children()[0], x, l);
    }
    case Expr::Kind::Quotient: {
      double f1 = eval(f.children()[0], x), f2 = eval(f.children()[1], x);
      if (f2 == 0.0) throw EvalError("division by zero in directional derivative");
      return (f2 * dini_dd(f.children()[0], x, l) -
              f1 * dini_dd(f.children()[1], x, l)) /
             (f2 * f2);
    }
    case Expr::Kind::Min:
    case Expr::Kind::Max: {
      bool is_max = f.kind() == Expr::Kind::Max;
      std::vector<double> vals;
      vals.reserve(f.children().size());
      double ext = is_max ? -std::numeric_limits<double>::infinity()
                          : std::numeric_limits<double>::infinity();
      for (const auto& c : f.children()) {
        vals.push_back(eval(c, x));
        ext = is_max ? std::max(ext, vals.back()) : std::min(ext, vals.back());
      }
      double tol = active_tol(ext);
      double best = is_max ? -std::numeric_limits<double>::infinity()
                           : std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < vals.size(); ++i) {
        if (std::abs(vals[i] - ext) > tol) continue;
        double d = dini_dd(f.children()[i], x, l);
        best = is_max ? std::max(best, d) : std::min(best, d);
      }
      return best;
    }
  }
  throw EvalError("dini_dd: corrupt expression");
}

Expr dd_function(const Expr& f, const Vec& x) {
  if (static_cast<int>(x.size()) != f.arity())
    throw DimensionError("dd_function: point dimension mismatch");
  switch (f.kind()) {
    case Expr::Kind::Constant:
      return Expr::constant(0.0, f.arity());
    case Expr::Kind::Affine:
      return Expr::affine(f.coefficients(), 0.0);
    case Expr::Kind::Sum:
      return Expr::sum(dd_function(f.children()[0], x), dd_function(f.children()[1], x));
    case Expr::Kind::Difference:
      return Expr::difference(dd_function(f.children()[0], x),
                              dd_function(f.children()[1], x));
    case Expr::Kind::Negate:
      return Expr::negate(dd_function(f.children()[0], x));
    case Expr::Kind::Product: {
      double f1 = eval(f.children()[0], x), f2 = eval(f.children()[1], x);
      return Expr::sum(Expr::scaled(f2, dd_function(f.children()[0], x)),
                       Expr::scaled(f1, dd_function(f.children()[1], x)));
    }
    case Expr::Kind::Quotient: {
      double f1 = eval(f.children()[0], x), f2 = eval(f.children()[1], x);
      if (f2 == 0.0) throw EvalError("division by zero in directional derivative");
      return Expr::sum(Expr::scaled(1.0 / f2, dd_function(f.children()[0], x)),
                       Expr::scaled(-f1 / (f2 * f2), dd_function(f.children()[1], x)));
    }
    case Expr::Kind::Min:
    case Expr::Kind::Max: {
      bool is_max = f.kind() == Expr::Kind::Max;
      std::vector<double> vals;
      double ext = is_max ? -std::numeric_limits<double>::infinity()
                          : std::numeric_limits<double>::infinity();
      for (const auto& c : f.children()) {
        vals.push_back(eval(c, x));
        ext = is_max ? std::max(ext, vals.back()) : std::min(ext, vals.back());
      }
      double tol = active_tol(ext);
      std::vector<Expr> active;
      for (std::size_t i = 0; i < vals.size(); ++i)
        if (std::abs(vals[i] - ext) <= tol)
          active.push_back(dd_function(f.children()[i], x));
      return is_max ? Expr::max_of(std::move(active)) : Expr::min_of(std::move(active));
    }
  }
  throw EvalError("dd_function: corrupt expression");
}

Expr substitute_affine(const Expr& f, const Mat& a, const Vec& b) {
  std::size_t m = static_cast<std::size_t>(f.arity());
  if (a.size() != m || b.size() != m)
    throw DimensionError("substitute_affine: matrix rows must match arity");
  std::size_t k = a[0].size();
  for (const auto& row : a)
    if (row.size() != k) throw DimensionError("substitute_affine: ragged matrix");
  switch (f.kind()) {
    case Expr::Kind::Constant:
      return Expr::constant(f.constant_value(), static_cast<int>(k));
    case Expr::Kind::Affine: {
      const Vec& c = f.coefficients();
      Vec nc(k, 0.0);
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < m; ++i) nc[j] += a[i][j] * c[i];
      return Expr::affine(std::move(nc), f.offset() + dot(c, b));
    }
    case Expr::Kind::Sum:
      return Expr::sum(substitute_affine(f.children()[0], a, b),
                       substitute_affine(f.children()[1], a, b));
    case Expr::Kind::Difference:
      return Expr::difference(substitute_affine(f.children()[0], a, b),
                              substitute_affine(f.children()[1], a, b));
    case Expr::Kind::Product:
      return Expr::product(substitute_affine(f.children()[0], a, b),
                           substitute_affine(f.children()[1], a, b));
    case Expr::Kind::Quotient:
      return Expr::quotient(substitute_affine(f.children()[0], a, b),
                            substitute_affine(f.children()[1], a, b));
    case Expr::Kind::Negate:
      return Expr::negate(substitute_affine(f.children()[0], a, b));
    case Expr::Kind::Min:
    case Expr::Kind::Max: {
      std::vector<Expr> cs;
      cs.reserve(f.children().size());
      for (const auto& c : f.children()) cs.push_back(substitute_affine(c, a, b));
      return f.kind() == Expr::Kind::Min ? Expr::min_of(std::move(cs))
                                         : Expr::max_of(std::move(cs));
    }
  }
  throw EvalError("substitute_affine: corrupt expression");
}

namespace {

bool flattens_to_constant(const Expr& e, double& value) {
  auto fa = e.flatten_affine();
  if (!fa) return false;
  for (double c : fa->first)
    if (c != 0.0) return false;
  value = fa->second;
  return true;
}

Polytope polyhedral_subdiff(const Expr& f, const Vec& x) {
  if (auto fa = f.flatten_affine()) return singleton(fa->first);
  switch (f.kind()) {
    case Expr::Kind::Sum:
      return minkowski_sum(polyhedral_subdiff(f.children()[0], x),
                           polyhedral_subdiff(f.children()[1], x));
    case Expr::Kind::Difference: {
      // convex only when the subtrahend is affine
      auto fb = f.children()[1].flatten_affine();
      if (!fb)
        throw StructureError("not max-affine: difference of nonsmooth parts");
      Vec neg = fb->first;
      for (double& c : neg) c = -c;
      return minkowski_sum(polyhedral_subdiff(f.children()[0], x),
                           singleton(std::move(neg)));
    }
    case Expr::Kind::Product: {
      double lam;
      if (flattens_to_constant(f.children()[0], lam)) {
        if (lam < 0.0) throw StructureError("not max-affine: negative scaling");
        return scale_polytope(lam, polyhedral_subdiff(f.children()[1], x));
      }
      if (flattens_to_constant(f.children()[1], lam)) {
        if (lam < 0.0) throw StructureError("not max-affine: negative scaling");
        return scale_polytope(lam, polyhedral_subdiff(f.children()[0], x));
      }
      throw StructureError("not max-affine: product of non-constant factors");
    }
    case Expr::Kind::Quotient: {
      double lam;
      if (!flattens_to_constant(f.children()[1], lam) || lam == 0.0)
        throw StructureError("not max-affine: quotient by non-constant");
      if (lam < 0.0) throw StructureError("not max-affine: negative scaling");
      return scale_polytope(1.0 / lam, polyhedral_subdiff(f.children()[0], x));
    }
    case Expr::Kind::Negate:
      throw StructureError("not max-affine: negation of a nonsmooth part");
    case Expr::Kind::Min:
      throw StructureError("not max-affine: min node present");
    case Expr::Kind::Max: {
      std::vector<double> vals;
      double ext = -std::numeric_limits<double>::infinity();
      for (const auto& c : f.children()) {
        vals.push_back(eval(c, x));
        ext = std::max(ext, vals.back());
      }
      double tol = active_tol(ext);
      std::vector<Vec> verts;
      for (std::size_t i = 0; i < vals.size(); ++i) {
        if (std::abs(vals[i] - ext) > tol) continue;
        Polytope p = polyhedral_subdiff(f.children()[i], x);
        verts.insert(verts.end(), p.vertices.begin(), p.vertices.end());
      }
      return prune_extreme(Polytope{f.arity(), std::move(verts)});
    }
    default:
      throw StructureError("not max-affine");
  }
}

}  // namespace

Polytope convex_polyhedral_subdifferential(const Expr& f, const Vec& x) {
  if (static_cast<int>(x.size()) != f.arity())
    throw DimensionError("convex_polyhedral_subdifferential: dimension mismatch");
  return prune_extreme(polyhedral_subdiff(f, x));
}

}  // namespace dirsub
