// Sparse multivariate polynomials in 2 or 3 variables with exact
// coefficient-level operations: arithmetic, affine composition, division by
// linear forms, derivatives, and evaluation.
#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace hpfrac {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

using Exponent = std::array<int, 3>;

// Affine map x -> B x + b. Used both as geometric transform and for
// polynomial composition.
struct AffineMap {
  Eigen::MatrixXd B;  // n_out x n_in
  Eigen::VectorXd b;  // n_out

  int n_in() const { return static_cast<int>(B.cols()); }
  int n_out() const { return static_cast<int>(B.rows()); }

  Eigen::VectorXd operator()(const Eigen::VectorXd& x) const { return B * x + b; }

  static AffineMap identity(int n) {
    return {Eigen::MatrixXd::Identity(n, n), Eigen::VectorXd::Zero(n)};
  }
  // composition: this after other, x -> this(other(x))
  AffineMap after(const AffineMap& other) const {
    return {B * other.B, B * other.b + b};
  }
};

// Linear form l(x) = a.x + d with a != 0.
struct LinearForm {
  Eigen::VectorXd a;
  double d = 0.0;

  int nvars() const { return static_cast<int>(a.size()); }
  double operator()(const Eigen::VectorXd& x) const { return a.dot(x) + d; }
};

class MultiPoly {
 public:
  MultiPoly() : nvars_(2) {}
  explicit MultiPoly(int nvars) : nvars_(nvars) { assert(nvars == 1 || nvars == 2 || nvars == 3); }

  static MultiPoly constant(int nvars, double c) {
    MultiPoly p(nvars);
    if (c != 0.0) p.terms_[{0, 0, 0}] = c;
    return p;
  }
  static MultiPoly variable(int nvars, int i, double scale = 1.0) {
    MultiPoly p(nvars);
    Exponent e{0, 0, 0};
    e[i] = 1;
    if (scale != 0.0) p.terms_[e] = scale;
    return p;
  }
  static MultiPoly monomial(int nvars, Exponent e, double c) {
    MultiPoly p(nvars);
    if (c != 0.0) p.terms_[e] = c;
    return p;
  }
  static MultiPoly from_linear(const LinearForm& l) {
    MultiPoly p(l.nvars());
    for (int i = 0; i < l.nvars(); ++i) p.add_term({i == 0 ? 1 : 0, i == 1 ? 1 : 0, i == 2 ? 1 : 0}, l.a[i]);
    p.add_term({0, 0, 0}, l.d);
    return p;
  }

  int nvars() const { return nvars_; }
  const std::map<Exponent, double>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add_term(Exponent e, double c) {
    if (c == 0.0) return;
    auto it = terms_.find(e);
    if (it == terms_.end())
      terms_[e] = c;
    else {
      it->second += c;
      if (it->second == 0.0) terms_.erase(it);
    }
  }

  int degree() const {
    int d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
    return terms_.empty() ? 0 : d;
  }
  int degree_in(int var) const {
    int d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }
  double max_abs_coeff() const {
    double m = 0.0;
    for (auto& [e, c] : terms_) m = std::max(m, std::abs(c));
    return m;
  }

  // drop terms below tol * max_abs_coeff
  MultiPoly pruned(double rel_tol = 0.0) const {
    MultiPoly q(nvars_);
    double cut = rel_tol * max_abs_coeff();
    for (auto& [e, c] : terms_)
      if (std::abs(c) > cut) q.terms_[e] = c;
    return q;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    assert(nvars_ == o.nvars_);
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    assert(nvars_ == o.nvars_);
    for (auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MultiPoly& operator*=(double s) {
    if (s == 0.0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) const_cast<double&>(c) *= s;
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, double s) { return a *= s; }
  friend MultiPoly operator*(double s, MultiPoly a) { return a *= s; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    assert(a.nvars_ == b.nvars_);
    MultiPoly r(a.nvars_);
    for (auto& [ea, ca] : a.terms_)
      for (auto& [eb, cb] : b.terms_)
        r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return r;
  }

  MultiPoly derivative(int var) const {
    MultiPoly r(nvars_);
    for (auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponent d = e;
      d[var] -= 1;
      r.add_term(d, c * e[var]);
    }
    return r;
  }

  double eval(const Eigen::VectorXd& x) const {
    assert(static_cast<int>(x.size()) >= nvars_);
    double s = 0.0;
    for (auto& [e, c] : terms_) {
      double t = c;
      for (int v = 0; v < nvars_; ++v)
        for (int k = 0; k < e[v]; ++k) t *= x[v];
      s += t;
    }
    return s;
  }
  double eval(double x, double y) const {
    Eigen::Vector2d v(x, y);
    return eval(Eigen::VectorXd(v));
  }
  double eval(double x, double y, double z) const {
    Eigen::Vector3d v(x, y, z);
    return eval(Eigen::VectorXd(v));
  }

  // substitute variable `var` by the given polynomial (in result_nvars vars,
  // same variable space as the remaining variables, which carry over)
  MultiPoly substituted(int var, const MultiPoly& repl) const {
    MultiPoly r(repl.nvars());
    int dmax = degree_in(var);
    std::vector<MultiPoly> pow(dmax + 1, MultiPoly::constant(repl.nvars(), 1.0));
    for (int k = 1; k <= dmax; ++k) pow[k] = pow[k - 1] * repl;
    for (auto& [e, c] : terms_) {
      Exponent rest = e;
      rest[var] = 0;
      MultiPoly t = MultiPoly::monomial(repl.nvars(), rest, c);
      r += t * pow[e[var]];
    }
    return r;
  }

  double operator()(double x, double y) const { return eval(x, y); }

 private:
  int nvars_;
  std::map<Exponent, double> terms_;
};

// result(x) = p(m(x)); m maps R^{n_in} -> R^{n_out}, p has n_out variables.
inline MultiPoly compose_affine(const MultiPoly& p, const AffineMap& m) {
  if (p.nvars() != m.n_out()) throw std::invalid_argument("compose_affine: dimension mismatch");
  const int nin = m.n_in();
  const int nout = m.n_out();
  // powers of each substituted coordinate
  std::vector<std::vector<MultiPoly>> pow(nout);
  for (int v = 0; v < nout; ++v) {
    MultiPoly lin(nin);
    for (int j = 0; j < nin; ++j) lin.add_term({j == 0 ? 1 : 0, j == 1 ? 1 : 0, j == 2 ? 1 : 0}, m.B(v, j));
    lin.add_term({0, 0, 0}, m.b(v));
    int dmax = p.degree_in(v);
    pow[v].resize(dmax + 1);
    pow[v][0] = MultiPoly::constant(nin, 1.0);
    for (int k = 1; k <= dmax; ++k) pow[v][k] = pow[v][k - 1] * lin;
  }
  MultiPoly r(nin);
  for (auto& [e, c] : p.terms()) {
    MultiPoly t = MultiPoly::constant(nin, c);
    for (int v = 0; v < nout; ++v)
      if (e[v] > 0) t = t * pow[v][e[v]];
    r += t;
  }
  return r;
}

struct DivisionResult {
  MultiPoly quotient;
  MultiPoly remainder;
  double residual;  // max-norm of remainder coefficients
};

// p = l*q + r, eliminating the variable with the largest |a_i| in l.
// The remainder has degree zero in the eliminated variable.
inline DivisionResult divide_by_linear(const MultiPoly& p, const LinearForm& l) {
  const int n = p.nvars();
  assert(l.nvars() == n);
  int v = 0;
  for (int i = 1; i < n; ++i)
    if (std::abs(l.a[i]) > std::abs(l.a[v])) v = i;
  const double av = l.a[v];
  if (av == 0.0) throw std::invalid_argument("divide_by_linear: zero linear form");

  // rest = l - av*x_v as a polynomial
  MultiPoly rest(n);
  for (int i = 0; i < n; ++i)
    if (i != v) rest.add_term({i == 0 ? 1 : 0, i == 1 ? 1 : 0, i == 2 ? 1 : 0}, l.a[i]);
  rest.add_term({0, 0, 0}, l.d);

  MultiPoly work = p;
  MultiPoly quotient(n);
  int dv = work.degree_in(v);
  while (dv > 0) {
    // collect terms with x_v-degree dv
    MultiPoly lead(n);
    for (auto& [e, c] : work.terms())
      if (e[v] == dv) {
        Exponent f = e;
        f[v] = dv - 1;
        lead.add_term(f, c / av);
      }
    if (lead.empty()) {
      --dv;
      continue;
    }
    quotient += lead;
    // work -= l*lead  (remove leading block, fold the rest down)
    // l*lead = av*x_v*lead + rest*lead; av*x_v*lead reproduces the leading terms
    for (auto& [e, c] : lead.terms()) {
      Exponent f = e;
      f[v] += 1;
      work.add_term(f, -c * av);
    }
    work -= rest * lead;
    dv = work.degree_in(v);
  }
  DivisionResult res;
  res.quotient = quotient;
  res.remainder = work;
  res.residual = work.max_abs_coeff();
  return res;
}

}  // namespace hpfrac
