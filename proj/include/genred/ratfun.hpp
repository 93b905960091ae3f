#pragma once

// Rational functions num/den over an exact field. Not reduced to lowest
// terms: normalization fixes the denominator's leading coefficient to 1 and
// equality is decided by cross-multiplication.

#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "genred/poly.hpp"

namespace genred {

struct PoleAtPoint : std::runtime_error {
  PoleAtPoint() : std::runtime_error("denominator vanishes at evaluation point") {}
};

template <class F>
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(int nvars)
      : num_(nvars), den_(Polynomial<F>::constant(nvars, F(1))) {}
  RationalFunction(Polynomial<F> num, Polynomial<F> den)
      : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("RationalFunction: zero denominator");
    normalize();
  }
  static RationalFunction constant(int nvars, F c) {
    return RationalFunction(Polynomial<F>::constant(nvars, std::move(c)),
                            Polynomial<F>::constant(nvars, F(1)));
  }
  static RationalFunction variable(int nvars, int v, int power = 1) {
    return RationalFunction(Polynomial<F>::variable(nvars, v, power),
                            Polynomial<F>::constant(nvars, F(1)));
  }

  const Polynomial<F>& num() const { return num_; }
  const Polynomial<F>& den() const { return den_; }
  int nvars() const { return den_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool den_is_one() const {
    return den_.is_constant() && den_.constant_value() == F(1);
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a) {
    RationalFunction r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction(a.nvars());
    if (a.den_is_one() && b.den_is_one())
      return RationalFunction(a.num_ * b.num_, a.den_);
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DivisionByZero("RationalFunction: division by zero");
    if (a.is_zero()) return RationalFunction(a.nvars());
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
  RationalFunction& operator/=(const RationalFunction& b) { return *this = *this / b; }

  // Semantic equality by cross-multiplication.
  friend bool eq(const RationalFunction& a, const RationalFunction& b) {
    if (a.num_ == b.num_ && a.den_ == b.den_) return true;
    return (a.num_ * b.den_) == (b.num_ * a.den_);
  }
  // operator== is semantic equality; the class is used as a field scalar in
  // templated linear algebra.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return eq(a, b);
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !eq(a, b);
  }

  RationalFunction diff(int v) const {
    // (n/d)' = (n' d - n d')/d^2
    Polynomial<F> dn = num_.diff(v), dd = den_.diff(v);
    if (dd.is_zero()) return RationalFunction(dn, den_);
    return RationalFunction(dn * den_ - num_ * dd, den_ * den_);
  }

  RationalFunction conjugated(const VarTable& tbl) const {
    return RationalFunction(num_.conjugated(tbl), den_.conjugated(tbl));
  }

  // Substitute one variable by a rational function of the same table.
  RationalFunction subst(int v, const RationalFunction& value) const {
    std::vector<RationalFunction> vals;
    vals.reserve(nvars());
    for (int i = 0; i < nvars(); ++i)
      vals.push_back(i == v ? value : RationalFunction::variable(nvars(), i));
    return eval_ratfun(vals);
  }

  // Simultaneous substitution var_i -> vals[i].
  RationalFunction eval_ratfun(const std::vector<RationalFunction>& vals) const {
    int nv = vals.empty() ? nvars() : vals.front().nvars();
    auto hom = [&](const F& c) { return RationalFunction::constant(nv, c); };
    RationalFunction zero(nv);
    RationalFunction one = RationalFunction::constant(nv, F(1));
    RationalFunction n = num_.template eval_map<RationalFunction>(hom, vals, zero, one);
    RationalFunction d = den_.template eval_map<RationalFunction>(hom, vals, zero, one);
    if (d.is_zero()) throw DivisionByZero("substitution collapses a denominator");
    return n / d;
  }

  // Exact evaluation in a target field R (coefficients mapped by hom).
  template <class R, class CoeffMap>
  R eval_exact(CoeffMap&& hom, const std::vector<R>& values) const {
    R zero = R(0), one = R(1);
    R d = den_.template eval_map<R>(hom, values, zero, one);
    if (genred::is_zero(d)) throw PoleAtPoint();
    R n = num_.template eval_map<R>(hom, values, zero, one);
    return n / d;
  }

  // Numeric evaluation; values are per-variable complex doubles (the caller
  // enforces zb_i = conj(z_i) when building the assignment).
  std::complex<double> eval(const std::vector<std::complex<double>>& values,
                            double pole_tol = 1e-12) const;

  std::string str(const VarTable& tbl) const {
    if (den_is_one()) return num_.str(tbl);
    return "(" + num_.str(tbl) + ") / (" + den_.str(tbl) + ")";
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = Polynomial<F>::constant(den_.nvars(), F(1));
      return;
    }
    const F lead = den_.leading_coeff();
    if (lead == F(1)) return;
    F inv = F(1) / lead;
    num_ = inv * num_;
    den_ = inv * den_;
  }

  Polynomial<F> num_;
  Polynomial<F> den_;
};

template <class F>
std::complex<double> RationalFunction<F>::eval(const std::vector<std::complex<double>>& values,
                                               double pole_tol) const {
  using C = std::complex<double>;
  auto hom = [](const F& c) { return c.to_complex(); };
  C zero(0.0), one(1.0);
  C d = den_.template eval_map<C>(hom, values, zero, one);
  if (std::abs(d) < pole_tol) throw PoleAtPoint();
  C n = num_.template eval_map<C>(hom, values, zero, one);
  return n / d;
}

using RatFun = RationalFunction<GaussianRational>;

inline bool is_zero(const RatFun& r) { return r.is_zero(); }
inline bool is_zero(const RationalFunction<QiOmega>& r) { return r.is_zero(); }

// Wirtinger conveniences on the default field.
inline RatFun rf_const(const VarTable& tbl, GaussianRational c) {
  return RatFun::constant(tbl.size(), std::move(c));
}
inline RatFun rf_var(const VarTable& tbl, const std::string& name, int power = 1) {
  return RatFun::variable(tbl.size(), tbl.index(name), power);
}

// Builds the full numeric assignment for a Wirtinger table from values of the
// holomorphic coordinates plus auxiliary values; zb_i := conj(z_i) enforced.
inline std::vector<std::complex<double>> wirtinger_assignment(
    const VarTable& tbl, const std::vector<std::complex<double>>& z,
    const std::vector<std::complex<double>>& aux = {}) {
  int n = tbl.pairs();
  std::vector<std::complex<double>> vals(tbl.size());
  for (int i = 0; i < n; ++i) {
    vals[i] = z[i];
    vals[tbl.conj_index(i)] = std::conj(z[i]);
  }
  size_t a = 0;
  for (int i = 2 * n; i < tbl.size(); ++i) vals[i] = a < aux.size() ? aux[a++] : 0.0;
  return vals;
}

}  // namespace genred
