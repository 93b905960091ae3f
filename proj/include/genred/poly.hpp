#pragma once

// Sparse multivariate polynomials over an exact coefficient field, with a
// shared variable table that knows the Wirtinger conjugation pairing.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "genred/rational.hpp"

namespace genred {

struct UnknownVariable : std::runtime_error {
  explicit UnknownVariable(const std::string& name)
      : std::runtime_error("unknown variable: " + name) {}
};

// Ordered table of commuting variables. Wirtinger tables hold pairs
// z_i / zb_i swapped by conjugation plus optional self-conjugate auxiliary
// variables (e.g. u standing for R^2). Real charts declare every variable
// self-conjugate.
class VarTable {
 public:
  static std::shared_ptr<const VarTable> wirtinger(int n, std::vector<std::string> aux = {}) {
    VarTable t;
    for (int i = 0; i < n; ++i) t.names_.push_back("z" + std::to_string(i));
    for (int i = 0; i < n; ++i) t.names_.push_back("zb" + std::to_string(i));
    for (auto& a : aux) t.names_.push_back(a);
    t.conj_.resize(t.names_.size());
    t.aux_.assign(t.names_.size(), false);
    for (int i = 0; i < n; ++i) {
      t.conj_[i] = n + i;
      t.conj_[n + i] = i;
    }
    for (size_t i = 2 * n; i < t.names_.size(); ++i) {
      t.conj_[i] = static_cast<int>(i);
      t.aux_[i] = true;
    }
    t.npairs_ = n;
    return std::make_shared<const VarTable>(std::move(t));
  }

  // Wirtinger table with explicit coordinate labels, e.g. {"z1","z2"} for an
  // affine chart; conjugates are named "zb"+label-suffix automatically when
  // labels start with 'z', else "<name>_c".
  static std::shared_ptr<const VarTable> wirtinger_named(const std::vector<std::string>& zs,
                                                         std::vector<std::string> aux = {}) {
    VarTable t;
    int n = static_cast<int>(zs.size());
    for (auto& z : zs) t.names_.push_back(z);
    for (auto& z : zs) {
      if (!z.empty() && z[0] == 'z')
        t.names_.push_back("zb" + z.substr(1));
      else
        t.names_.push_back(z + "_c");
    }
    for (auto& a : aux) t.names_.push_back(a);
    t.conj_.resize(t.names_.size());
    t.aux_.assign(t.names_.size(), false);
    for (int i = 0; i < n; ++i) {
      t.conj_[i] = n + i;
      t.conj_[n + i] = i;
    }
    for (size_t i = 2 * n; i < t.names_.size(); ++i) {
      t.conj_[i] = static_cast<int>(i);
      t.aux_[i] = true;
    }
    t.npairs_ = n;
    return std::make_shared<const VarTable>(std::move(t));
  }

  static std::shared_ptr<const VarTable> real_chart(std::vector<std::string> names) {
    VarTable t;
    t.names_ = std::move(names);
    t.conj_.resize(t.names_.size());
    t.aux_.assign(t.names_.size(), false);
    for (size_t i = 0; i < t.names_.size(); ++i) t.conj_[i] = static_cast<int>(i);
    t.npairs_ = 0;
    return std::make_shared<const VarTable>(std::move(t));
  }

  int size() const { return static_cast<int>(names_.size()); }
  int pairs() const { return npairs_; }
  const std::string& name(int i) const { return names_[i]; }
  int conj_index(int i) const { return conj_[i]; }
  bool is_aux(int i) const { return aux_[i]; }

  int index(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<int>(i);
    throw UnknownVariable(name);
  }
  int find(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<int>(i);
    return -1;
  }

  bool same(const VarTable& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  std::vector<int> conj_;
  std::vector<bool> aux_;
  int npairs_ = 0;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

// Exponent vector, one entry per table variable.
using Mono = std::vector<uint8_t>;

inline int mono_degree(const Mono& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

// Graded lexicographic order: lower total degree first, then lex.
struct GradedLex {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

template <class F>
class Polynomial {
 public:
  using Terms = std::map<Mono, F, GradedLex>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, F c) {
    Polynomial p(nvars);
    p.add_term(Mono(nvars, 0), std::move(c));
    return p;
  }
  static Polynomial variable(int nvars, int v, int power = 1) {
    Polynomial p(nvars);
    Mono m(nvars, 0);
    m[v] = static_cast<uint8_t>(power);
    p.add_term(std::move(m), F(1));
    return p;
  }

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0);
  }
  F constant_value() const {
    if (terms_.empty()) return F(0);
    return terms_.begin()->second;
  }
  int degree() const {
    if (terms_.empty()) return -1;
    return mono_degree(terms_.rbegin()->first);
  }
  // Leading term in graded-lex order.
  const F& leading_coeff() const { return terms_.rbegin()->second; }
  const Mono& leading_mono() const { return terms_.rbegin()->first; }

  void add_term(Mono m, F c) {
    if (genred::is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), std::move(c));
    } else {
      it->second += c;
      if (genred::is_zero(it->second)) terms_.erase(it);
    }
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }
  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r(a.nvars_);
    for (auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.nvars_);
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_) {
        Mono m(ma);
        for (int i = 0; i < a.nvars_; ++i) {
          int e = m[i] + mb[i];
          if (e > 255) throw std::overflow_error("polynomial exponent overflow");
          m[i] = static_cast<uint8_t>(e);
        }
        r.add_term(std::move(m), ca * cb);
      }
    return r;
  }
  friend Polynomial operator*(const F& c, const Polynomial& a) {
    Polynomial r(a.nvars_);
    if (genred::is_zero(c)) return r;
    for (auto& [m, cc] : a.terms_) r.add_term(m, c * cc);
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial diff(int v) const {
    Polynomial r(nvars_);
    for (auto& [m, c] : terms_) {
      if (m[v] == 0) continue;
      Mono mm(m);
      mm[v] -= 1;
      r.add_term(std::move(mm), F(static_cast<long>(m[v])) * c);
    }
    return r;
  }

  // Evaluate under a coefficient homomorphism and per-variable values in any
  // commutative ring R (needs +, *, and R(1)).
  template <class R, class CoeffMap>
  R eval_map(CoeffMap&& hom, const std::vector<R>& values, const R& zero, const R& one) const {
    R acc = zero;
    for (auto& [m, c] : terms_) {
      R t = hom(c);
      for (int v = 0; v < nvars_; ++v)
        for (int k = 0; k < m[v]; ++k) t = t * values[v];
      (void)one;
      acc = acc + t;
    }
    return acc;
  }

  Polynomial conjugated(const VarTable& tbl) const {
    Polynomial r(nvars_);
    for (auto& [m, c] : terms_) {
      Mono mm(nvars_, 0);
      for (int v = 0; v < nvars_; ++v) mm[tbl.conj_index(v)] = m[v];
      r.add_term(std::move(mm), genred::conj(c));
    }
    return r;
  }

  std::string str(const VarTable& tbl) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [m, c] : terms_) {
      if (!first) s += " + ";
      first = false;
      s += "(" + to_string(c) + ")";
      for (int v = 0; v < nvars_; ++v) {
        if (m[v] == 0) continue;
        s += "*" + tbl.name(v);
        if (m[v] > 1) s += "^" + std::to_string(static_cast<int>(m[v]));
      }
    }
    return s;
  }

 private:
  int nvars_ = 0;
  Terms terms_;
};

using Poly = Polynomial<GaussianRational>;

}  // namespace genred
