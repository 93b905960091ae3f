#pragma once

// Exterior algebra over the generators {d v : v in VarTable} with RatFun
// coefficients. Wedge monomials are bitmasks over generator indices in
// increasing order; all operations are exact.

#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "genred/ratfun.hpp"

namespace genred {

using Mask = uint32_t;

inline int mask_degree(Mask m) { return std::popcount(m); }

// Sign of inserting generator g in front of the sorted monomial `mask`:
// (-1)^{#generators in mask with index < g}.
inline int insert_sign(Mask mask, int g) {
  return (std::popcount(mask & ((Mask(1) << g) - 1)) & 1) ? -1 : 1;
}

// Sign of the merge a^b when sorted; 0 when the monomials overlap.
inline int merge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  int inv = 0;
  Mask bb = b;
  while (bb) {
    int j = std::countr_zero(bb);
    bb &= bb - 1;
    inv += std::popcount(a >> (j + 1));
  }
  return (inv & 1) ? -1 : 1;
}

class Form {
 public:
  Form() = default;
  explicit Form(VarTablePtr tbl) : tbl_(std::move(tbl)) {}

  static Form zero(VarTablePtr tbl) { return Form(std::move(tbl)); }
  static Form scalar(VarTablePtr tbl, RatFun c) {
    Form f(std::move(tbl));
    f.add_term(0, std::move(c));
    return f;
  }
  static Form scalar(VarTablePtr tbl, GaussianRational c) {
    RatFun r = RatFun::constant(tbl->size(), std::move(c));
    return scalar(std::move(tbl), std::move(r));
  }
  // The 1-form d<name>.
  static Form gen(VarTablePtr tbl, const std::string& name) {
    int v = tbl->index(name);
    Form f(std::move(tbl));
    f.add_term(Mask(1) << v, RatFun::constant(f.tbl_->size(), GaussianRational(1)));
    return f;
  }

  const VarTablePtr& table() const { return tbl_; }
  const std::map<Mask, RatFun>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int nvars() const { return tbl_->size(); }

  void add_term(Mask m, RatFun c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  int max_degree() const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, mask_degree(m));
    return d;
  }
  bool homogeneous(int k) const {
    for (auto& [m, c] : terms_)
      if (mask_degree(m) != k) return false;
    return true;
  }
  Form degree_part(int k) const {
    Form r(tbl_);
    for (auto& [m, c] : terms_)
      if (mask_degree(m) == k) r.terms_.emplace(m, c);
    return r;
  }
  RatFun scalar_part() const {
    auto it = terms_.find(0);
    if (it == terms_.end()) return RatFun(tbl_->size());
    return it->second;
  }
  RatFun coeff(Mask m) const {
    auto it = terms_.find(m);
    if (it == terms_.end()) return RatFun(tbl_->size());
    return it->second;
  }

  friend Form operator+(const Form& a, const Form& b) {
    Form r = a;
    for (auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }
  friend Form operator-(const Form& a, const Form& b) {
    Form r = a;
    for (auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }
  friend Form operator-(const Form& a) {
    Form r(a.tbl_);
    for (auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend Form operator*(const RatFun& c, const Form& a) {
    Form r(a.tbl_);
    if (c.is_zero()) return r;
    for (auto& [m, cc] : a.terms_) r.add_term(m, c * cc);
    return r;
  }

  // Exact equality of canonical representations is decided per-coefficient
  // by cross-multiplication.
  friend bool operator==(const Form& a, const Form& b) { return (a - b).is_zero(); }
  friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [m, c] : terms_) {
      if (!first) s += "  +  ";
      first = false;
      s += "[" + c.str(*tbl_) + "]";
      Mask mm = m;
      while (mm) {
        int g = std::countr_zero(mm);
        mm &= mm - 1;
        s += " d" + tbl_->name(g);
      }
    }
    return s;
  }

 private:
  VarTablePtr tbl_;
  std::map<Mask, RatFun> terms_;
};

inline void require_same_table(const Form& a, const Form& b) {
  if (!a.table()->same(*b.table())) throw std::invalid_argument("forms on different charts");
}

inline Form wedge(const Form& a, const Form& b) {
  require_same_table(a, b);
  Form r(a.table());
  for (auto& [ma, ca] : a.terms())
    for (auto& [mb, cb] : b.terms()) {
      int s = merge_sign(ma, mb);
      if (s == 0) continue;
      RatFun c = ca * cb;
      if (s < 0) c = -c;
      r.add_term(ma | mb, std::move(c));
    }
  return r;
}

// Exterior derivative d = sum_v dv ^ d/dv (auxiliary variables included).
inline Form ext_d(const Form& a) {
  const auto& tbl = *a.table();
  Form r(a.table());
  for (auto& [m, c] : a.terms()) {
    for (int v = 0; v < tbl.size(); ++v) {
      Mask g = Mask(1) << v;
      if (m & g) continue;
      RatFun dc = c.diff(v);
      if (dc.is_zero()) continue;
      if (insert_sign(m, v) < 0) dc = -dc;
      r.add_term(m | g, std::move(dc));
    }
  }
  return r;
}

// Interior product with the vector field sum_v comps[v] d/dv.
inline Form interior_vec(const std::vector<RatFun>& comps, const Form& a) {
  const auto& tbl = *a.table();
  Form r(a.table());
  for (auto& [m, c] : a.terms()) {
    Mask mm = m;
    while (mm) {
      int g = std::countr_zero(mm);
      mm &= mm - 1;
      if (comps[g].is_zero()) continue;
      RatFun cc = comps[g] * c;
      if (insert_sign(m, g) < 0) cc = -cc;  // position sign of slot g
      r.add_term(m & ~(Mask(1) << g), std::move(cc));
    }
  }
  (void)tbl;
  return r;
}

// Complex conjugation: swaps paired generators/variables, conjugates
// coefficients, and re-sorts monomials with the permutation sign.
inline Form form_conj(const Form& a) {
  const auto& tbl = *a.table();
  Form r(a.table());
  for (auto& [m, c] : a.terms()) {
    std::vector<int> gens;
    Mask mm = m;
    while (mm) {
      int g = std::countr_zero(mm);
      mm &= mm - 1;
      gens.push_back(tbl.conj_index(g));
    }
    int inv = 0;
    for (size_t i = 0; i < gens.size(); ++i)
      for (size_t j = i + 1; j < gens.size(); ++j)
        if (gens[i] > gens[j]) ++inv;
    Mask nm = 0;
    for (int g : gens) nm |= Mask(1) << g;
    RatFun cc = c.conjugated(tbl);
    if (inv & 1) cc = -cc;
    r.add_term(nm, std::move(cc));
  }
  return r;
}

inline long factorial(long k) {
  long r = 1;
  for (long i = 2; i <= k; ++i) r *= i;
  return r;
}

// e^B ^ phi for a 2-form B (finite sum of B^k/k!).
inline Form b_transform(const Form& B, const Form& phi) {
  if (!B.is_zero() && !B.homogeneous(2))
    throw std::invalid_argument("b_transform: B must be a 2-form");
  Form result = phi;
  Form power = phi;
  long k = 1;
  for (;;) {
    power = wedge(B, power);
    if (power.is_zero()) break;
    RatFun inv_fact = RatFun::constant(phi.nvars(), GaussianRational(Rat(1, factorial(k))));
    result = result + inv_fact * power;
    ++k;
  }
  return result;
}

// Mukai involution: multiplies the k-form component by (-1)^{k(k-1)/2}.
inline Form mukai_sigma(const Form& a) {
  Form r(a.table());
  for (auto& [m, c] : a.terms()) {
    int k = mask_degree(m);
    bool flip = ((k * (k - 1) / 2) & 1) != 0;
    r.add_term(m, flip ? -c : c);
  }
  return r;
}

struct TopDegreeError : std::runtime_error {
  TopDegreeError() : std::runtime_error("mukai: du component in a candidate top term") {}
};

// Mukai pairing (phi ^ sigma(psi))_top, top = degree 2n over {dz, dzb}.
// Terms of degree >= 2n carrying auxiliary generators are a hard error.
inline Form mukai(const Form& phi, const Form& psi) {
  require_same_table(phi, psi);
  const auto& tbl = *phi.table();
  int n2 = 0;
  Mask top = 0;
  Mask auxmask = 0;
  for (int v = 0; v < tbl.size(); ++v) {
    if (tbl.is_aux(v)) {
      auxmask |= Mask(1) << v;
    } else {
      top |= Mask(1) << v;
      ++n2;
    }
  }
  Form prod = wedge(phi, mukai_sigma(psi));
  Form r(phi.table());
  for (auto& [m, c] : prod.terms()) {
    if ((m & auxmask) && mask_degree(m) >= n2) throw TopDegreeError();
    if (m == top) r.add_term(m, c);
  }
  return r;
}

}  // namespace genred
