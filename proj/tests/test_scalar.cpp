#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "genred/parse.hpp"
#include "genred/ratfun.hpp"

using namespace genred;

namespace {

VarTablePtr tbl3() {
  static VarTablePtr t = VarTable::wirtinger(3, {"u"});
  return t;
}

RatFun rf(const std::string& s) { return parse_scalar(s, *tbl3()); }

RatFun random_ratfun(std::mt19937_64& rng, int max_terms = 3) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> var(0, tbl3()->size() - 1);
  std::uniform_int_distribution<int> deg(0, 2);
  std::uniform_int_distribution<int> nterms(1, max_terms);
  auto poly = [&]() {
    Poly p(tbl3()->size());
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
      Mono m(tbl3()->size(), 0);
      m[var(rng)] = static_cast<uint8_t>(deg(rng));
      p.add_term(m, GaussianRational(coef(rng), coef(rng)));
    }
    return p;
  };
  Poly num = poly();
  Poly den = poly();
  while (den.is_zero()) den = poly();
  return RatFun(num, den);
}

}  // namespace

TEST_CASE("gaussian rational field ops") {
  GaussianRational a(Rat(3, 2), Rat(1, 2));
  GaussianRational b(Rat(0), Rat(1));
  CHECK(to_string(a) == "3/2+1/2i");
  CHECK(to_string(b) == "i");
  CHECK(a * a.inv() == GaussianRational(1));
  CHECK(conj(conj(a)) == a);
  CHECK(parse_gaussian("3/2+1/2i") == a);
  CHECK(parse_gaussian(to_string(-a)) == -a);
}

TEST_CASE("omega extension: minimal polynomial and conjugation") {
  QiOmega w = QiOmega::omega();
  CHECK(w * w * w == QiOmega(1));
  CHECK((w * w + w + QiOmega(1)).is_zero());
  CHECK(w * w.inv() == QiOmega(1));
  // conj(w) = w^2
  CHECK(conj(w) == w * w);
  CHECK(conj(conj(w)) == w);
}

TEST_CASE("ratfun arithmetic examples") {
  CHECK(eq(rf("z0") + rf("zb0"), rf("z0+zb0")));
  // factorization identity via cross-multiplication
  CHECK(eq(rf("(z0^2-zb0^2)/(z0-zb0)"), rf("z0+zb0")));
  CHECK(eq(rf("(1/z0)/(1/z0^2)"), rf("z0")));
  CHECK(!eq(rf("z0"), rf("zb0")));
  CHECK(eq(rf("0/(z0^3)"), rf("0")));
  CHECK_THROWS_AS(rf("z0") / rf("0"), DivisionByZero);
}

TEST_CASE("ratfun differentiation") {
  auto t = tbl3();
  CHECK(eq(rf("z0^2*zb1").diff(t->index("z0")), rf("2*z0*zb1")));
  CHECK(eq(rf("z0^2*zb1").diff(t->index("zb1")), rf("z0^2")));
  CHECK(eq(rf("1/z0^2").diff(t->index("z0")), rf("0-2/z0^3")));
}

TEST_CASE("ratfun conjugation examples") {
  auto t = tbl3();
  CHECK(eq(rf("i*z0").conjugated(*t), rf("0-i*zb0")));
  CHECK(eq(rf("z0*zb0").conjugated(*t), rf("z0*zb0")));
}

TEST_CASE("ratfun substitution examples") {
  auto t = tbl3();
  CHECK(eq(rf("(z1^3-z2^3)/(2*u)").subst(t->index("u"), rf("1")), rf("(z1^3-z2^3)/2")));
  CHECK(eq(rf("z0^3+z1^3+z2^3-3*z0*z1*z2").subst(t->index("z0"), rf("1")),
           rf("1+z1^3+z2^3-3*z1*z2")));
  CHECK(rf("z0^2/2").subst(t->index("z0"), rf("0")).is_zero());
  CHECK_THROWS_AS(rf("1/(z0-1)").subst(t->index("z0"), rf("1")), DivisionByZero);
}

TEST_CASE("ratfun numeric evaluation") {
  auto t = tbl3();
  auto at = [&](const RatFun& f, std::complex<double> z0, std::complex<double> z1 = 0.0,
                std::complex<double> z2 = 0.0) {
    return f.eval(wirtinger_assignment(*t, {z0, z1, z2}, {1.0}));
  };
  CHECK(std::abs(at(rf("z0*zb0"), {1.0, 1.0}) - 2.0) < 1e-12);
  CHECK(std::abs(at(rf("z0^3+z1^3+z2^3-3*z0*z1*z2"), 1.0, 1.0, 1.0)) < 1e-12);
  CHECK_THROWS_AS(at(rf("1/z0"), 0.0), PoleAtPoint);
}

TEST_CASE("field axioms on random triples, derivative commutation, conj-diff") {
  std::mt19937_64 rng(0);
  auto t = tbl3();
  for (int trial = 0; trial < 60; ++trial) {
    RatFun a = random_ratfun(rng), b = random_ratfun(rng), c = random_ratfun(rng);
    CHECK(eq((a + b) + c, a + (b + c)));
    CHECK(eq(a * (b + c), a * b + a * c));
    CHECK(eq((a * b) * c, a * (b * c)));
    if (!a.is_zero()) CHECK(eq(a / a, rf("1")));
    // mixed partials commute
    int v = trial % t->size(), w = (trial + 1) % t->size();
    CHECK(eq(a.diff(v).diff(w), a.diff(w).diff(v)));
    // conj o d/dz_i = d/dzb_i o conj
    int zi = trial % 3;
    CHECK(eq(a.diff(zi).conjugated(*t), a.conjugated(*t).diff(t->conj_index(zi))));
    // involution
    CHECK(eq(a.conjugated(*t).conjugated(*t), a));
  }
}

TEST_CASE("evaluation commutes with arithmetic away from poles") {
  std::mt19937_64 rng(7);
  auto t = tbl3();
  std::uniform_real_distribution<double> xs(-1.0, 1.0);
  int done = 0;
  for (int trial = 0; trial < 200 && done < 40; ++trial) {
    RatFun a = random_ratfun(rng), b = random_ratfun(rng);
    std::vector<std::complex<double>> z = {{xs(rng), xs(rng)}, {xs(rng), xs(rng)}, {xs(rng), xs(rng)}};
    auto vals = wirtinger_assignment(*t, z, {xs(rng) + 2.0});
    try {
      auto ea = a.eval(vals), eb = b.eval(vals);
      auto esum = (a + b).eval(vals);
      auto eprod = (a * b).eval(vals);
      double scale = std::max({1.0, std::abs(ea), std::abs(eb), std::abs(esum), std::abs(eprod)});
      CHECK(std::abs(esum - (ea + eb)) / scale < 1e-9);
      CHECK(std::abs(eprod - ea * eb) / scale < 1e-9);
      ++done;
    } catch (const PoleAtPoint&) {
      continue;
    }
  }
  CHECK(done >= 20);
}

TEST_CASE("triangle cubic factors over the omega extension") {
  // z0^3+z1^3+z2^3-3 z0 z1 z2 = (z0+z1+z2)(z0+w z1+w^2 z2)(z0+w^2 z1+w z2)
  using PO = Polynomial<QiOmega>;
  int nv = 3;
  QiOmega w = QiOmega::omega();
  auto var = [&](int v) { return PO::variable(nv, v); };
  auto cmul = [&](QiOmega c, PO p) { return PO::constant(nv, c) * p; };
  PO f1 = var(0) + var(1) + var(2);
  PO f2 = var(0) + cmul(w, var(1)) + cmul(w * w, var(2));
  PO f3 = var(0) + cmul(w * w, var(1)) + cmul(w, var(2));
  PO prod = f1 * f2 * f3;
  PO cubic = var(0) * var(0) * var(0) + var(1) * var(1) * var(1) + var(2) * var(2) * var(2) -
             cmul(QiOmega(3), var(0) * var(1) * var(2));
  CHECK(prod == cubic);
}

TEST_CASE("scalar parser rejects malformed input") {
  CHECK_THROWS_AS(rf("1/0"), ParseError);
  CHECK_THROWS_AS(rf("qq0"), ParseError);
  CHECK_THROWS_AS(rf("(z0"), ParseError);
  CHECK_THROWS_AS(rf("z0^"), ParseError);
}

TEST_CASE("scalar print/parse round trip") {
  std::mt19937_64 rng(3);
  auto t = tbl3();
  for (int trial = 0; trial < 30; ++trial) {
    RatFun a = random_ratfun(rng);
    RatFun back = parse_scalar(a.str(*t), *t);
    CHECK(eq(a, back));
  }
}
