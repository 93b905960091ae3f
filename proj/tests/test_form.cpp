#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "genred/form.hpp"
#include "genred/gfield.hpp"
#include "genred/parse.hpp"
#include "oracles.hpp"

using namespace genred;

namespace {

VarTablePtr t3() {
  static VarTablePtr t = VarTable::wirtinger(3, {"u"});
  return t;
}

Form d(const std::string& name) { return Form::gen(t3(), name); }
Form fscal(const std::string& s) { return Form::scalar(t3(), parse_scalar(s, *t3())); }
Form w(const Form& a, const Form& b) { return wedge(a, b); }

GeneralizedField vec(const std::string& var, const std::string& coeff) {
  return GeneralizedField::vector(t3(), var, parse_scalar(coeff, *t3()));
}

// d/dtheta = i (z0 dz0-dual - zb0 dzb0-dual + ...) on C^3
GeneralizedField d_theta() {
  GeneralizedField v(t3());
  GeneralizedField r = vec("z0", "i*z0") + vec("zb0", "0-i*zb0") + vec("z1", "i*z1") +
                       vec("zb1", "0-i*zb1") + vec("z2", "i*z2") + vec("zb2", "0-i*zb2");
  return r;
}

}  // namespace

TEST_CASE("wedge basics") {
  CHECK(w(d("z0"), d("z1")) == -w(d("z1"), d("z0")));
  CHECK(w(d("z0"), d("z0")).is_zero());
  // (z0 dz1) ^ dz0 = -z0 dz0dz1
  Form lhs = w(wedge(fscal("z0"), d("z1")), d("z0"));
  Form rhs = -wedge(fscal("z0"), w(d("z0"), d("z1")));
  CHECK(lhs == rhs);
}

TEST_CASE("graded commutativity on random homogeneous forms") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int p = trial % 4, q = (trial / 4) % 4;
    Form a = oracle::random_kform(t3(), rng, p);
    Form b = oracle::random_kform(t3(), rng, q);
    Form ab = wedge(a, b), ba = wedge(b, a);
    if ((p * q) % 2 == 1)
      CHECK(ab == -ba);
    else
      CHECK(ab == ba);
  }
}

TEST_CASE("exterior derivative examples and d^2 = 0") {
  // d(z0 zb0) = zb0 dz0 + z0 dzb0
  Form lhs = ext_d(fscal("z0*zb0"));
  Form rhs = wedge(fscal("zb0"), d("z0")) + wedge(fscal("z0"), d("zb0"));
  CHECK(lhs == rhs);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Form a = oracle::random_form(t3(), rng);
    CHECK(ext_d(ext_d(a)).is_zero());
  }
}

TEST_CASE("interior product: examples, squares to zero, graded derivation") {
  auto dz01 = w(d("z0"), d("z1"));
  CHECK(interior(vec("z0", "1"), dz01) == d("z1"));
  CHECK(interior(vec("z1", "1"), dz01) == -d("z0"));

  // i_{dtheta}(dz0dz1dz2) = i(z0 dz1dz2 - z1 dz0dz2 + z2 dz0dz1); frozen from
  // the positional oracle.
  Form vol = w(w(d("z0"), d("z1")), d("z2"));
  Form expect = wedge(fscal("i*z0"), w(d("z1"), d("z2"))) -
                wedge(fscal("i*z1"), w(d("z0"), d("z2"))) +
                wedge(fscal("i*z2"), w(d("z0"), d("z1")));
  CHECK(interior(d_theta(), vol) == expect);
  CHECK(oracle::naive_interior(d_theta().vec(), vol) == expect);

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    GeneralizedField X = oracle::random_field(t3(), rng, true);
    Form a = oracle::random_form(t3(), rng);
    CHECK(interior(X, interior(X, a)).is_zero());
    CHECK(interior(X, a) == oracle::naive_interior(X.vec(), a));
    // graded derivation against a homogeneous left factor
    int p = trial % 4;
    Form hp = oracle::random_kform(t3(), rng, p);
    Form lhs2 = interior(X, wedge(hp, a));
    Form rhs2 = wedge(interior(X, hp), a);
    Form tail = wedge(hp, interior(X, a));
    rhs2 = (p % 2 == 1) ? rhs2 - tail : rhs2 + tail;
    CHECK(lhs2 == rhs2);
  }
}

TEST_CASE("lie derivative: examples, naturality, euler field") {
  // L_{d/dz0}(z0 dz1) = dz1
  CHECK(lie_derivative(vec("z0", "1"), wedge(fscal("z0"), d("z1"))) == d("z1"));
  // L_e(dz0dz1dz2) = 3 dz0dz1dz2 for e = sum z_k d/dz_k
  GeneralizedField e = vec("z0", "z0") + vec("z1", "z1") + vec("z2", "z2");
  Form vol = w(w(d("z0"), d("z1")), d("z2"));
  CHECK(lie_derivative(e, vol) == wedge(fscal("3"), vol));
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    GeneralizedField X = oracle::random_field(t3(), rng, true);
    GeneralizedField Y = oracle::random_field(t3(), rng, true);
    Form a = oracle::random_form(t3(), rng);
    CHECK(lie_derivative(X, ext_d(a)) == ext_d(lie_derivative(X, a)));
    // L_{[X,Y]} = [L_X, L_Y]
    Form lhs = lie_derivative(lie_bracket(X, Y), a);
    Form rhs = lie_derivative(X, lie_derivative(Y, a)) - lie_derivative(Y, lie_derivative(X, a));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("clifford action and the clifford relation") {
  CHECK(clifford(vec("z0", "1"), d("z0")) == fscal("1"));
  GeneralizedField dz0cov = GeneralizedField::covector(t3(), d("z0"));
  CHECK(clifford(dz0cov, fscal("1")) == d("z0"));
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    GeneralizedField v = oracle::random_field(t3(), rng);
    Form phi = oracle::random_form(t3(), rng);
    Form lhs = clifford(v, clifford(v, phi));
    RatFun vv(t3()->size());
    for (auto& [m, c] : v.cov().terms()) vv += c * v.vec(std::countr_zero(m));
    CHECK(lhs == wedge(Form::scalar(t3(), vv), phi));
    // and xi(X) = <v,v> under the half-pairing
    CHECK(eq(vv, pairing(v, v)));
  }
}

TEST_CASE("b-transform is an exponential action") {
  std::mt19937_64 rng(23);
  Form phi = oracle::random_form(t3(), rng);
  CHECK(b_transform(Form::zero(t3()), phi) == phi);
  Form B1 = oracle::random_kform(t3(), rng, 2);
  Form B2 = oracle::random_kform(t3(), rng, 2);
  CHECK(b_transform(B1, b_transform(B2, phi)) == b_transform(B1 + B2, phi));
}

TEST_CASE("mukai pairing on an R^2 chart") {
  // (e^{i omega}, e^{-i omega}) = 2i dx^dy for omega = dx^dy;
  // frozen from (1+i w)^(1+i w) = 1 + 2i w.
  auto t = VarTable::real_chart({"x", "y"});
  Form omega = wedge(Form::gen(t, "x"), Form::gen(t, "y"));
  RatFun iu = RatFun::constant(2, GaussianRational(0, 1));
  Form plus = b_transform(iu * omega, Form::scalar(t, GaussianRational(1)));
  Form minus = b_transform(-(iu * omega), Form::scalar(t, GaussianRational(1)));
  Form got = mukai(plus, minus);
  Form expect = (iu + iu) * omega;
  CHECK(got == expect);
}

TEST_CASE("mukai B-invariance and sigma involution") {
  std::mt19937_64 rng(29);
  auto t = VarTable::wirtinger(2);
  for (int trial = 0; trial < 30; ++trial) {
    Form phi = oracle::random_form(t, rng);
    Form psi = oracle::random_form(t, rng);
    // real 2-form B: b + conj(b)
    Form half = oracle::random_kform(t, rng, 2);
    Form B = half + form_conj(half);
    CHECK(mukai(b_transform(B, phi), b_transform(B, psi)) == mukai(phi, psi));
    CHECK(mukai_sigma(mukai_sigma(phi)) == phi);
  }
}

TEST_CASE("mukai rejects du in candidate top terms") {
  Form bad = wedge(w(w(d("z0"), d("z1")), w(d("z2"), d("zb0"))), w(d("zb1"), d("u")));
  CHECK_THROWS_AS(mukai(bad, fscal("1")), TopDegreeError);
}

TEST_CASE("conjugation of forms is an involution and commutes with d") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    Form a = oracle::random_form(t3(), rng);
    CHECK(form_conj(form_conj(a)) == a);
    CHECK(form_conj(ext_d(a)) == ext_d(form_conj(a)));
  }
}
