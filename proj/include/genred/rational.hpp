#pragma once

// Exact coefficient fields: Q(i) and the single cyclotomic extension
// Q(i)[w]/(w^2+w+1) used where a primitive cube root of unity is needed.

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace genred {

using Rat = mpq_class;

struct DivisionByZero : std::runtime_error {
  DivisionByZero() : std::runtime_error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

// Element of Q(i).
struct GaussianRational {
  Rat re{0};
  Rat im{0};

  GaussianRational() = default;
  GaussianRational(long r) : re(r) {}                               // NOLINT
  GaussianRational(Rat r) : re(std::move(r)) {}                     // NOLINT
  GaussianRational(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r, long i) : re(r), im(i) {}

  static GaussianRational unit_i() { return {Rat(0), Rat(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussianRational inv() const {
    Rat n = re * re + im * im;
    if (n == 0) throw DivisionByZero("GaussianRational: inverse of zero");
    return {re / n, -im / n};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inv();
  }
  GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
  GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
  GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
  GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
  // Arbitrary total order (used by containers), not a numeric order.
  friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
    int c = cmp(a.re, b.re);
    if (c != 0) return c < 0;
    return cmp(a.im, b.im) < 0;
  }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
};

inline GaussianRational conj(const GaussianRational& a) { return {a.re, -a.im}; }
inline bool is_zero(const GaussianRational& a) { return a.is_zero(); }

inline std::string to_string(const Rat& r) { return r.get_str(); }

// Canonical scalar-string form: "3/2", "-1/2i", "3/2+1/2i", "i", "0".
inline std::string to_string(const GaussianRational& a) {
  auto imag_part = [](const Rat& v) -> std::string {
    if (v == 1) return "i";
    if (v == -1) return "-i";
    return v.get_str() + "i";
  };
  if (a.im == 0) return a.re.get_str();
  if (a.re == 0) return imag_part(a.im);
  std::string s = a.re.get_str();
  if (a.im > 0) s += "+";
  return s + imag_part(a.im);
}

// Element a + b*w of Q(i)[w]/(w^2 + w + 1); w is a primitive cube root of
// unity and complex conjugation acts by w -> w^2 = -1-w.
struct QiOmega {
  GaussianRational a{};
  GaussianRational b{};

  QiOmega() = default;
  QiOmega(GaussianRational a0) : a(std::move(a0)) {}  // NOLINT
  QiOmega(GaussianRational a0, GaussianRational b0) : a(std::move(a0)), b(std::move(b0)) {}
  QiOmega(long v) : a(v) {}  // NOLINT

  static QiOmega omega() { return {GaussianRational(0), GaussianRational(1)}; }

  bool is_zero() const { return a.is_zero() && b.is_zero(); }

  friend QiOmega operator+(const QiOmega& x, const QiOmega& y) { return {x.a + y.a, x.b + y.b}; }
  friend QiOmega operator-(const QiOmega& x, const QiOmega& y) { return {x.a - y.a, x.b - y.b}; }
  friend QiOmega operator-(const QiOmega& x) { return {-x.a, -x.b}; }
  friend QiOmega operator*(const QiOmega& x, const QiOmega& y) {
    // (a1 + b1 w)(a2 + b2 w) = a1 a2 + (a1 b2 + b1 a2) w + b1 b2 w^2, w^2 = -1-w
    GaussianRational c = x.b * y.b;
    return {x.a * y.a - c, x.a * y.b + x.b * y.a - c};
  }
  QiOmega inv() const {
    // (a + b w)(a + b w^2) = a^2 - a b + b^2 is in Q(i)
    GaussianRational n = a * a - a * b + b * b;
    if (n.is_zero()) throw DivisionByZero("QiOmega: inverse of zero");
    GaussianRational ninv = n.inv();
    return {(a - b) * ninv, (-b) * ninv};
  }
  friend QiOmega operator/(const QiOmega& x, const QiOmega& y) { return x * y.inv(); }
  QiOmega& operator+=(const QiOmega& y) { return *this = *this + y; }
  QiOmega& operator-=(const QiOmega& y) { return *this = *this - y; }
  QiOmega& operator*=(const QiOmega& y) { return *this = *this * y; }

  friend bool operator==(const QiOmega& x, const QiOmega& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const QiOmega& x, const QiOmega& y) { return !(x == y); }

  std::complex<double> to_complex() const {
    // w = -1/2 + i sqrt(3)/2
    const std::complex<double> w(-0.5, std::sqrt(3.0) / 2.0);
    return a.to_complex() + b.to_complex() * w;
  }
};

inline QiOmega conj(const QiOmega& x) { return {conj(x.a) - conj(x.b), -conj(x.b)}; }
inline bool is_zero(const QiOmega& x) { return x.is_zero(); }

inline std::string to_string(const QiOmega& x) {
  if (x.b.is_zero()) return to_string(x.a);
  std::string s = "(" + to_string(x.a) + ")+(" + to_string(x.b) + ")w";
  return s;
}

// Field shims for std::complex<double> so templated code can mix exact and
// float scalars. Zero tests in float linear algebra are threshold-based at
// the call sites that need scaling; this is the bare default.
inline bool is_zero(const std::complex<double>& z) { return std::abs(z) < 1e-12; }
inline std::complex<double> conj(const std::complex<double>& z) { return std::conj(z); }

}  // namespace genred
