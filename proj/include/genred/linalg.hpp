#pragma once

// Dense exact linear algebra over any field with is_zero(). Instantiated
// with GaussianRational, QiOmega, RationalFunction<...> and, for the float
// pipeline, std::complex<double> (thresholded pivoting after row scaling).

#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "genred/rational.hpp"

namespace genred {

template <class F>
struct PivotPolicy {
  static constexpr bool scaled = false;
  static bool nonzero(const F& x, double /*tol*/) { return !is_zero(x); }
  static double weight(const F& /*x*/) { return 1.0; }
};

template <>
struct PivotPolicy<std::complex<double>> {
  static constexpr bool scaled = true;
  static bool nonzero(const std::complex<double>& x, double tol) { return std::abs(x) > tol; }
  static double weight(const std::complex<double>& x) { return std::abs(x); }
};

template <class F>
class Matrix {
 public:
  Matrix(int r, int c, F zero, F one)
      : rows_(r), cols_(c), zero_(std::move(zero)), one_(std::move(one)), a_(r * c, zero_) {}

  static Matrix from_rows(const std::vector<std::vector<F>>& rows, F zero, F one) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(r, c, std::move(zero), std::move(one));
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged rows");
      for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix identity(int n, F zero, F one) {
    Matrix m(n, n, std::move(zero), std::move(one));
    for (int i = 0; i < n; ++i) m(i, i) = m.one_;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const F& zero() const { return zero_; }
  const F& one() const { return one_; }

  F& operator()(int i, int j) { return a_[i * cols_ + j]; }
  const F& operator()(int i, int j) const { return a_[i * cols_ + j]; }

  std::vector<F> row(int i) const {
    return std::vector<F>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }
  void set_row(int i, const std::vector<F>& r) {
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, zero_, one_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  Matrix conjugated() const {
    Matrix t = *this;
    for (auto& x : t.a_) x = conj(x);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape");
    Matrix r(a.rows_, b.cols_, a.zero_, a.one_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        if (is_exact_zero(a(i, k))) continue;
        for (int j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix r = a;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix r = a;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& a) {
    Matrix r = a;
    for (auto& x : r.a_) x = -x;
    return r;
  }
  friend Matrix operator*(const F& c, const Matrix& a) {
    Matrix r = a;
    for (auto& x : r.a_) x = c * x;
    return r;
  }

  bool equals(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
      if (!is_zero_entry(a_[i] - b.a_[i])) return false;
    return true;
  }
  bool is_zero_matrix() const {
    for (auto& x : a_)
      if (!is_zero_entry(x)) return false;
    return true;
  }

  std::vector<F> apply(const std::vector<F>& v) const {
    std::vector<F> r(rows_, zero_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  // Reduced row echelon form; returns pivot column indices.
  std::vector<int> rref(double tol = 1e-9) {
    if constexpr (PivotPolicy<F>::scaled) scale_rows();
    std::vector<int> pivots;
    int pr = 0;
    for (int c = 0; c < cols_ && pr < rows_; ++c) {
      int best = -1;
      double bw = 0.0;
      for (int r = pr; r < rows_; ++r) {
        if (PivotPolicy<F>::nonzero((*this)(r, c), tol)) {
          double w = PivotPolicy<F>::weight((*this)(r, c));
          if (best < 0 || w > bw) {
            best = r;
            bw = w;
          }
          if constexpr (!PivotPolicy<F>::scaled) break;
        }
      }
      if (best < 0) continue;
      swap_rows(pr, best);
      F inv = one_ / (*this)(pr, c);
      for (int j = 0; j < cols_; ++j) (*this)(pr, j) = inv * (*this)(pr, j);
      (*this)(pr, c) = one_;
      for (int r = 0; r < rows_; ++r) {
        if (r == pr) continue;
        F f = (*this)(r, c);
        if (is_exact_zero(f)) continue;
        for (int j = 0; j < cols_; ++j) (*this)(r, j) -= f * (*this)(pr, j);
        (*this)(r, c) = zero_;
      }
      pivots.push_back(c);
      ++pr;
    }
    // clear numerically dead rows below the pivot block
    for (int r = pr; r < rows_; ++r)
      for (int j = 0; j < cols_; ++j) (*this)(r, j) = zero_;
    return pivots;
  }

  int rank(double tol = 1e-9) const {
    Matrix m = *this;
    return static_cast<int>(m.rref(tol).size());
  }

  // Basis (as rows) of {x : A x = 0}.
  Matrix nullspace(double tol = 1e-9) const {
    Matrix m = *this;
    std::vector<int> piv = m.rref(tol);
    std::vector<bool> is_piv(cols_, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<std::vector<F>> rows;
    for (int free = 0; free < cols_; ++free) {
      if (is_piv[free]) continue;
      std::vector<F> x(cols_, zero_);
      x[free] = one_;
      for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = -m(static_cast<int>(k), free);
      rows.push_back(std::move(x));
    }
    if (rows.empty()) return Matrix(0, cols_, zero_, one_);
    return from_rows(rows, zero_, one_);
  }

  std::optional<Matrix> inverse(double tol = 1e-9) const {
    if (rows_ != cols_) return std::nullopt;
    Matrix aug(rows_, 2 * cols_, zero_, one_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_ + i) = one_;
    }
    auto piv = aug.rref(tol);
    if (static_cast<int>(piv.size()) != rows_) return std::nullopt;
    for (int k = 0; k < rows_; ++k)
      if (piv[k] != k) return std::nullopt;
    Matrix inv(rows_, cols_, zero_, one_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
    return inv;
  }

  F det() const {
    if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
    Matrix m = *this;
    F d = one_;
    for (int c = 0; c < cols_; ++c) {
      int p = -1;
      for (int r = c; r < rows_; ++r)
        if (PivotPolicy<F>::nonzero(m(r, c), 1e-12)) {
          p = r;
          break;
        }
      if (p < 0) return zero_;
      if (p != c) {
        m.swap_rows(p, c);
        d = -d;
      }
      d = d * m(c, c);
      F inv = one_ / m(c, c);
      for (int r = c + 1; r < rows_; ++r) {
        F f = inv * m(r, c);
        if (is_exact_zero(f)) continue;
        for (int j = c; j < cols_; ++j) m(r, j) -= f * m(c, j);
      }
    }
    return d;
  }

  // Stack rows of b below this.
  Matrix vstack(const Matrix& b) const {
    Matrix r(rows_ + b.rows_, cols_, zero_, one_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (int i = 0; i < b.rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(rows_ + i, j) = b(i, j);
    return r;
  }

 private:
  static bool is_zero_entry(const F& x) {
    if constexpr (PivotPolicy<F>::scaled)
      return !PivotPolicy<F>::nonzero(x, 1e-9);
    else
      return is_zero(x);
  }
  static bool is_exact_zero(const F& x) { return is_zero(x); }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void scale_rows() {
    for (int i = 0; i < rows_; ++i) {
      double mx = 0.0;
      for (int j = 0; j < cols_; ++j) mx = std::max(mx, PivotPolicy<F>::weight((*this)(i, j)));
      if (mx > 0.0) {
        F inv = one_ / F(mx);
        for (int j = 0; j < cols_; ++j) (*this)(i, j) = inv * (*this)(i, j);
      }
    }
  }

  int rows_, cols_;
  F zero_, one_;
  std::vector<F> a_;
};

using MatQ = Matrix<GaussianRational>;

inline MatQ matq(int r, int c) { return MatQ(r, c, GaussianRational(0), GaussianRational(1)); }
inline MatQ matq_rows(const std::vector<std::vector<GaussianRational>>& rows) {
  return MatQ::from_rows(rows, GaussianRational(0), GaussianRational(1));
}
inline MatQ matq_id(int n) { return MatQ::identity(n, GaussianRational(0), GaussianRational(1)); }

}  // namespace genred
