// Copyright 2026 The cymub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace cymub {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major. Sized for statevector work at n <= 10
/// qubits (dimension <= 1024).
class CMatrix {
 public:
  CMatrix() : rows_(0), cols_(0) {}
  CMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

  static CMatrix identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  cplx& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
  const cplx& operator()(int i, int j) const {
    return a_[std::size_t(i) * cols_ + j];
  }

  CMatrix operator*(const CMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("CMatrix shape mismatch");
    CMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int k = 0; k < cols_; ++k) {
        cplx v = (*this)(i, k);
        if (v == cplx{}) continue;
        for (int j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
      }
    }
    return r;
  }

  CMatrix operator*(cplx s) const {
    CMatrix r = *this;
    for (auto& v : r.a_) v *= s;
    return r;
  }

  CMatrix operator+(const CMatrix& o) const {
    require_same(o);
    CMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
  }

  CMatrix operator-(const CMatrix& o) const {
    require_same(o);
    CMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
  }

  CMatrix adjoint() const {
    CMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
  }

  CMatrix pow(int k) const {
    CMatrix r = identity(rows_);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  static CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j) {
        cplx v = a(i, j);
        if (v == cplx{}) continue;
        for (int k = 0; k < b.rows_; ++k)
          for (int l = 0; l < b.cols_; ++l)
            r(i * b.rows_ + k, j * b.cols_ + l) = v * b(k, l);
      }
    return r;
  }

  double max_abs() const {
    double m = 0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
  }

  double frobenius_norm() const {
    double s = 0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
  }

  cplx trace() const {
    cplx t = 0;
    for (int i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

  std::vector<cplx> column(int j) const {
    std::vector<cplx> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  bool is_unitary(double tol) const {
    if (rows_ != cols_) return false;
    CMatrix d = adjoint() * *this - identity(rows_);
    return d.frobenius_norm() < tol;
  }

 private:
  void require_same(const CMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw std::invalid_argument("CMatrix shape mismatch");
    }
  }

  int rows_, cols_;
  std::vector<cplx> a_;
};

inline double vec_norm(const std::vector<cplx>& v) {
  double s = 0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

inline cplx vec_dot(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  cplx s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

/// Largest eigenvalue of the Gram matrix M M-dagger by power iteration,
/// started from the dominant column. Used for Schmidt rank-1 tests, where the
/// spectrum is either {1, 0, ...} (product state) or has a large tail.
inline double gram_top_eigenvalue(const CMatrix& m) {
  const CMatrix g = m.rows() <= m.cols() ? m * m.adjoint() : m.adjoint() * m;
  const int n = g.rows();
  int best = 0;
  double bestnorm = -1;
  for (int j = 0; j < n; ++j) {
    double s = 0;
    for (int i = 0; i < n; ++i) s += std::norm(g(i, j));
    if (s > bestnorm) {
      bestnorm = s;
      best = j;
    }
  }
  std::vector<cplx> v = g.column(best);
  double nv = vec_norm(v);
  if (nv == 0) return 0;
  for (auto& x : v) x /= nv;
  double lambda = 0;
  for (int iter = 0; iter < 64; ++iter) {
    std::vector<cplx> w(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) w[i] += g(i, j) * v[j];
    double nw = vec_norm(w);
    if (nw == 0) return 0;
    for (auto& x : w) x /= nw;
    double next = nw;  // Rayleigh quotient of the normalized previous vector
    v = std::move(w);
    if (std::abs(next - lambda) < 1e-15) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  return lambda;
}

}  // namespace cymub
