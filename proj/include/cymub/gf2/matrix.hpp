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

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace cymub {

/// Thrown when operand shapes do not match; the message names both shapes.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a singular matrix is inverted; carries the rank found.
class NotInvertibleError : public std::runtime_error {
 public:
  NotInvertibleError(int rank, int size)
      : std::runtime_error("matrix not invertible: rank " +
                           std::to_string(rank) + " < " +
                           std::to_string(size)),
        rank_(rank) {}
  int rank() const { return rank_; }

 private:
  int rank_;
};

/// Bit vector over Z2. One 64-bit word; all uses here have length <= 32.
struct Gf2Vec {
  int len = 0;
  std::uint64_t bits = 0;

  Gf2Vec() = default;
  Gf2Vec(int n, std::uint64_t b) : len(n), bits(b & mask(n)) {}

  static std::uint64_t mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

  int get(int i) const { return int((bits >> i) & 1); }
  void set(int i, int v) {
    bits = (bits & ~(std::uint64_t{1} << i)) | (std::uint64_t(v & 1) << i);
  }
  bool is_zero() const { return bits == 0; }
  int parity() const { return std::popcount(bits) & 1; }

  friend bool operator==(const Gf2Vec&, const Gf2Vec&) = default;
};

/// Dense matrix over Z2, one 64-bit word per row (column count <= 64).
///
/// Values are immutable in spirit: operations return fresh matrices, so
/// instances can be shared across threads freely.
class Gf2Matrix {
 public:
  Gf2Matrix(int rows, int cols) : rows_(rows), cols_(cols), row_bits_(rows, 0) {
    if (rows < 1 || cols < 1 || cols > 64) {
      throw DimensionError("bad Gf2Matrix shape " + shape_str(rows, cols));
    }
  }

  Gf2Matrix(std::initializer_list<std::initializer_list<int>> rows)
      : Gf2Matrix(int(rows.size()),
                  rows.size() ? int(rows.begin()->size()) : 0) {
    int i = 0;
    for (const auto& r : rows) {
      if (int(r.size()) != cols_) {
        throw DimensionError("ragged initializer for Gf2Matrix");
      }
      int j = 0;
      for (int v : r) set(i, j++, v);
      ++i;
    }
  }

  static Gf2Matrix zero(int rows, int cols) { return Gf2Matrix(rows, cols); }

  static Gf2Matrix identity(int n) {
    Gf2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int get(int i, int j) const { return int((row_bits_[i] >> j) & 1); }
  void set(int i, int j, int v) {
    row_bits_[i] =
        (row_bits_[i] & ~(std::uint64_t{1} << j)) | (std::uint64_t(v & 1) << j);
  }

  std::uint64_t row_word(int i) const { return row_bits_[i]; }
  void xor_row(int i, std::uint64_t w) { row_bits_[i] ^= w; }
  void swap_rows(int i, int j) { std::swap(row_bits_[i], row_bits_[j]); }

  bool is_zero() const {
    for (auto w : row_bits_)
      if (w) return false;
    return true;
  }

  bool is_square() const { return rows_ == cols_; }

  Gf2Matrix operator+(const Gf2Matrix& o) const {
    require_same_shape(o, "add");
    Gf2Matrix r = *this;
    for (int i = 0; i < rows_; ++i) r.row_bits_[i] ^= o.row_bits_[i];
    return r;
  }

  Gf2Matrix operator*(const Gf2Matrix& o) const {
    if (cols_ != o.rows_) {
      throw DimensionError("cannot multiply " + shape_str(rows_, cols_) +
                           " by " + shape_str(o.rows_, o.cols_));
    }
    Gf2Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
      std::uint64_t acc = 0;
      std::uint64_t w = row_bits_[i];
      while (w) {
        int k = std::countr_zero(w);
        w &= w - 1;
        acc ^= o.row_bits_[k];
      }
      r.row_bits_[i] = acc;
    }
    return r;
  }

  Gf2Vec operator*(const Gf2Vec& v) const {
    if (cols_ != v.len) {
      throw DimensionError("cannot apply " + shape_str(rows_, cols_) +
                           " to vector of length " + std::to_string(v.len));
    }
    Gf2Vec r(rows_, 0);
    for (int i = 0; i < rows_; ++i) {
      r.set(i, std::popcount(row_bits_[i] & v.bits) & 1);
    }
    return r;
  }

  Gf2Matrix transpose() const {
    Gf2Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.set(j, i, get(i, j));
    return r;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if (get(i, j) != get(j, i)) return false;
    return true;
  }

  int rank() const {
    std::vector<std::uint64_t> w = row_bits_;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int piv = -1;
      for (int i = r; i < rows_; ++i) {
        if ((w[i] >> c) & 1) {
          piv = i;
          break;
        }
      }
      if (piv < 0) continue;
      std::swap(w[r], w[piv]);
      for (int i = 0; i < rows_; ++i) {
        if (i != r && ((w[i] >> c) & 1)) w[i] ^= w[r];
      }
      ++r;
    }
    return r;
  }

  /// Gauss-Jordan inverse mod 2. Throws NotInvertibleError for singular input.
  Gf2Matrix inverse() const {
    if (!is_square()) {
      throw DimensionError("cannot invert non-square " +
                           shape_str(rows_, cols_));
    }
    const int n = rows_;
    std::vector<std::uint64_t> a = row_bits_;
    std::vector<std::uint64_t> inv(n);
    for (int i = 0; i < n; ++i) inv[i] = std::uint64_t{1} << i;
    int r = 0;
    for (int c = 0; c < n; ++c) {
      int piv = -1;
      for (int i = r; i < n; ++i) {
        if ((a[i] >> c) & 1) {
          piv = i;
          break;
        }
      }
      if (piv < 0) continue;
      std::swap(a[r], a[piv]);
      std::swap(inv[r], inv[piv]);
      for (int i = 0; i < n; ++i) {
        if (i != r && ((a[i] >> c) & 1)) {
          a[i] ^= a[r];
          inv[i] ^= inv[r];
        }
      }
      ++r;
    }
    if (r < n) throw NotInvertibleError(r, n);
    Gf2Matrix out(n, n);
    out.row_bits_ = inv;
    return out;
  }

  Gf2Matrix pow(int k) const {
    if (!is_square()) {
      throw DimensionError("cannot raise non-square " +
                           shape_str(rows_, cols_) + " to a power");
    }
    Gf2Matrix r = identity(rows_);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  /// Column j as a bit vector.
  Gf2Vec column(int j) const {
    Gf2Vec v(rows_, 0);
    for (int i = 0; i < rows_; ++i) v.set(i, get(i, j));
    return v;
  }

  /// Stack this on top of `bottom`.
  Gf2Matrix vstack(const Gf2Matrix& bottom) const {
    if (cols_ != bottom.cols_) {
      throw DimensionError("vstack mismatch: " + shape_str(rows_, cols_) +
                           " over " + shape_str(bottom.rows_, bottom.cols_));
    }
    Gf2Matrix r(rows_ + bottom.rows_, cols_);
    for (int i = 0; i < rows_; ++i) r.row_bits_[i] = row_bits_[i];
    for (int i = 0; i < bottom.rows_; ++i)
      r.row_bits_[rows_ + i] = bottom.row_bits_[i];
    return r;
  }

  /// Concatenate columns: [this | right].
  Gf2Matrix hstack(const Gf2Matrix& right) const {
    if (rows_ != right.rows_) {
      throw DimensionError("hstack mismatch: " + shape_str(rows_, cols_) +
                           " beside " + shape_str(right.rows_, right.cols_));
    }
    if (cols_ + right.cols_ > 64) {
      throw DimensionError("hstack result exceeds 64 columns");
    }
    Gf2Matrix r(rows_, cols_ + right.cols_);
    for (int i = 0; i < rows_; ++i) {
      r.row_bits_[i] = row_bits_[i] | (right.row_bits_[i] << cols_);
    }
    return r;
  }

  Gf2Matrix submatrix(int r0, int c0, int nr, int nc) const {
    Gf2Matrix r(nr, nc);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) r.set(i, j, get(r0 + i, c0 + j));
    return r;
  }

  /// 2x2 block composition [[tl, tr], [bl, br]]; all blocks same square size.
  static Gf2Matrix from_blocks(const Gf2Matrix& tl, const Gf2Matrix& tr,
                               const Gf2Matrix& bl, const Gf2Matrix& br) {
    return tl.hstack(tr).vstack(bl.hstack(br));
  }

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

  /// Row-major entry-wise lexicographic order (entry (0,0) most significant).
  static bool lex_less(const Gf2Matrix& a, const Gf2Matrix& b) {
    for (int i = 0; i < a.rows_ && i < b.rows_; ++i) {
      for (int j = 0; j < a.cols_ && j < b.cols_; ++j) {
        int x = a.get(i, j), y = b.get(i, j);
        if (x != y) return x < y;
      }
    }
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    return a.cols_ < b.cols_;
  }

  std::string to_string() const {
    std::string s;
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) {
        s += get(i, j) ? '1' : '0';
        if (j + 1 < cols_) s += ' ';
      }
      s += '\n';
    }
    return s;
  }

  static std::string shape_str(int r, int c) {
    return std::to_string(r) + "x" + std::to_string(c);
  }

 private:
  void require_same_shape(const Gf2Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw DimensionError(std::string("cannot ") + op + " " +
                           shape_str(rows_, cols_) + " and " +
                           shape_str(o.rows_, o.cols_));
    }
  }

  int rows_;
  int cols_;
  std::vector<std::uint64_t> row_bits_;
};

}  // namespace cymub
