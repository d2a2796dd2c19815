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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cymub/gf2/matrix.hpp"
#include "cymub/gf2/poly.hpp"

namespace cymub {

/// Characteristic polynomial det(xI + m) over Z2 (+ and - coincide), monic of
/// degree n. Cofactor expansion along the first unprocessed row, memoized per
/// column subset, so the cost is O(2^n * n) polynomial operations; fine for
/// the supported n <= 16.
inline Gf2Poly char_poly(const Gf2Matrix& m) {
  if (!m.is_square()) {
    throw DimensionError("char_poly requires a square matrix, got " +
                         Gf2Matrix::shape_str(m.rows(), m.cols()));
  }
  const int n = m.rows();
  if (n > 16) {
    throw std::invalid_argument("char_poly supports sizes up to 16");
  }
  std::vector<std::optional<Gf2Poly>> memo(std::size_t{1} << n);
  memo[0] = Gf2Poly::one();

  auto rec = [&](auto&& self, std::uint32_t mask) -> const Gf2Poly& {
    auto& slot = memo[mask];
    if (slot) return *slot;
    const int row = n - std::popcount(mask);
    Gf2Poly acc;
    std::uint32_t rest = mask;
    while (rest) {
      int col = std::countr_zero(rest);
      rest &= rest - 1;
      Gf2Poly entry;
      if (m.get(row, col)) entry = entry + Gf2Poly::one();
      if (row == col) entry = entry + Gf2Poly::x();
      if (!entry.is_zero()) {
        acc = acc + entry * self(self, mask & ~(std::uint32_t{1} << col));
      }
    }
    slot = std::move(acc);
    return *slot;
  };
  return rec(rec, (std::uint32_t{1} << n) - 1);
}

/// Evaluate p at a square matrix: sum of p_i * m^i with m^0 = I.
inline Gf2Matrix poly_eval_at_matrix(const Gf2Poly& p, const Gf2Matrix& m) {
  if (!m.is_square()) {
    throw DimensionError("poly_eval_at_matrix requires a square matrix, got " +
                         Gf2Matrix::shape_str(m.rows(), m.cols()));
  }
  const int n = m.rows();
  Gf2Matrix acc = Gf2Matrix::zero(n, n);
  Gf2Matrix power = Gf2Matrix::identity(n);
  const int top = p.is_zero() ? -1 : *p.degree();
  for (int i = 0; i <= top; ++i) {
    if (p.coeff(i)) acc = acc + power;
    if (i < top) power = power * m;
  }
  return acc;
}

/// Powers I, b, ..., b^{n-1} of an n x n matrix.
inline std::vector<Gf2Matrix> matrix_powers(const Gf2Matrix& b) {
  const int n = b.rows();
  std::vector<Gf2Matrix> powers;
  powers.reserve(n);
  powers.push_back(Gf2Matrix::identity(n));
  for (int i = 1; i < n; ++i) powers.push_back(powers.back() * b);
  return powers;
}

/// True iff r lies in span{I, b, ..., b^{n-1}} over Z2. Solves the stacked
/// linear system on the n^2 entries by reducing vec(r) against an echelon
/// basis of the vectorized powers.
inline bool in_polynomial_span(const Gf2Matrix& r, const Gf2Matrix& b) {
  if (!b.is_square() || r.rows() != b.rows() || r.cols() != b.cols()) {
    throw DimensionError("in_polynomial_span needs same square size, got " +
                         Gf2Matrix::shape_str(r.rows(), r.cols()) + " and " +
                         Gf2Matrix::shape_str(b.rows(), b.cols()));
  }
  const int n = b.rows();
  const int nbits = n * n;
  const int nwords = (nbits + 63) / 64;
  auto vectorize = [&](const Gf2Matrix& m) {
    std::vector<std::uint64_t> v(nwords, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (m.get(i, j)) v[(i * n + j) / 64] |= std::uint64_t{1}
                                                << ((i * n + j) % 64);
    return v;
  };
  // echelon basis keyed by leading bit position
  std::vector<std::pair<int, std::vector<std::uint64_t>>> basis;
  auto leading = [&](const std::vector<std::uint64_t>& v) {
    for (int w = nwords - 1; w >= 0; --w)
      if (v[w]) return w * 64 + 63 - std::countl_zero(v[w]);
    return -1;
  };
  auto reduce = [&](std::vector<std::uint64_t> v) {
    for (const auto& [lead, bv] : basis) {
      if (leading(v) == lead)
        for (int w = 0; w < nwords; ++w) v[w] ^= bv[w];
    }
    return v;
  };
  for (const Gf2Matrix& p : matrix_powers(b)) {
    auto v = reduce(vectorize(p));
    int lead = leading(v);
    if (lead >= 0) {
      basis.emplace_back(lead, std::move(v));
      std::sort(basis.begin(), basis.end(),
                [](const auto& a, const auto& b) { return a.first > b.first; });
    }
  }
  auto target = vectorize(r);
  bool changed = true;
  while (changed) {
    changed = false;
    int lead = leading(target);
    if (lead < 0) break;
    for (const auto& [bl, bv] : basis) {
      if (bl == lead) {
        for (int w = 0; w < nwords; ++w) target[w] ^= bv[w];
        changed = true;
        break;
      }
    }
  }
  return leading(target) < 0;
}

/// True iff NO polynomial q of degree < n and diagonal D satisfy
/// a = q(b) * r + D. Only off-diagonal entries are compared, since D absorbs
/// any diagonal. Decided by enumerating all 2^n coefficient masks; successive
/// masks follow a Gray code so each step XORs a single precomputed b^i * r.
inline bool semigroup_a_condition(const Gf2Matrix& a, const Gf2Matrix& b,
                                  const Gf2Matrix& r) {
  if (!b.is_square() || a.rows() != b.rows() || a.cols() != b.cols() ||
      r.rows() != b.rows() || r.cols() != b.cols()) {
    throw DimensionError("semigroup_a_condition needs same square size");
  }
  const int n = b.rows();
  std::vector<Gf2Matrix> pr;
  pr.reserve(n);
  for (const Gf2Matrix& p : matrix_powers(b)) pr.push_back(p * r);

  auto off_diagonal_equal = [&](const Gf2Matrix& t) {
    for (int i = 0; i < n; ++i) {
      std::uint64_t diff = t.row_word(i) ^ a.row_word(i);
      if (diff & ~(std::uint64_t{1} << i)) return false;
    }
    return true;
  };

  Gf2Matrix cur = Gf2Matrix::zero(n, n);  // q = 0
  if (off_diagonal_equal(cur)) return false;
  for (std::uint32_t k = 1; k < (std::uint32_t{1} << n); ++k) {
    cur = cur + pr[std::countr_zero(k)];
    if (off_diagonal_equal(cur)) return false;
  }
  return true;
}

}  // namespace cymub
