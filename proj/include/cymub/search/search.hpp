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
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "cymub/gf2/fibonacci.hpp"
#include "cymub/gf2/linalg.hpp"
#include "cymub/gf2/matrix.hpp"
#include "cymub/mub/classes.hpp"
#include "cymub/mub/generator.hpp"
#include "cymub/mub/triple.hpp"

namespace cymub {

/// Query for generator triples of one set type.
struct SearchQuery {
  int n = 2;
  SetType kind = SetType::Field;
  int limit = 1;
  std::uint64_t seed = 1;  // drives the heuristic candidate stream
  std::optional<std::chrono::milliseconds> budget;
};

namespace search_detail {

/// Monic degree-n polynomials with Fibonacci index exactly 2^n + 1, ascending
/// by coefficient bits. Constant term 1 is forced: x never divides F_{2^n+1}.
inline std::vector<Gf2Poly> good_polynomials(int n) {
  std::vector<Gf2Poly> good;
  const std::uint64_t want = (std::uint64_t{1} << n) + 1;
  for (std::uint64_t mid = 0; mid < (std::uint64_t{1} << (n - 1)); ++mid) {
    Gf2Poly p = Gf2Poly::one() + Gf2Poly::monomial(n);
    for (int i = 1; i < n; ++i) {
      if ((mid >> (i - 1)) & 1) p = p + Gf2Poly::monomial(i);
    }
    try {
      if (fibonacci_index(p) == want) good.push_back(p);
    } catch (const FibonacciIndexError&) {
    }
  }
  return good;
}

inline Gf2Matrix companion(const Gf2Poly& p) {
  const int n = *p.degree();
  Gf2Matrix c(n, n);
  for (int i = 1; i < n; ++i) c.set(i, i - 1, 1);
  for (int i = 0; i < n; ++i) c.set(i, n - 1, p.coeff(i));
  return c;
}

inline bool charpoly_is_good(const Gf2Matrix& b,
                             const std::vector<Gf2Poly>& good) {
  const Gf2Poly cp = char_poly(b);
  return std::find(good.begin(), good.end(), cp) != good.end();
}

/// Symmetric matrix from upper-triangle bits, row-major over i <= j.
inline Gf2Matrix symmetric_from_bits(int n, std::uint64_t bits) {
  Gf2Matrix m(n, n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j, ++k) {
      int v = int((bits >> k) & 1);
      m.set(i, j, v);
      m.set(j, i, v);
    }
  }
  return m;
}

/// All matrices similar to the companion matrices of the good polynomials,
/// by scanning GL(n, 2). Exhaustive candidate set for n <= 4; every matrix
/// whose characteristic polynomial is irreducible with the right index shows
/// up here.
inline std::vector<Gf2Matrix> candidate_b_exhaustive(int n) {
  const auto good = good_polynomials(n);
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<Gf2Matrix> out;
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    Gf2Matrix t(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        t.set(i, j, int((bits >> (i * n + j)) & 1));
    if (t.rank() != n) continue;
    const Gf2Matrix tinv = t.inverse();
    for (const Gf2Poly& p : good) {
      Gf2Matrix b = t * companion(p) * tinv;
      std::vector<std::uint64_t> key;
      key.reserve(n);
      for (int i = 0; i < n; ++i) key.push_back(b.row_word(i));
      if (seen.insert(std::move(key)).second) out.push_back(std::move(b));
    }
  }
  std::sort(out.begin(), out.end(), Gf2Matrix::lex_less);
  return out;
}

/// Basis of the solution space {R : R symmetric, BR symmetric}; both
/// conditions are linear in the n^2 entries of R.
inline std::vector<Gf2Matrix> r_space_basis(const Gf2Matrix& b) {
  const int n = b.rows();
  const int vars = n * n;
  std::vector<std::vector<int>> rows;  // constraint rows over the entries
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> row(vars, 0);
      row[i * n + j] ^= 1;
      row[j * n + i] ^= 1;
      rows.push_back(std::move(row));
      std::vector<int> row2(vars, 0);
      for (int k = 0; k < n; ++k) {
        row2[k * n + j] ^= b.get(i, k);
        row2[k * n + i] ^= b.get(j, k);
      }
      rows.push_back(std::move(row2));
    }
  }
  // null space by Gauss-Jordan
  std::vector<int> pivot_of_col(vars, -1);
  int r = 0;
  for (int c = 0; c < vars && r < int(rows.size()); ++c) {
    int piv = -1;
    for (int i = r; i < int(rows.size()); ++i) {
      if (rows[i][c]) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    for (int i = 0; i < int(rows.size()); ++i) {
      if (i != r && rows[i][c]) {
        for (int k = 0; k < vars; ++k) rows[i][k] ^= rows[r][k];
      }
    }
    pivot_of_col[c] = r;
    ++r;
  }
  std::vector<Gf2Matrix> basis;
  for (int c = 0; c < vars; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    Gf2Matrix m(n, n);
    m.set(c / n, c % n, 1);
    for (int c2 = 0; c2 < vars; ++c2) {
      if (pivot_of_col[c2] >= 0 && rows[pivot_of_col[c2]][c]) {
        m.set(c2 / n, c2 % n, 1);
      }
    }
    basis.push_back(std::move(m));
  }
  return basis;
}

/// All R with R, BR symmetric, sorted; optionally only invertible ones.
inline std::vector<Gf2Matrix> r_candidates(const Gf2Matrix& b) {
  const auto basis = r_space_basis(b);
  if (basis.size() > 20) {
    throw std::runtime_error("R solution space unexpectedly large");
  }
  const int n = b.rows();
  std::vector<Gf2Matrix> out;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << basis.size());
       ++bits) {
    Gf2Matrix r = Gf2Matrix::zero(n, n);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if ((bits >> i) & 1) r = r + basis[i];
    }
    if (r.rank() == n) out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), Gf2Matrix::lex_less);
  return out;
}

/// Symmetric A candidates, ascending by row-major bits.
inline std::vector<Gf2Matrix> a_candidates(int n) {
  std::vector<Gf2Matrix> out;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << (n * (n + 1) / 2));
       ++bits) {
    out.push_back(symmetric_from_bits(n, bits));
  }
  std::sort(out.begin(), out.end(), Gf2Matrix::lex_less);
  return out;
}

/// Deterministic heuristic stream of candidate B for n >= 5: Hankel matrices
/// first (symmetric by construction, covers the field search), then random
/// similarity transforms of the good companion matrices.
class HeuristicBStream {
 public:
  HeuristicBStream(int n, std::uint64_t seed, bool symmetric_only)
      : n_(n), good_(good_polynomials(n)), rng_(seed),
        symmetric_only_(symmetric_only) {}

  std::optional<Gf2Matrix> next() {
    const std::uint64_t hankel_total = std::uint64_t{1} << (2 * n_ - 1);
    while (hankel_bits_ < hankel_total) {
      Gf2Matrix b(n_, n_);
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
          b.set(i, j, int((hankel_bits_ >> (i + j)) & 1));
      ++hankel_bits_;
      if (charpoly_is_good(b, good_)) return b;
    }
    if (good_.empty()) return std::nullopt;
    for (int tries = 0; tries < 100000; ++tries) {
      Gf2Matrix t(n_, n_);
      for (int i = 0; i < n_; ++i)
        t.xor_row(i, rng_() & Gf2Vec::mask(n_));
      if (t.rank() != n_) continue;
      Gf2Matrix b = t * companion(good_[pick_++ % good_.size()]) * t.inverse();
      if (symmetric_only_ && !b.is_symmetric()) continue;
      return b;
    }
    return std::nullopt;
  }

 private:
  int n_;
  std::vector<Gf2Poly> good_;
  std::mt19937_64 rng_;
  bool symmetric_only_;
  std::uint64_t hankel_bits_ = 0;
  std::size_t pick_ = 0;
};

}  // namespace search_detail

/// Find generator triples of the requested kind. Exhaustive modes: field for
/// n <= 5 (symmetric B scan), group/semigroup for n <= 4 (companion-orbit B
/// scan); results there are ordered lexicographically on the row-major bits
/// of B, then R, then A. Beyond that a deterministic heuristic stream
/// (Hankel scan, then seeded random similarity transforms) supplies B
/// candidates, so identical queries still yield identical results.
inline std::vector<GeneratorTriple> find_triples(const SearchQuery& q) {
  namespace sd = search_detail;
  if (q.n < 2) throw std::invalid_argument("search needs n >= 2");
  if (q.limit < 1) throw std::invalid_argument("search needs limit >= 1");
  const auto t0 = std::chrono::steady_clock::now();
  auto expired = [&]() {
    return q.budget && std::chrono::steady_clock::now() - t0 > *q.budget;
  };

  std::vector<GeneratorTriple> out;
  const Gf2Matrix id = Gf2Matrix::identity(q.n);
  const Gf2Matrix zero = Gf2Matrix::zero(q.n, q.n);

  auto consider_field = [&](const Gf2Matrix& b) {
    // R = I: symmetric, invertible, BR = B symmetric by construction, and
    // trivially a polynomial in B.
    out.emplace_back(b, id, zero);
  };
  auto consider_group_semigroup = [&](const Gf2Matrix& b) {
    for (const Gf2Matrix& r : sd::r_candidates(b)) {
      if (int(out.size()) >= q.limit || expired()) return;
      if (q.kind == SetType::Group) {
        if (!in_polynomial_span(r, b)) out.emplace_back(b, r, zero);
      } else {
        for (const Gf2Matrix& a : sd::a_candidates(q.n)) {
          if (int(out.size()) >= q.limit || expired()) return;
          if (semigroup_a_condition(a, b, r)) {
            out.emplace_back(b, r, a);
            break;  // one A per (B, R) keeps the result list diverse
          }
        }
      }
    }
  };

  const bool exhaustive =
      q.kind == SetType::Field ? q.n <= 5 : q.n <= 4;
  if (exhaustive) {
    if (q.kind == SetType::Field) {
      const auto good = sd::good_polynomials(q.n);
      for (std::uint64_t bits = 0;
           bits < (std::uint64_t{1} << (q.n * (q.n + 1) / 2)); ++bits) {
        Gf2Matrix b = sd::symmetric_from_bits(q.n, bits);
        if (sd::charpoly_is_good(b, good)) consider_field(b);
        if (expired()) break;
      }
      std::sort(out.begin(), out.end(),
                [](const GeneratorTriple& x, const GeneratorTriple& y) {
                  return Gf2Matrix::lex_less(x.B, y.B);
                });
      if (int(out.size()) > q.limit) out.erase(out.begin() + q.limit, out.end());
    } else {
      for (const Gf2Matrix& b : sd::candidate_b_exhaustive(q.n)) {
        if (int(out.size()) >= q.limit || expired()) break;
        consider_group_semigroup(b);
      }
    }
  } else {
    sd::HeuristicBStream stream(q.n, q.seed, q.kind == SetType::Field);
    while (int(out.size()) < q.limit && !expired()) {
      auto b = stream.next();
      if (!b) break;
      if (q.kind == SetType::Field) {
        if (b->is_symmetric()) consider_field(*b);
      } else {
        consider_group_semigroup(*b);
      }
    }
  }
  if (int(out.size()) > q.limit) out.erase(out.begin() + q.limit, out.end());
  return out;
}

/// Seed x parts G0x that turn the generator into a complete MUB set,
/// ascending by upper-triangle bits (the zero seed comes first when valid).
/// Only symmetric candidates are tried; a non-symmetric x part makes class 0
/// non-abelian.
inline std::vector<Gf2Matrix> find_offset_seeds(const CyclicGenerator& g,
                                                int limit) {
  if (g.n > 5) {
    throw std::invalid_argument("offset seed scan supports n <= 5");
  }
  std::vector<Gf2Matrix> out;
  for (std::uint64_t bits = 0;
       bits < (std::uint64_t{1} << (g.n * (g.n + 1) / 2)) &&
       int(out.size()) < limit;
       ++bits) {
    Gf2Matrix g0x = search_detail::symmetric_from_bits(g.n, bits);
    CyclicGenerator cand = g;
    cand.G0 = seed_with_x_part(g0x);
    try {
      CyclicMubSet set = build_classes(cand);
      if (validate_mub_partition(set).valid()) out.push_back(std::move(g0x));
    } catch (const std::runtime_error&) {
      // rank-deficient class: not a valid seed
    }
  }
  return out;
}

}  // namespace cymub
