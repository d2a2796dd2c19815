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

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "cymub/gf2/fibonacci.hpp"
#include "cymub/gf2/linalg.hpp"
#include "cymub/gf2/matrix.hpp"
#include "cymub/mub/triple.hpp"

namespace cymub {

/// The symplectic form J = [[0, I], [I, 0]] matching the (z; x) layout.
inline Gf2Matrix symplectic_form(int n) {
  return Gf2Matrix::from_blocks(Gf2Matrix::zero(n, n), Gf2Matrix::identity(n),
                                Gf2Matrix::identity(n), Gf2Matrix::zero(n, n));
}

/// First entry (i, j) where C^T J C differs from J, or nullopt if symplectic.
inline std::optional<std::pair<int, int>> symplectic_violation(
    const Gf2Matrix& c) {
  if (!c.is_square() || c.rows() % 2 != 0) {
    throw DimensionError("symplectic test needs an even square matrix, got " +
                         Gf2Matrix::shape_str(c.rows(), c.cols()));
  }
  const int n = c.rows() / 2;
  Gf2Matrix d = c.transpose() * symplectic_form(n) * c + symplectic_form(n);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j)
      if (d.get(i, j)) return std::make_pair(i, j);
  return std::nullopt;
}

inline bool is_symplectic(const Gf2Matrix& c) {
  return !symplectic_violation(c).has_value();
}

/// Multiplicative order of C, capped; nullopt if no power up to cap is I.
inline std::optional<int> matrix_order(const Gf2Matrix& c, int cap) {
  Gf2Matrix p = c;
  const Gf2Matrix id = Gf2Matrix::identity(c.rows());
  for (int k = 1; k <= cap; ++k) {
    if (p == id) return k;
    p = p * c;
  }
  return std::nullopt;
}

/// Thrown by build_C when the construction itself is impossible
/// (R not invertible); the validation report rides along.
class InvalidTripleError : public std::runtime_error {
 public:
  InvalidTripleError(std::string msg, TripleReport rep)
      : std::runtime_error(std::move(msg)), report(std::move(rep)) {}
  TripleReport report;
};

/// C = [[B + A R^-1, R + B A + A R^-1 A], [R^-1, R^-1 A]] mod 2.
///
/// Only R's invertibility is required here: the block template is defined for
/// any such triple, and one bundled reference triple fails the symmetry
/// conditions yet its C matrix is still meaningful to reproduce and study.
/// Callers that need the full guarantees run validate_triple first; whether
/// the result generates a complete MUB set is certified downstream by the
/// partition validator.
inline Gf2Matrix build_C(const GeneratorTriple& t) {
  if (t.R.rank() != t.n) {
    throw InvalidTripleError(
        "cannot build C: R is not invertible (rank " +
            std::to_string(t.R.rank()) + " of " + std::to_string(t.n) + ")",
        validate_triple(t));
  }
  const Gf2Matrix rinv = t.R.inverse();
  const Gf2Matrix ari = t.A * rinv;
  Gf2Matrix tl = t.B + ari;
  Gf2Matrix tr = t.R + t.B * t.A + ari * t.A;
  Gf2Matrix br = rinv * t.A;
  return Gf2Matrix::from_blocks(tl, tr, rinv, br);
}

/// Cyclic generator: the symplectic step C plus the seed G0 = (I; G0x).
struct CyclicGenerator {
  enum class Source { FromTriple, ExplicitC };

  int n;
  Gf2Matrix C;
  Gf2Matrix G0;  // 2n x n, z block stacked over x block
  Source source;
  std::optional<GeneratorTriple> triple;

  Gf2Matrix seed_x_part() const { return G0.submatrix(n, 0, n, n); }
};

inline Gf2Matrix standard_seed(int n) {
  return Gf2Matrix::identity(n).vstack(Gf2Matrix::zero(n, n));
}

/// Seed with z part I and the given x part; the x part must be symmetric so
/// that class 0 is abelian.
inline Gf2Matrix seed_with_x_part(const Gf2Matrix& g0x) {
  if (!g0x.is_symmetric()) {
    throw std::invalid_argument(
        "seed x part must be symmetric (class 0 must commute)");
  }
  return Gf2Matrix::identity(g0x.rows()).vstack(g0x);
}

inline CyclicGenerator make_generator(const GeneratorTriple& t) {
  return CyclicGenerator{t.n, build_C(t), standard_seed(t.n),
                         CyclicGenerator::Source::FromTriple, t};
}

inline CyclicGenerator make_generator(const GeneratorTriple& t,
                                      const Gf2Matrix& g0x) {
  return CyclicGenerator{t.n, build_C(t), seed_with_x_part(g0x),
                         CyclicGenerator::Source::FromTriple, t};
}

/// Thrown when an explicit C fails the symplectic or order requirements.
class InvalidGeneratorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Wrap an explicit 2n x 2n matrix as a generator. Requires C symplectic and
/// of order exactly 2^n + 1; there is no triple to validate instead.
inline CyclicGenerator make_explicit_generator(const Gf2Matrix& c,
                                               const Gf2Matrix& g0x) {
  if (!c.is_square() || c.rows() % 2 != 0) {
    throw DimensionError("explicit C must be 2n x 2n, got " +
                         Gf2Matrix::shape_str(c.rows(), c.cols()));
  }
  const int n = c.rows() / 2;
  if (auto v = symplectic_violation(c)) {
    throw InvalidGeneratorError(
        "explicit C is not symplectic: C^T J C differs from J at (" +
        std::to_string(v->first) + ", " + std::to_string(v->second) + ")");
  }
  const int d1 = (1 << n) + 1;
  auto ord = matrix_order(c, d1);
  if (!ord || *ord != d1) {
    throw InvalidGeneratorError(
        "explicit C must have order " + std::to_string(d1) +
        (ord ? " but has order " + std::to_string(*ord)
             : " but no power up to that bound is the identity"));
  }
  return CyclicGenerator{n, c, seed_with_x_part(g0x),
                         CyclicGenerator::Source::ExplicitC, std::nullopt};
}

inline CyclicGenerator make_explicit_generator(const Gf2Matrix& c) {
  return make_explicit_generator(
      c, Gf2Matrix::zero(c.rows() / 2, c.rows() / 2));
}

/// C^j by iterated multiplication.
inline Gf2Matrix c_power(const CyclicGenerator& g, int j) {
  if (j < 0) throw std::invalid_argument("c_power needs j >= 0");
  return g.C.pow(j);
}

/// C^j from the Fibonacci closed form
///   [[F_{j+1}(B) + A R^-1 F_j(B),
///     F_{j+1}(B) A + F_j(B) R + A R^-1 (F_j(B) A + F_{j-1}(B) R)],
///    [R^-1 F_j(B), R^-1 (F_j(B) A + F_{j-1}(B) R)]]
/// with F_{-1} = 1 so that j = 0 yields the identity.
inline Gf2Matrix c_power_closed_form(const GeneratorTriple& t, int j) {
  if (j < 0) throw std::invalid_argument("c_power_closed_form needs j >= 0");
  const FibonacciTriplet f = fibonacci_triplet(j);
  const Gf2Matrix fb_below = poly_eval_at_matrix(f.below, t.B);
  const Gf2Matrix fb_at = poly_eval_at_matrix(f.at, t.B);
  const Gf2Matrix fb_above = poly_eval_at_matrix(f.above, t.B);
  const Gf2Matrix rinv = t.R.inverse();
  const Gf2Matrix ari = t.A * rinv;
  const Gf2Matrix inner = fb_at * t.A + fb_below * t.R;
  Gf2Matrix tl = fb_above + ari * fb_at;
  Gf2Matrix tr = fb_above * t.A + fb_at * t.R + ari * inner;
  Gf2Matrix bl = rinv * fb_at;
  Gf2Matrix br = rinv * inner;
  return Gf2Matrix::from_blocks(tl, tr, bl, br);
}

/// G_j = C^j G_0.
inline Gf2Matrix generator_j(const CyclicGenerator& g, int j) {
  return c_power(g, j) * g.G0;
}

/// Standard-seed closed form (F_{j+1}(B) F_j(B)^-1 R + A; I) for
/// 1 <= j <= d. Returns nullopt when F_j(B) is singular; callers fall back to
/// the product form. Equal to generator_j only as a class generator (same
/// column span), since the product form carries the factor R^-1 F_j(B).
inline std::optional<Gf2Matrix> generator_j_closed_form(
    const GeneratorTriple& t, int j) {
  if (j < 1) throw std::invalid_argument("closed-form G_j needs j >= 1");
  const Gf2Matrix fb_at = poly_eval_at_matrix(fibonacci_poly(j), t.B);
  if (fb_at.rank() != t.n) return std::nullopt;
  const Gf2Matrix fb_above = poly_eval_at_matrix(fibonacci_poly(j + 1), t.B);
  Gf2Matrix z = fb_above * fb_at.inverse() * t.R + t.A;
  return z.vstack(Gf2Matrix::identity(t.n));
}

/// Canonical basis of a column span: reduced column echelon form. Two
/// generator matrices describe the same class iff these agree.
inline Gf2Matrix column_span_canonical(const Gf2Matrix& m) {
  Gf2Matrix t = m.transpose();  // row-reduce the transpose
  const int rows = t.rows(), cols = t.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (t.get(i, c)) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    t.swap_rows(r, piv);
    for (int i = 0; i < rows; ++i) {
      if (i != r && t.get(i, c)) t.xor_row(i, t.row_word(r));
    }
    ++r;
  }
  return t.transpose();
}

}  // namespace cymub
