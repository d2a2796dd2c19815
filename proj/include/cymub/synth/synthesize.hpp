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
#include <stdexcept>
#include <string>
#include <vector>

#include "cymub/gf2/matrix.hpp"
#include "cymub/mub/generator.hpp"
#include "cymub/synth/circuit.hpp"

namespace cymub {

/// Thrown by synthesize for non-symplectic input; names a violated entry of
/// C^T J C - J.
class NotSymplecticError : public std::runtime_error {
 public:
  NotSymplecticError(int i, int j)
      : std::runtime_error("input is not symplectic: C^T J C differs from J "
                           "at (" + std::to_string(i) + ", " +
                           std::to_string(j) + ")"),
        row(i), col(j) {}
  int row, col;
};

/// Fast path for field-based generators C = [[B, I], [I, 0]]: Hadamard on
/// every qubit, then S_i per diagonal one of B and CZ_{ij} per upper one.
/// Gate count is exactly n plus the number of nonzero entries of B on or
/// above the diagonal.
inline Circuit synth_field_based(const Gf2Matrix& b) {
  if (!b.is_symmetric()) {
    throw std::invalid_argument("field-based synthesis needs symmetric B");
  }
  const int n = b.rows();
  Circuit c{n, {}};
  for (int q = 0; q < n; ++q) c.gates.push_back(Gate::h(q));
  for (int i = 0; i < n; ++i) {
    if (b.get(i, i)) c.gates.push_back(Gate::s(i));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (b.get(i, j)) c.gates.push_back(Gate::cz(i, j));
    }
  }
  return c;
}

inline int nnz_upper(const Gf2Matrix& b) {
  int count = 0;
  for (int i = 0; i < b.rows(); ++i)
    for (int j = i; j < b.cols(); ++j) count += b.get(i, j);
  return count;
}

/// General synthesis by symplectic Gaussian elimination. For qubit q in turn,
/// row operations (each an elementary gate) bring columns q and n+q to unit
/// form: an H secures an x-pivot, CNOTs clear the rest of the x block, S/CZ
/// clear the z block, a final H moves the pivot into the z slot, and the same
/// clearing handles column n+q. Reversing the eliminating sequence gives the
/// circuit; every elementary action is an involution. Output length is
/// O(n^2) gates with a fixed, deterministic pivot order.
inline Circuit synthesize(const Gf2Matrix& c) {
  if (auto v = symplectic_violation(c)) {
    throw NotSymplecticError(v->first, v->second);
  }
  const int n = c.rows() / 2;
  Gf2Matrix m = c;
  std::vector<Gate> ops;
  auto do_op = [&](Gate g) {
    detail::apply_gate_rows(m, g, n);
    ops.push_back(g);
  };

  for (int q = 0; q < n; ++q) {
    const Gf2Vec unit_z(2 * n, std::uint64_t{1} << q);
    const Gf2Vec unit_x(2 * n, std::uint64_t{1} << (n + q));
    if (m.column(q) == unit_z && m.column(n + q) == unit_x) continue;
    // column q: first make its x part the unit vector e_q
    bool have_x = false;
    for (int r = q; r < n && !have_x; ++r) have_x = m.get(n + r, q);
    if (!have_x) {
      int r = -1;
      for (int i = q; i < n; ++i) {
        if (m.get(i, q)) {
          r = i;
          break;
        }
      }
      if (r < 0) throw std::logic_error("synthesize: lost column pivot");
      do_op(Gate::h(r));
    }
    if (!m.get(n + q, q)) {
      int r = -1;
      for (int i = q + 1; i < n; ++i) {
        if (m.get(n + i, q)) {
          r = i;
          break;
        }
      }
      do_op(Gate::cnot(r, q));
    }
    for (int r = q + 1; r < n; ++r) {
      if (m.get(n + r, q)) do_op(Gate::cnot(q, r));
    }
    // clear the z part of column q, then swap the pivot up
    if (m.get(q, q)) do_op(Gate::s(q));
    for (int r = q + 1; r < n; ++r) {
      if (m.get(r, q)) do_op(Gate::cz(q, r));
    }
    do_op(Gate::h(q));
    // column n+q: x_q entry is already 1 by the symplectic form
    if (!m.get(n + q, n + q)) {
      throw std::logic_error("synthesize: symplectic invariant broken");
    }
    for (int r = q + 1; r < n; ++r) {
      if (m.get(n + r, n + q)) do_op(Gate::cnot(q, r));
    }
    if (m.get(q, n + q)) do_op(Gate::s(q));
    for (int r = q + 1; r < n; ++r) {
      if (m.get(r, n + q)) do_op(Gate::cz(q, r));
    }
  }
  if (!(m == Gf2Matrix::identity(2 * n))) {
    throw std::logic_error("synthesize: elimination did not reach identity");
  }
  std::reverse(ops.begin(), ops.end());
  return Circuit{n, std::move(ops)};
}

/// Rewrite CNOTs as H/CZ/H so the circuit uses Hadamard and controlled-phase
/// gates only. S gates stay: S is the single-qubit phase gate.
inline Circuit rewrite_cnots_to_hcz(const Circuit& c) {
  Circuit out{c.n, {}};
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::CNOT) {
      out.gates.push_back(Gate::h(g.b));
      out.gates.push_back(Gate::cz(g.a, g.b));
      out.gates.push_back(Gate::h(g.b));
    } else {
      out.gates.push_back(g);
    }
  }
  return out;
}

/// Symplectic matrix of the seed offset: maps (z; 0) to (z; G0x z), i.e.
/// [[I, 0], [G0x, I]]. Requires G0x symmetric, the same condition that makes
/// class 0 abelian.
inline Gf2Matrix seed_offset_symplectic(const Gf2Matrix& g0x) {
  if (!g0x.is_symmetric()) {
    throw std::invalid_argument("seed offset needs a symmetric x part");
  }
  const int n = g0x.rows();
  return Gf2Matrix::from_blocks(Gf2Matrix::identity(n), Gf2Matrix::zero(n, n),
                                g0x, Gf2Matrix::identity(n));
}

/// Circuit whose conjugation action realizes the seed offset.
inline Circuit synthesize_seed(const Gf2Matrix& g0x) {
  return synthesize(seed_offset_symplectic(g0x));
}

}  // namespace cymub
