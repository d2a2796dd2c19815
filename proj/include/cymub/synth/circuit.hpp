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

#include <stdexcept>
#include <string>
#include <vector>

#include "cymub/gf2/matrix.hpp"

namespace cymub {

enum class GateKind { H, S, CZ, CNOT };

inline std::string gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::CZ: return "CZ";
    case GateKind::CNOT: return "CNOT";
  }
  return "?";
}

/// One gate. H and S use qubit a; CNOT is (control a, target b); CZ is the
/// unordered pair {a, b}, stored with a < b.
struct Gate {
  GateKind kind;
  int a = 0;
  int b = -1;

  static Gate h(int q) { return {GateKind::H, q, -1}; }
  static Gate s(int q) { return {GateKind::S, q, -1}; }
  static Gate cz(int p, int q) {
    return {GateKind::CZ, std::min(p, q), std::max(p, q)};
  }
  static Gate cnot(int control, int target) {
    return {GateKind::CNOT, control, target};
  }

  bool two_qubit() const { return kind == GateKind::CZ || kind == GateKind::CNOT; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Gate list applied left to right in time.
struct Circuit {
  int n = 0;
  std::vector<Gate> gates;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

inline void check_gate(const Gate& g, int n) {
  auto in_range = [n](int q) { return q >= 0 && q < n; };
  if (!in_range(g.a) || (g.two_qubit() && !in_range(g.b))) {
    throw std::invalid_argument("gate qubit out of range for n = " +
                                std::to_string(n));
  }
  if (g.two_qubit() && g.a == g.b) {
    throw std::invalid_argument("two-qubit gate needs distinct qubits");
  }
}

/// Symplectic action on (z; x) columns:
///   H_i swaps z_i and x_i; S_i adds x_i into z_i;
///   CZ_{ij} adds x_j into z_i and x_i into z_j;
///   CNOT_{c->t} adds x_c into x_t and z_t into z_c.
inline Gf2Matrix gate_symplectic(const Gate& g, int n) {
  check_gate(g, n);
  Gf2Matrix m = Gf2Matrix::identity(2 * n);
  switch (g.kind) {
    case GateKind::H:
      m.swap_rows(g.a, n + g.a);
      break;
    case GateKind::S:
      m.set(g.a, n + g.a, 1);
      break;
    case GateKind::CZ:
      m.set(g.a, n + g.b, 1);
      m.set(g.b, n + g.a, 1);
      break;
    case GateKind::CNOT:
      m.set(n + g.b, n + g.a, 1);
      m.set(g.a, g.b, 1);
      break;
  }
  return m;
}

namespace detail {

/// Left-multiply m by the gate's symplectic matrix, in place (row ops).
inline void apply_gate_rows(Gf2Matrix& m, const Gate& g, int n) {
  switch (g.kind) {
    case GateKind::H:
      m.swap_rows(g.a, n + g.a);
      break;
    case GateKind::S:
      m.xor_row(g.a, m.row_word(n + g.a));
      break;
    case GateKind::CZ:
      m.xor_row(g.a, m.row_word(n + g.b));
      m.xor_row(g.b, m.row_word(n + g.a));
      break;
    case GateKind::CNOT:
      m.xor_row(n + g.b, m.row_word(n + g.a));
      m.xor_row(g.a, m.row_word(g.b));
      break;
  }
}

}  // namespace detail

/// Product of the gate matrices in application order: conjugating ZX(a) by
/// the full circuit unitary gives +-ZX(Ma) with M the result.
inline Gf2Matrix circuit_symplectic(const Circuit& c) {
  Gf2Matrix m = Gf2Matrix::identity(2 * c.n);
  for (const Gate& g : c.gates) {
    check_gate(g, c.n);
    detail::apply_gate_rows(m, g, c.n);
  }
  return m;
}

}  // namespace cymub
