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

#include "cymub/num/cmatrix.hpp"
#include "cymub/synth/circuit.hpp"

namespace cymub {

// Gate matrices use the standard conventions: H = (1/sqrt2)[[1,1],[1,-1]],
// S = diag(1, i), CZ = diag(1,1,1,-1), CNOT the usual permutation. Qubit 0 is
// the most significant index bit, matching the Pauli tensor order.

/// Dense unitary of one gate embedded on n qubits.
inline CMatrix gate_unitary(const Gate& g, int n) {
  check_gate(g, n);
  const int d = 1 << n;
  CMatrix u(d, d);
  auto bit = [n](int state, int q) { return (state >> (n - 1 - q)) & 1; };
  switch (g.kind) {
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      for (int s = 0; s < d; ++s) {
        int flip = s ^ (1 << (n - 1 - g.a));
        u(s, s) += bit(s, g.a) ? -r : r;
        u(flip, s) += r;
      }
      break;
    }
    case GateKind::S:
      for (int s = 0; s < d; ++s) u(s, s) = bit(s, g.a) ? cplx(0, 1) : cplx(1, 0);
      break;
    case GateKind::CZ:
      for (int s = 0; s < d; ++s)
        u(s, s) = (bit(s, g.a) && bit(s, g.b)) ? -1.0 : 1.0;
      break;
    case GateKind::CNOT:
      for (int s = 0; s < d; ++s) {
        int t = bit(s, g.a) ? s ^ (1 << (n - 1 - g.b)) : s;
        u(t, s) = 1.0;
      }
      break;
  }
  return u;
}

/// Product of the gate unitaries in application order (first gate acts
/// first). Dense simulation, limited to n <= 10.
inline CMatrix circuit_unitary(const Circuit& c) {
  if (c.n > 10) {
    throw std::invalid_argument("circuit_unitary supports at most 10 qubits");
  }
  CMatrix u = CMatrix::identity(1 << c.n);
  for (const Gate& g : c.gates) u = gate_unitary(g, c.n) * u;
  return u;
}

}  // namespace cymub
