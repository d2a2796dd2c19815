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
#include <stdexcept>
#include <string>

#include "cymub/gf2/matrix.hpp"

namespace cymub {

/// A length-2n bit vector (z_1..z_n; x_1..x_n): all z components first.
/// This layout is fixed project-wide; the symplectic matrices act on it.
struct SymplecticVector {
  int n = 0;
  std::uint64_t bits = 0;  // bit i = z_i for i < n, bit n+i = x_i

  SymplecticVector() = default;
  SymplecticVector(int qubits, std::uint64_t b)
      : n(qubits), bits(b & Gf2Vec::mask(2 * qubits)) {}

  static SymplecticVector from_vec(const Gf2Vec& v) {
    if (v.len % 2 != 0) {
      throw std::invalid_argument("symplectic vector length must be even, got " +
                                  std::to_string(v.len));
    }
    return SymplecticVector(v.len / 2, v.bits);
  }

  Gf2Vec as_vec() const { return Gf2Vec(2 * n, bits); }

  int z(int i) const { return int((bits >> i) & 1); }
  int x(int i) const { return int((bits >> (n + i)) & 1); }
  std::uint64_t z_bits() const { return bits & Gf2Vec::mask(n); }
  std::uint64_t x_bits() const { return (bits >> n) & Gf2Vec::mask(n); }
  bool is_zero() const { return bits == 0; }

  friend bool operator==(const SymplecticVector&, const SymplecticVector&) =
      default;
  friend auto operator<=>(const SymplecticVector&, const SymplecticVector&) =
      default;
};

/// n-qubit generalized Pauli operator: per-qubit sigma_z^z sigma_x^x factors
/// with a global phase i^phase_exp. The canonical (Hermitian) operator folds
/// the per-qubit factor (-i)^{z_i x_i} into phase_exp.
struct PauliOp {
  int n = 0;
  std::uint64_t zbits = 0;
  std::uint64_t xbits = 0;
  int phase_exp = 0;  // mod 4, exponent of global i

  bool is_identity() const { return zbits == 0 && xbits == 0 && phase_exp == 0; }

  friend bool operator==(const PauliOp&, const PauliOp&) = default;
};

/// Canonical Hermitian Pauli operator for a symplectic vector.
inline PauliOp zx_from_vector(const SymplecticVector& a) {
  PauliOp p;
  p.n = a.n;
  p.zbits = a.z_bits();
  p.xbits = a.x_bits();
  // one factor of -i = i^3 per qubit carrying both z and x
  int ys = std::popcount(p.zbits & p.xbits);
  p.phase_exp = (3 * ys) % 4;
  return p;
}

inline PauliOp zx_from_vector(const Gf2Vec& v) {
  return zx_from_vector(SymplecticVector::from_vec(v));
}

/// Symplectic inner product a^z.b^x + a^x.b^z mod 2. Zero iff the canonical
/// operators commute.
inline int symplectic_product(const SymplecticVector& a,
                              const SymplecticVector& b) {
  if (a.n != b.n) {
    throw std::invalid_argument("symplectic_product length mismatch: " +
                                std::to_string(2 * a.n) + " vs " +
                                std::to_string(2 * b.n));
  }
  std::uint64_t acc = (a.z_bits() & b.x_bits()) ^ (a.x_bits() & b.z_bits());
  return std::popcount(acc) & 1;
}

/// Per-qubit anticommutation indicator; component i is
/// a^z_i b^x_i + a^x_i b^z_i. Its overall parity equals symplectic_product.
inline Gf2Vec qubitwise_commutation_vector(const SymplecticVector& a,
                                           const SymplecticVector& b) {
  if (a.n != b.n) {
    throw std::invalid_argument(
        "qubitwise_commutation_vector length mismatch: " +
        std::to_string(2 * a.n) + " vs " + std::to_string(2 * b.n));
  }
  std::uint64_t acc = (a.z_bits() & b.x_bits()) ^ (a.x_bits() & b.z_bits());
  return Gf2Vec(a.n, acc);
}

/// Exact operator product. A PauliOp denotes i^phase_exp * (x) sigma_z^z
/// sigma_x^x per qubit; commuting sigma_x^{a.x} past sigma_z^{b.z} costs
/// (-1)^{a.x b.z} per qubit and squares vanish without phase.
inline PauliOp multiply(const PauliOp& a, const PauliOp& b) {
  if (a.n != b.n) {
    throw std::invalid_argument("PauliOp product needs equal qubit counts");
  }
  PauliOp r;
  r.n = a.n;
  r.zbits = a.zbits ^ b.zbits;
  r.xbits = a.xbits ^ b.xbits;
  int k = a.phase_exp + b.phase_exp + 2 * std::popcount(a.xbits & b.zbits);
  r.phase_exp = k % 4;
  return r;
}

/// Label over {I,X,Y,Z}, qubit 1 first, with an optional leading phase tag
/// ("i", "-", "-i") for non-canonical phases. Canonical operators print bare.
inline std::string to_label(const PauliOp& p) {
  PauliOp canon = zx_from_vector(SymplecticVector(
      p.n, (p.zbits & Gf2Vec::mask(p.n)) |
               ((p.xbits & Gf2Vec::mask(p.n)) << p.n)));
  int extra = ((p.phase_exp - canon.phase_exp) % 4 + 4) % 4;
  std::string s;
  switch (extra) {
    case 0: break;
    case 1: s += "i"; break;
    case 2: s += "-"; break;
    case 3: s += "-i"; break;
  }
  for (int i = 0; i < p.n; ++i) {
    int z = int((p.zbits >> i) & 1), x = int((p.xbits >> i) & 1);
    s += z ? (x ? 'Y' : 'Z') : (x ? 'X' : 'I');
  }
  return s;
}

/// Parse a label back into a canonical-phase PauliOp (plus phase tag).
inline PauliOp parse_label(const std::string& label) {
  std::size_t pos = 0;
  int extra = 0;
  if (pos < label.size() && label[pos] == '-') {
    extra = 2;
    ++pos;
  }
  if (pos < label.size() && label[pos] == 'i') {
    extra += 1;
    ++pos;
  }
  std::uint64_t z = 0, x = 0;
  int n = 0;
  for (; pos < label.size(); ++pos, ++n) {
    switch (label[pos]) {
      case 'I': break;
      case 'Z': z |= std::uint64_t{1} << n; break;
      case 'X': x |= std::uint64_t{1} << n; break;
      case 'Y':
        z |= std::uint64_t{1} << n;
        x |= std::uint64_t{1} << n;
        break;
      default:
        throw std::invalid_argument("bad Pauli label: " + label);
    }
  }
  if (n == 0) throw std::invalid_argument("empty Pauli label");
  PauliOp p = zx_from_vector(SymplecticVector(n, z | (x << n)));
  p.phase_exp = (p.phase_exp + extra) % 4;
  return p;
}

}  // namespace cymub
