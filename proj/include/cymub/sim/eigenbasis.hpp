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
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cymub/ent/partition.hpp"
#include "cymub/mub/classes.hpp"
#include "cymub/num/cmatrix.hpp"
#include "cymub/pauli/dense.hpp"

namespace cymub {

constexpr double kSingularTol = 1e-8;

/// Common eigenbasis of an abelian rank-n class from the projector products
/// prod_k (I +- O_k)/2 over all 2^n sign patterns (bit k of the pattern
/// selects the sign of generator k; 0 means +). Each projector must have
/// rank one; its dominant column is the eigenvector.
inline std::vector<std::vector<cplx>> class_eigenbasis(const MubClass& c) {
  const int n = c.qubits();
  if (n > 6) {
    throw std::invalid_argument("class_eigenbasis supports at most 6 qubits");
  }
  if (!class_is_abelian(c.Gj)) {
    throw std::invalid_argument("class " + std::to_string(c.j) +
                                " is not abelian; no common eigenbasis");
  }
  const int d = 1 << n;
  std::vector<CMatrix> ops;
  ops.reserve(n);
  for (int k = 0; k < n; ++k) {
    ops.push_back(dense_matrix(zx_from_vector(c.generator_element(k))));
  }
  std::vector<std::vector<cplx>> basis;
  basis.reserve(d);
  const CMatrix id = CMatrix::identity(d);
  for (int pattern = 0; pattern < d; ++pattern) {
    CMatrix p = id;
    for (int k = 0; k < n; ++k) {
      const double sign = ((pattern >> k) & 1) ? -1.0 : 1.0;
      p = p * ((id + ops[k] * sign) * 0.5);
    }
    if (std::abs(p.trace() - cplx(1.0, 0.0)) > 1e-9) {
      throw std::runtime_error("projector rank != 1 for sign pattern " +
                               std::to_string(pattern));
    }
    int best = 0;
    double bestn = -1;
    for (int j = 0; j < d; ++j) {
      double s = 0;
      for (int i = 0; i < d; ++i) s += std::norm(p(i, j));
      if (s > bestn) {
        bestn = s;
        best = j;
      }
    }
    std::vector<cplx> v = p.column(best);
    double nv = vec_norm(v);
    for (auto& x : v) x /= nv;
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Schmidt residual across the bipartition (mask, complement): the Frobenius
/// mass outside the top singular value of the reshaped amplitude matrix.
/// Zero (below kSingularTol) iff the state is a product across the cut.
inline double bipartition_residual(const std::vector<cplx>& state, int n,
                                   std::uint32_t mask) {
  std::vector<int> left, right;
  for (int q = 0; q < n; ++q) {
    if ((mask >> q) & 1) {
      left.push_back(q);
    } else {
      right.push_back(q);
    }
  }
  CMatrix m(1 << left.size(), 1 << right.size());
  for (int idx = 0; idx < (1 << n); ++idx) {
    int r = 0, ccol = 0;
    for (std::size_t k = 0; k < left.size(); ++k) {
      r |= ((idx >> (n - 1 - left[k])) & 1) << (left.size() - 1 - k);
    }
    for (std::size_t k = 0; k < right.size(); ++k) {
      ccol |= ((idx >> (n - 1 - right[k])) & 1) << (right.size() - 1 - k);
    }
    m(r, ccol) = state[idx];
  }
  double total = 0;
  for (const auto& x : state) total += std::norm(x);
  double top = gram_top_eigenvalue(m);
  return std::sqrt(std::max(0.0, total - top));
}

/// Finest partition across which the state is a tensor product. Separable
/// bipartitions are detected by Schmidt rank-1 tests; the block of qubit q is
/// the meet of all separable sides containing q (pure-state separability is
/// intersection-closed).
inline QubitPartition schmidt_shape(const std::vector<cplx>& state, int n) {
  if (n > 6) {
    throw std::invalid_argument("schmidt_shape supports at most 6 qubits");
  }
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint32_t> separable;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    if (bipartition_residual(state, n, mask) < kSingularTol) {
      separable.push_back(mask);
    }
  }
  std::vector<std::uint32_t> blocks(n);
  for (int q = 0; q < n; ++q) {
    std::uint32_t blk = full;
    for (std::uint32_t s : separable) {
      blk &= ((s >> q) & 1) ? s : (full & ~s);
    }
    blocks[q] = blk;
  }
  QubitPartition p;
  p.n = n;
  for (int q = 0; q < n; ++q) {
    if (int(std::countr_zero(blocks[q])) == q) {  // q is its block's minimum
      std::vector<int> members;
      for (int r = 0; r < n; ++r) {
        if ((blocks[q] >> r) & 1) members.push_back(r);
      }
      p.blocks.push_back(std::move(members));
    }
  }
  p.canonicalize();
  int covered = 0;
  for (const auto& b : p.blocks) covered += int(b.size());
  if (covered != n) {
    throw std::runtime_error("schmidt_shape: separable cuts are inconsistent");
  }
  return p;
}

/// Common schmidt_shape of all eigenvectors of a class; throws if they
/// disagree (they never should for stabilizer eigenbases).
inline QubitPartition class_schmidt_partition(const MubClass& c) {
  const auto basis = class_eigenbasis(c);
  QubitPartition first = schmidt_shape(basis[0], c.qubits());
  for (std::size_t i = 1; i < basis.size(); ++i) {
    if (!(schmidt_shape(basis[i], c.qubits()) == first)) {
      throw std::runtime_error(
          "eigenvectors of one class have differing factorizations");
    }
  }
  return first;
}

}  // namespace cymub
