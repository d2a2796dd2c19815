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
#include <vector>

#include "cymub/ent/partition.hpp"
#include "cymub/mub/classes.hpp"
#include "cymub/pauli/pauli.hpp"

namespace cymub {

class NonAbelianClassError : public std::runtime_error {
 public:
  explicit NonAbelianClassError(int j)
      : std::runtime_error("class " + std::to_string(j) +
                           " is not abelian; no entanglement structure") {}
};

/// Ambiguity error: more than one valid partition at the maximal block count.
/// Carries every candidate so the state-level oracle can arbitrate.
class AmbiguousPartitionError : public std::runtime_error {
 public:
  AmbiguousPartitionError(int j, std::vector<QubitPartition> cands)
      : std::runtime_error("finest partition of class " + std::to_string(j) +
                           " is not unique (" +
                           std::to_string(cands.size()) + " candidates)"),
        candidates(std::move(cands)) {}
  std::vector<QubitPartition> candidates;
};

/// Qubitwise commutation vectors for every unordered pair of generator
/// columns. Bilinearity of the per-qubit form makes generator pairs
/// sufficient for all class-element pairs. Each vector has even total weight
/// because the class commutes as a whole.
inline std::vector<Gf2Vec> class_constraints(const MubClass& c) {
  if (!class_is_abelian(c.Gj)) throw NonAbelianClassError(c.j);
  const int n = c.qubits();
  std::vector<Gf2Vec> out;
  out.reserve(n * (n - 1) / 2);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      out.push_back(qubitwise_commutation_vector(c.generator_element(a),
                                                 c.generator_element(b)));
    }
  }
  return out;
}

/// Finest partition such that every constraint vector has even weight inside
/// every block. All set partitions are enumerated and filtered; among the
/// valid ones the unique maximum-block-count partition is returned, and a
/// tie raises AmbiguousPartitionError rather than picking one silently.
inline QubitPartition finest_partition(const MubClass& c) {
  const int n = c.qubits();
  const auto constraints = class_constraints(c);
  std::vector<std::uint64_t> vs;
  vs.reserve(constraints.size());
  for (const auto& v : constraints)
    if (v.bits) vs.push_back(v.bits);

  std::vector<QubitPartition> best;
  std::size_t best_blocks = 0;
  for (auto& p : all_set_partitions(n)) {
    if (p.blocks.size() < best_blocks) continue;
    bool ok = true;
    for (const auto& blk : p.blocks) {
      std::uint64_t mask = 0;
      for (int q : blk) mask |= std::uint64_t{1} << q;
      for (std::uint64_t v : vs) {
        if (std::popcount(v & mask) & 1) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (!ok) continue;
    if (p.blocks.size() > best_blocks) {
      best_blocks = p.blocks.size();
      best.clear();
    }
    best.push_back(std::move(p));
  }
  if (best.size() != 1) throw AmbiguousPartitionError(c.j, best);
  best[0].canonicalize();
  return best[0];
}

/// Per-class finest partitions plus the shape histogram of a complete set.
struct StructureAnalysis {
  std::vector<QubitPartition> per_class;
  StructureVector vec;
};

inline StructureAnalysis analyze_structure(const CyclicMubSet& s) {
  const int n = s.qubits();
  StructureAnalysis out;
  out.vec.n = n;
  out.vec.counts.assign(all_shapes(n).size(), 0);
  for (const auto& c : s.classes) {
    QubitPartition p = finest_partition(c);
    out.vec.counts[shape_index(p.shape(), n)] += 1;
    out.per_class.push_back(std::move(p));
  }
  return out;
}

inline StructureVector structure_vector(const CyclicMubSet& s) {
  return analyze_structure(s).vec;
}

/// Annotate a set in place with partitions and the structure vector.
inline void fill_structure(CyclicMubSet& s) {
  StructureAnalysis a = analyze_structure(s);
  s.partitions = std::move(a.per_class);
  s.structure = std::move(a.vec);
}

}  // namespace cymub
