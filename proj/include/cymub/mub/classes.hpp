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
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cymub/ent/partition.hpp"
#include "cymub/gf2/matrix.hpp"
#include "cymub/mub/generator.hpp"
#include "cymub/mub/triple.hpp"
#include "cymub/pauli/pauli.hpp"

namespace cymub {

/// One commuting class: its generator matrix G_j (2n x n) and the 2^n - 1
/// nonzero vectors {G_j c}.
struct MubClass {
  int j = 0;
  Gf2Matrix Gj{1, 1};
  std::vector<SymplecticVector> elements;

  int qubits() const { return Gj.cols(); }

  /// Column k of G_j as a symplectic vector (class generator element).
  SymplecticVector generator_element(int k) const {
    return SymplecticVector::from_vec(Gj.column(k));
  }
};

/// Abelian test for a generator matrix: Gz^T Gx symmetric mod 2, equivalent
/// to all pairwise symplectic products vanishing.
inline bool class_is_abelian(const Gf2Matrix& gj) {
  const int n = gj.cols();
  const Gf2Matrix gz = gj.submatrix(0, 0, n, n);
  const Gf2Matrix gx = gj.submatrix(n, 0, n, n);
  return (gz.transpose() * gx).is_symmetric();
}

/// A complete cyclic family: generator, the d+1 classes, and classification
/// metadata. structure is filled by the entanglement pass.
struct CyclicMubSet {
  CyclicGenerator generator;
  std::vector<MubClass> classes;
  SetType set_type = SetType::Explicit;
  std::optional<StructureVector> structure;
  std::vector<QubitPartition> partitions;  // per class, when computed

  int qubits() const { return generator.n; }
  int dimension() const { return 1 << generator.n; }
};

/// Enumerate the d+1 classes G_j = C^j G_0 with all nonzero elements.
/// Throws when some G_j is rank deficient, naming j.
inline CyclicMubSet build_classes(const CyclicGenerator& g) {
  const int n = g.n;
  const int d = 1 << n;
  CyclicMubSet set{g, {}, SetType::Explicit, std::nullopt, {}};
  if (g.triple) {
    try {
      set.set_type = classify_set_type(*g.triple);
    } catch (const UnclassifiedTripleError&) {
      set.set_type = SetType::Explicit;
    }
  }
  Gf2Matrix power = Gf2Matrix::identity(2 * n);
  for (int j = 0; j <= d; ++j) {
    MubClass cls;
    cls.j = j;
    cls.Gj = power * g.G0;
    if (cls.Gj.rank() != n) {
      throw std::runtime_error("class generator G_" + std::to_string(j) +
                               " is rank deficient");
    }
    cls.elements.reserve(d - 1);
    for (int c = 1; c < d; ++c) {
      cls.elements.push_back(SymplecticVector::from_vec(
          cls.Gj * Gf2Vec(n, std::uint64_t(c))));
    }
    set.classes.push_back(std::move(cls));
    power = power * g.C;
  }
  return set;
}

/// Partition validation: the combinatorial certificate that the classes form
/// a complete MUB set.
struct PartitionReport {
  struct Entry {
    std::string condition;
    bool passed;
    std::string detail;
  };
  std::vector<Entry> entries;

  bool valid() const {
    for (const auto& e : entries)
      if (!e.passed) return false;
    return true;
  }

  std::string summary() const {
    std::string s;
    for (const auto& e : entries) {
      s += (e.passed ? "[ok]   " : "[FAIL] ") + e.condition;
      if (!e.detail.empty()) s += " (" + e.detail + ")";
      s += '\n';
    }
    return s;
  }
};

/// Checks (i) every class abelian, (ii) every class rank n, (iii) pairwise
/// trivial intersection of class spans, (iv) the union covers all d^2 - 1
/// nonzero vectors.
inline PartitionReport validate_mub_partition(const CyclicMubSet& s) {
  PartitionReport rep;
  const int n = s.qubits();
  const int d = s.dimension();

  std::string bad;
  for (const auto& c : s.classes) {
    if (!class_is_abelian(c.Gj)) bad += (bad.empty() ? "" : ",") + std::to_string(c.j);
  }
  rep.entries.push_back({"every class abelian", bad.empty(),
                         bad.empty() ? "" : "non-commuting classes: " + bad});

  bad.clear();
  for (const auto& c : s.classes) {
    if (c.Gj.rank() != n) bad += (bad.empty() ? "" : ",") + std::to_string(c.j);
  }
  rep.entries.push_back({"every class rank n", bad.empty(),
                         bad.empty() ? "" : "rank-deficient classes: " + bad});

  bad.clear();
  for (std::size_t a = 0; a < s.classes.size() && bad.empty(); ++a) {
    for (std::size_t b = a + 1; b < s.classes.size(); ++b) {
      if (s.classes[a].Gj.hstack(s.classes[b].Gj).rank() != 2 * n) {
        bad = std::to_string(a) + " and " + std::to_string(b);
        break;
      }
    }
  }
  rep.entries.push_back({"classes intersect only in zero", bad.empty(),
                         bad.empty() ? "" : "overlapping classes " + bad});

  std::set<std::uint64_t> seen;
  for (const auto& c : s.classes)
    for (const auto& e : c.elements) seen.insert(e.bits);
  const int want = d * d - 1;
  rep.entries.push_back(
      {"union covers all nonzero vectors", int(seen.size()) == want,
       std::to_string(seen.size()) + " of " + std::to_string(want)});
  return rep;
}

}  // namespace cymub
