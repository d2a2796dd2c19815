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
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cymub {

/// Partition of qubits {0..n-1} into disjoint blocks covering all of them.
/// Canonical form: each block ascending, blocks ordered by smallest element.
struct QubitPartition {
  int n = 0;
  std::vector<std::vector<int>> blocks;

  void canonicalize() {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
  }

  /// Multiset of block sizes, ascending. The partition shape.
  std::vector<int> shape() const {
    std::vector<int> s;
    s.reserve(blocks.size());
    for (const auto& b : blocks) s.push_back(int(b.size()));
    std::sort(s.begin(), s.end());
    return s;
  }

  /// "1|23" style rendering with 1-based qubit labels.
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (i) s += '|';
      for (int q : blocks[i]) s += std::to_string(q + 1);
    }
    return s;
  }

  friend bool operator==(const QubitPartition&, const QubitPartition&) = default;
};

/// All set partitions of {0..n-1} via restricted growth strings.
/// Bell(10) = 115975, well within reach; larger n is out of scope.
inline std::vector<QubitPartition> all_set_partitions(int n) {
  if (n < 1 || n > 12) {
    throw std::invalid_argument("set partition enumeration supports 1..12");
  }
  std::vector<QubitPartition> out;
  std::vector<int> rgs(n, 0);
  auto emit = [&]() {
    int nblocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    QubitPartition p;
    p.n = n;
    p.blocks.assign(nblocks, {});
    for (int i = 0; i < n; ++i) p.blocks[rgs[i]].push_back(i);
    out.push_back(std::move(p));
  };
  auto rec = [&](auto&& self, int i, int maxv) -> void {
    if (i == n) {
      emit();
      return;
    }
    for (int v = 0; v <= maxv + 1; ++v) {
      rgs[i] = v;
      self(self, i + 1, std::max(maxv, v));
    }
  };
  rec(rec, 1, 0);
  return out;
}

/// Integer partitions of n (the possible shapes), ordered from fully
/// factorizable to fully entangled: descending block count, ties broken by
/// comparing the descending-sorted sizes lexicographically. For n = 4 that
/// gives [1,1,1,1], [1,1,2], [2,2], [1,3], [4].
inline std::vector<std::vector<int>> all_shapes(int n) {
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      parts.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  // each entry is descending at this point; order, then normalize ascending
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  for (auto& p : parts) std::sort(p.begin(), p.end());
  return parts;
}

inline int shape_index(const std::vector<int>& shape, int n) {
  const auto shapes = all_shapes(n);
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    if (shapes[i] == shape) return int(i);
  }
  throw std::invalid_argument("not a shape of " + std::to_string(n));
}

/// Histogram of class shapes, indexed by the all_shapes(n) order; for a
/// complete set the counts sum to d + 1.
struct StructureVector {
  int n = 0;
  std::vector<int> counts;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(counts[i]);
    }
    return s + ")";
  }

  friend bool operator==(const StructureVector&, const StructureVector&) =
      default;
};

}  // namespace cymub
