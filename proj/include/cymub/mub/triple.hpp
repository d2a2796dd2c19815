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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cymub/gf2/fibonacci.hpp"
#include "cymub/gf2/linalg.hpp"
#include "cymub/gf2/matrix.hpp"

namespace cymub {

/// Input triple (B, R, A) for the cyclic generator construction on n qubits.
struct GeneratorTriple {
  int n;
  Gf2Matrix B;
  Gf2Matrix R;
  Gf2Matrix A;

  GeneratorTriple(Gf2Matrix b, Gf2Matrix r, Gf2Matrix a)
      : n(b.rows()), B(std::move(b)), R(std::move(r)), A(std::move(a)) {
    if (!B.is_square() || !R.is_square() || !A.is_square() ||
        R.rows() != n || A.rows() != n) {
      throw DimensionError("generator triple needs three square matrices of "
                           "one size; got B " +
                           Gf2Matrix::shape_str(B.rows(), B.cols()) + ", R " +
                           Gf2Matrix::shape_str(R.rows(), R.cols()) + ", A " +
                           Gf2Matrix::shape_str(A.rows(), A.cols()));
    }
  }

  friend bool operator==(const GeneratorTriple&, const GeneratorTriple&) =
      default;
};

/// Per-condition validation outcome for a triple.
struct TripleReport {
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

/// Check the generator conditions: R, BR, A symmetric, R invertible, and the
/// Fibonacci index of char_poly(B) equal to 2^n + 1. Failures are report
/// entries, never exceptions.
inline TripleReport validate_triple(const GeneratorTriple& t) {
  TripleReport rep;
  rep.entries.push_back({"R symmetric", t.R.is_symmetric(), ""});
  rep.entries.push_back({"B*R symmetric", (t.B * t.R).is_symmetric(), ""});
  rep.entries.push_back({"A symmetric", t.A.is_symmetric(), ""});
  rep.entries.push_back({"R invertible", t.R.rank() == t.n,
                         "rank " + std::to_string(t.R.rank())});
  const std::uint64_t want = (std::uint64_t{1} << t.n) + 1;
  std::string detail;
  bool index_ok = false;
  try {
    std::uint64_t idx = fibonacci_index(char_poly(t.B));
    index_ok = idx == want;
    detail = "index " + std::to_string(idx) + ", want " + std::to_string(want);
  } catch (const FibonacciIndexError& e) {
    detail = e.what();
  }
  rep.entries.push_back(
      {"fibonacci_index(char_poly(B)) == 2^n + 1", index_ok, detail});
  return rep;
}

enum class SetType { Field, Group, Semigroup, Explicit };

inline std::string set_type_name(SetType t) {
  switch (t) {
    case SetType::Field: return "field";
    case SetType::Group: return "group";
    case SetType::Semigroup: return "semigroup";
    case SetType::Explicit: return "explicit";
  }
  return "?";
}

/// Thrown for A != 0 triples that fail the semigroup condition; no name
/// exists for that case.
class UnclassifiedTripleError : public std::runtime_error {
 public:
  UnclassifiedTripleError()
      : std::runtime_error(
            "unclassified triple: A is nonzero but equals some q(B)*R plus a "
            "diagonal matrix") {}
};

/// field: A = 0 and R is a polynomial in B. group: A = 0 and R is not.
/// semigroup: A != 0 and no q(B)*R + diagonal reproduces A.
inline SetType classify_set_type(const GeneratorTriple& t) {
  if (t.A.is_zero()) {
    return in_polynomial_span(t.R, t.B) ? SetType::Field : SetType::Group;
  }
  if (semigroup_a_condition(t.A, t.B, t.R)) return SetType::Semigroup;
  throw UnclassifiedTripleError();
}

}  // namespace cymub
