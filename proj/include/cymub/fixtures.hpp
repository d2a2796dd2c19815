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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cymub/gf2/matrix.hpp"
#include "cymub/mub/generator.hpp"
#include "cymub/mub/triple.hpp"

namespace cymub {

/// Bundled reference generators for three qubits plus the two-qubit field
/// case. These reproduce published reference matrices digit for digit.
///
/// Note on semigroup3: its A matrix is not symmetric, so the triple fails
/// validation and the resulting C (reproduced exactly by build_C) is not
/// symplectic; the classes it generates do not commute and no complete MUB
/// set arises. semigroup3fix is the one-bit correction (A[1][0] = 0, the only
/// symmetrization that stays a semigroup triple); it is fully valid with
/// entanglement structure (1,6,2).
struct Fixture {
  std::string name;
  int n;
  std::optional<GeneratorTriple> triple;
  std::optional<Gf2Matrix> explicit_c;
  Gf2Matrix g0x;
  std::string note;

  CyclicGenerator generator() const {
    if (triple) {
      return g0x.is_zero() ? make_generator(*triple)
                           : make_generator(*triple, g0x);
    }
    return make_explicit_generator(*explicit_c, g0x);
  }
};

inline const std::vector<Fixture>& all_fixtures() {
  static const std::vector<Fixture> fixtures = [] {
    std::vector<Fixture> v;

    v.push_back(Fixture{
        "field2", 2,
        GeneratorTriple(Gf2Matrix{{1, 1}, {1, 0}}, Gf2Matrix::identity(2),
                        Gf2Matrix::zero(2, 2)),
        std::nullopt, Gf2Matrix::zero(2, 2),
        "two-qubit field-based set (5 bases)"});

    v.push_back(Fixture{
        "field3", 3,
        GeneratorTriple(Gf2Matrix{{1, 1, 1}, {1, 1, 0}, {1, 0, 0}},
                        Gf2Matrix::identity(3), Gf2Matrix::zero(3, 3)),
        std::nullopt, Gf2Matrix::zero(3, 3),
        "three-qubit field-based set, structure (3,0,6)"});

    v.push_back(Fixture{
        "group3", 3,
        GeneratorTriple(Gf2Matrix{{0, 1, 1}, {0, 0, 1}, {1, 0, 0}},
                        Gf2Matrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}},
                        Gf2Matrix::zero(3, 3)),
        std::nullopt, Gf2Matrix::zero(3, 3),
        "three-qubit group-based set, structure (2,3,4)"});

    v.push_back(Fixture{
        "semigroup3", 3,
        GeneratorTriple(Gf2Matrix{{1, 1, 1}, {1, 1, 0}, {1, 0, 0}},
                        Gf2Matrix{{1, 1, 1}, {1, 1, 0}, {1, 0, 0}},
                        Gf2Matrix{{1, 0, 1}, {1, 1, 0}, {1, 0, 0}}),
        std::nullopt, Gf2Matrix::zero(3, 3),
        "reference semigroup triple as published; A is not symmetric, so "
        "this does not yield a complete MUB set (see semigroup3fix)"});

    v.push_back(Fixture{
        "semigroup3fix", 3,
        GeneratorTriple(Gf2Matrix{{1, 1, 1}, {1, 1, 0}, {1, 0, 0}},
                        Gf2Matrix{{1, 1, 1}, {1, 1, 0}, {1, 0, 0}},
                        Gf2Matrix{{1, 0, 1}, {0, 1, 0}, {1, 0, 0}}),
        std::nullopt, Gf2Matrix::zero(3, 3),
        "semigroup triple with the one-bit symmetric correction of A; "
        "complete set with structure (1,6,2)"});

    v.push_back(Fixture{
        "offset3", 3, std::nullopt,
        Gf2Matrix{{0, 0, 0, 0, 0, 1},
                  {1, 0, 0, 1, 0, 0},
                  {0, 0, 0, 0, 1, 0},
                  {0, 0, 1, 0, 0, 0},
                  {1, 0, 0, 0, 0, 0},
                  {0, 1, 0, 0, 0, 0}},
        Gf2Matrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}},
        "explicit generator with offset seed, structure (0,9,0)"});

    return v;
  }();
  return fixtures;
}

inline const Fixture& get_fixture(const std::string& name) {
  for (const Fixture& f : all_fixtures()) {
    if (f.name == name) return f;
  }
  std::string names;
  for (const Fixture& f : all_fixtures()) {
    names += (names.empty() ? "" : ", ") + f.name;
  }
  throw std::invalid_argument("unknown fixture '" + name +
                              "'; available: " + names);
}

}  // namespace cymub
