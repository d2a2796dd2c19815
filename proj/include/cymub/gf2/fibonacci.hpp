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

#include "cymub/gf2/poly.hpp"

namespace cymub {

/// Thrown when the Fibonacci index search exceeds its bound.
class FibonacciIndexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fibonacci polynomial F_j over Z2: F_0 = 0, F_1 = 1,
/// F_{j+1} = x*F_j + F_{j-1}, coefficients reduced mod 2 at every step.
inline Gf2Poly fibonacci_poly(int j) {
  if (j < 0) throw std::invalid_argument("fibonacci_poly: j must be >= 0");
  Gf2Poly prev = Gf2Poly::zero();
  Gf2Poly cur = Gf2Poly::one();
  if (j == 0) return prev;
  const Gf2Poly x = Gf2Poly::x();
  for (int k = 1; k < j; ++k) {
    Gf2Poly next = x * cur + prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// F_{j-1}, F_j, F_{j+1} as one struct; valid for j >= 0 with the backward
/// extension F_{-1} = 1 (from F_1 = x*F_0 + F_{-1}).
struct FibonacciTriplet {
  Gf2Poly below;   // F_{j-1}
  Gf2Poly at;      // F_j
  Gf2Poly above;   // F_{j+1}
};

inline FibonacciTriplet fibonacci_triplet(int j) {
  if (j < 0) throw std::invalid_argument("fibonacci_triplet: j must be >= 0");
  if (j == 0) return {Gf2Poly::one(), Gf2Poly::zero(), Gf2Poly::one()};
  FibonacciTriplet t{fibonacci_poly(j - 1), fibonacci_poly(j),
                     fibonacci_poly(j + 1)};
  return t;
}

inline std::uint64_t fibonacci_index_default_bound(const Gf2Poly& p) {
  return std::uint64_t{1} << (*p.degree() + 2);
}

/// Smallest j >= 1 with p | F_j. Runs the recurrence in the residue ring
/// mod p (each step is one long-division reduction), so only remainders of
/// degree < deg(p) are ever held.
inline std::uint64_t fibonacci_index(const Gf2Poly& p, std::uint64_t bound) {
  if (p.is_zero() || *p.degree() < 1) {
    throw std::invalid_argument(
        "fibonacci_index requires a polynomial of degree >= 1");
  }
  Gf2Poly prev = Gf2Poly::zero();  // F_0 mod p
  Gf2Poly cur = Gf2Poly::one();    // F_1 mod p
  for (std::uint64_t j = 1; j <= bound; ++j) {
    if (cur.is_zero()) return j;
    Gf2Poly next = cur;
    next.mulx_mod(p);
    next = next + prev;
    prev = cur;
    cur = next;
  }
  throw FibonacciIndexError("Fibonacci index of " + p.to_string() +
                            " not found below bound " + std::to_string(bound));
}

inline std::uint64_t fibonacci_index(const Gf2Poly& p) {
  if (p.is_zero() || *p.degree() < 1) {
    throw std::invalid_argument(
        "fibonacci_index requires a polynomial of degree >= 1");
  }
  return fibonacci_index(p, fibonacci_index_default_bound(p));
}

}  // namespace cymub
