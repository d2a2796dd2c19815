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

#include <cmath>
#include <string>

#include "cymub/mub/classes.hpp"
#include "cymub/num/cmatrix.hpp"
#include "cymub/sim/unitary.hpp"
#include "cymub/synth/synthesize.hpp"

namespace cymub {

struct CheckReport {
  std::string check;
  bool passed = false;
  double worst_deviation = 0.0;
  std::string witness;
};

constexpr double kUnitaryTol = 1e-10;
constexpr double kUnbiasedTol = 1e-9;

/// Flatness of W-dagger U^m W for m = 1..d: every entry must have squared
/// magnitude 1/d. This certifies pairwise unbiasedness of the d+1 bases
/// U^j W (computational basis), since those products realize every
/// cross-basis overlap.
inline CheckReport verify_unbiased(const CMatrix& u, const CMatrix& w, int d,
                                   double tol = kUnbiasedTol) {
  CheckReport rep{"unbiasedness", true, 0.0, ""};
  const double want = 1.0 / d;
  const CMatrix wd = w.adjoint();
  CMatrix upow = CMatrix::identity(u.rows());
  for (int m = 1; m <= d; ++m) {
    upow = upow * u;
    CMatrix v = wd * upow * w;
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        double dev = std::abs(std::norm(v(i, j)) - want);
        if (dev > rep.worst_deviation) {
          rep.worst_deviation = dev;
          rep.witness = "m=" + std::to_string(m) + " entry (" +
                        std::to_string(i) + "," + std::to_string(j) + ")";
        }
      }
    }
  }
  rep.passed = rep.worst_deviation < tol;
  return rep;
}

/// U^{d+1} proportional to the identity: off-diagonal magnitudes below tol
/// and all diagonal entries equal within tol.
inline CheckReport verify_cyclic_report(const CMatrix& u, int d,
                                        double tol = kUnbiasedTol) {
  CheckReport rep{"cyclicity", true, 0.0, ""};
  CMatrix p = u.pow(d + 1);
  for (int i = 0; i < p.rows(); ++i) {
    for (int j = 0; j < p.cols(); ++j) {
      double dev = i == j ? std::abs(p(i, j) - p(0, 0)) : std::abs(p(i, j));
      if (dev > rep.worst_deviation) {
        rep.worst_deviation = dev;
        rep.witness = "entry (" + std::to_string(i) + "," + std::to_string(j) +
                      ") of U^" + std::to_string(d + 1);
      }
    }
  }
  rep.passed = rep.worst_deviation < tol;
  return rep;
}

inline bool verify_cyclic(const CMatrix& u, int d, double tol = kUnbiasedTol) {
  return verify_cyclic_report(u, d, tol).passed;
}

/// Generator unitary U and seed unitary W for a set, via synthesis. Throws
/// NotSymplecticError when the generator C admits no Clifford circuit.
struct MubUnitaries {
  CMatrix u;
  CMatrix w;
};

inline MubUnitaries mub_unitaries(const CyclicMubSet& s) {
  const CMatrix u = circuit_unitary(synthesize(s.generator.C));
  const Gf2Matrix g0x = s.generator.seed_x_part();
  CMatrix w = g0x.is_zero() ? CMatrix::identity(s.dimension())
                            : circuit_unitary(synthesize_seed(g0x));
  return {u, w};
}

}  // namespace cymub
