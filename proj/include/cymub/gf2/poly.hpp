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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cymub {

/// Polynomial over Z2, coefficients bit-packed ascending by degree.
///
/// The zero polynomial has no degree: degree() returns nullopt rather than a
/// sentinel value.
class Gf2Poly {
 public:
  Gf2Poly() = default;

  static Gf2Poly zero() { return Gf2Poly(); }
  static Gf2Poly one() { return monomial(0); }
  static Gf2Poly x() { return monomial(1); }

  static Gf2Poly monomial(int k) {
    Gf2Poly p;
    p.set_coeff(k, 1);
    return p;
  }

  static Gf2Poly from_coeffs(const std::vector<int>& coeffs) {
    Gf2Poly p;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] & 1) p.set_coeff(int(i), 1);
    }
    return p;
  }

  bool is_zero() const { return words_.empty(); }
  bool is_one() const { return words_.size() == 1 && words_[0] == 1; }

  std::optional<int> degree() const {
    if (words_.empty()) return std::nullopt;
    int top = int(words_.size()) - 1;
    return top * 64 + (63 - std::countl_zero(words_[top]));
  }

  int coeff(int k) const {
    std::size_t w = std::size_t(k) / 64;
    if (w >= words_.size()) return 0;
    return int((words_[w] >> (k % 64)) & 1);
  }

  void set_coeff(int k, int v) {
    std::size_t w = std::size_t(k) / 64;
    if (w >= words_.size()) {
      if (!(v & 1)) return;
      words_.resize(w + 1, 0);
    }
    std::uint64_t bit = std::uint64_t{1} << (k % 64);
    if (v & 1) {
      words_[w] |= bit;
    } else {
      words_[w] &= ~bit;
      trim();
    }
  }

  Gf2Poly operator+(const Gf2Poly& o) const {
    Gf2Poly r = *this;
    if (o.words_.size() > r.words_.size()) r.words_.resize(o.words_.size(), 0);
    for (std::size_t i = 0; i < o.words_.size(); ++i) r.words_[i] ^= o.words_[i];
    r.trim();
    return r;
  }

  Gf2Poly operator*(const Gf2Poly& o) const {
    if (is_zero() || o.is_zero()) return zero();
    Gf2Poly r;
    r.words_.assign(words_.size() + o.words_.size(), 0);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        int b = std::countr_zero(w);
        w &= w - 1;
        r.xor_shifted(o, int(i) * 64 + b);
      }
    }
    r.trim();
    return r;
  }

  /// Quotient and remainder of long division; divisor must be nonzero.
  std::pair<Gf2Poly, Gf2Poly> divmod(const Gf2Poly& divisor) const {
    if (divisor.is_zero()) {
      throw std::invalid_argument("polynomial division by zero");
    }
    Gf2Poly rem = *this;
    Gf2Poly quot;
    const int dd = *divisor.degree();
    while (!rem.is_zero() && *rem.degree() >= dd) {
      int shift = *rem.degree() - dd;
      quot.set_coeff(shift, 1);
      rem.xor_shifted(divisor, shift);
      rem.trim();
    }
    return {quot, rem};
  }

  Gf2Poly operator%(const Gf2Poly& divisor) const {
    return divmod(divisor).second;
  }

  bool divides(const Gf2Poly& other) const {
    return (other % *this).is_zero();
  }

  /// Multiply by x and reduce modulo `mod` in place; degree stays < deg(mod).
  void mulx_mod(const Gf2Poly& mod) {
    shift_up(1);
    int dm = *mod.degree();
    if (!is_zero() && *degree() >= dm) xor_shifted(mod, *degree() - dm);
    trim();
  }

  friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = *degree(); k >= 0; --k) {
      if (!coeff(k)) continue;
      if (!s.empty()) s += " + ";
      if (k == 0) {
        s += "1";
      } else if (k == 1) {
        s += "x";
      } else {
        s += "x^" + std::to_string(k);
      }
    }
    return s;
  }

  std::vector<int> coeff_list() const {
    std::vector<int> out;
    if (is_zero()) return out;
    for (int k = 0; k <= *degree(); ++k) out.push_back(coeff(k));
    return out;
  }

 private:
  void shift_up(int k) {
    if (is_zero() || k == 0) return;
    Gf2Poly shifted;
    shifted.xor_shifted(*this, k);
    *this = shifted;
  }

  void xor_shifted(const Gf2Poly& o, int shift) {
    if (o.is_zero()) return;
    int wordshift = shift / 64, bitshift = shift % 64;
    std::size_t need = o.words_.size() + std::size_t(wordshift) + 1;
    if (words_.size() < need) words_.resize(need, 0);
    for (std::size_t i = 0; i < o.words_.size(); ++i) {
      words_[i + wordshift] ^= o.words_[i] << bitshift;
      if (bitshift) words_[i + wordshift + 1] ^= o.words_[i] >> (64 - bitshift);
    }
    trim();
  }

  void trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
  }

  std::vector<std::uint64_t> words_;
};

}  // namespace cymub
