#include "cymub/gf2/linalg.hpp"

#include <random>

#include "gtest/gtest.h"

using namespace cymub;

namespace {

const Gf2Matrix kBField{{1, 1, 1}, {1, 1, 0}, {1, 0, 0}};
const Gf2Matrix kBGroup{{0, 1, 1}, {0, 0, 1}, {1, 0, 0}};
const Gf2Matrix kRGroup{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};

Gf2Poly p(std::initializer_list<int> coeffs) {
  return Gf2Poly::from_coeffs(coeffs);
}

Gf2Matrix random_matrix(int n, std::mt19937_64& rng) {
  Gf2Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.xor_row(i, rng() & Gf2Vec::mask(n));
  return m;
}

// independent determinant of (xI + M) by naive recursive expansion, used as
// the oracle for char_poly
Gf2Poly charpoly_naive(const Gf2Matrix& m) {
  const int n = m.rows();
  std::vector<int> cols(n);
  for (int i = 0; i < n; ++i) cols[i] = i;
  auto rec = [&](auto&& self, int row, std::vector<int> cs) -> Gf2Poly {
    if (cs.empty()) return Gf2Poly::one();
    Gf2Poly acc;
    for (std::size_t k = 0; k < cs.size(); ++k) {
      Gf2Poly entry;
      if (m.get(row, cs[k])) entry = entry + Gf2Poly::one();
      if (row == cs[k]) entry = entry + Gf2Poly::x();
      if (entry.is_zero()) continue;
      std::vector<int> rest = cs;
      rest.erase(rest.begin() + k);
      acc = acc + entry * self(self, row + 1, rest);
    }
    return acc;
  };
  return rec(rec, 0, cols);
}

TEST(CharPoly, PaperMatrices) {
  EXPECT_EQ(char_poly(kBField), p({1, 1, 0, 1}));  // x^3 + x + 1
  EXPECT_EQ(char_poly(kBGroup), p({1, 1, 0, 1}));
  EXPECT_EQ(char_poly(Gf2Matrix::zero(3, 3)), Gf2Poly::monomial(3));
}

TEST(CharPoly, MatchesNaiveExpansion) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + int(rng() % 5);
    Gf2Matrix m = random_matrix(n, rng);
    EXPECT_EQ(char_poly(m), charpoly_naive(m));
  }
}

TEST(CharPoly, MonicOfDegreeN) {
  std::mt19937_64 rng(6);
  for (int n : {1, 2, 4, 6}) {
    Gf2Matrix m = random_matrix(n, rng);
    const Gf2Poly cp = char_poly(m);
    ASSERT_TRUE(cp.degree().has_value());
    EXPECT_EQ(*cp.degree(), n);
  }
}

TEST(CharPoly, SimilarityInvariance) {
  std::mt19937_64 rng(9);
  int done = 0;
  while (done < 30) {
    const int n = 2 + int(rng() % 4);
    Gf2Matrix m = random_matrix(n, rng);
    Gf2Matrix t = random_matrix(n, rng);
    if (t.rank() != n) continue;
    ++done;
    EXPECT_EQ(char_poly(t * m * t.inverse()), char_poly(m));
  }
}

TEST(CharPoly, NonSquareThrows) {
  EXPECT_THROW((void)char_poly(Gf2Matrix(2, 3)), DimensionError);
}

TEST(PolyEvalAtMatrix, ConstantGivesIdentity) {
  EXPECT_EQ(poly_eval_at_matrix(Gf2Poly::one(), kBField),
            Gf2Matrix::identity(3));
}

TEST(PolyEvalAtMatrix, LinearGivesMatrix) {
  EXPECT_EQ(poly_eval_at_matrix(Gf2Poly::x(), kBField), kBField);
}

TEST(PolyEvalAtMatrix, CayleyHamilton) {
  for (const Gf2Matrix& m : {kBField, kBGroup, kRGroup}) {
    EXPECT_EQ(poly_eval_at_matrix(char_poly(m), m), Gf2Matrix::zero(3, 3));
  }
  std::mt19937_64 rng(13);
  for (int t = 0; t < 50; ++t) {
    const int n = 1 + int(rng() % 6);
    Gf2Matrix m = random_matrix(n, rng);
    EXPECT_EQ(poly_eval_at_matrix(char_poly(m), m), Gf2Matrix::zero(n, n));
  }
}

TEST(PolyEvalAtMatrix, RingHomomorphism) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + int(rng() % 3);
    Gf2Matrix m = random_matrix(n, rng);
    Gf2Poly a, b;
    for (int i = 0; i < 5; ++i) {
      a.set_coeff(i, int(rng() & 1));
      b.set_coeff(i, int(rng() & 1));
    }
    EXPECT_EQ(poly_eval_at_matrix(a * b, m),
              poly_eval_at_matrix(a, m) * poly_eval_at_matrix(b, m));
  }
}

TEST(InPolynomialSpan, IdentityAndPowers) {
  EXPECT_TRUE(in_polynomial_span(Gf2Matrix::identity(3), kBGroup));
  EXPECT_TRUE(in_polynomial_span(kBGroup * kBGroup, kBGroup));
}

TEST(InPolynomialSpan, GroupRIsOutside) {
  // oracle: enumerate all 8 polynomials of degree < 3 in B directly
  bool any = false;
  const auto powers = matrix_powers(kBGroup);
  for (int bits = 0; bits < 8; ++bits) {
    Gf2Matrix q = Gf2Matrix::zero(3, 3);
    for (int i = 0; i < 3; ++i) {
      if ((bits >> i) & 1) q = q + powers[i];
    }
    if (q == kRGroup) any = true;
  }
  EXPECT_FALSE(any);
  EXPECT_FALSE(in_polynomial_span(kRGroup, kBGroup));
}

TEST(InPolynomialSpan, AgreesWithEnumeration) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + int(rng() % 3);
    Gf2Matrix b = random_matrix(n, rng);
    Gf2Matrix r = random_matrix(n, rng);
    bool any = false;
    const auto powers = matrix_powers(b);
    for (int bits = 0; bits < (1 << n); ++bits) {
      Gf2Matrix q = Gf2Matrix::zero(n, n);
      for (int i = 0; i < n; ++i) {
        if ((bits >> i) & 1) q = q + powers[i];
      }
      if (q == r) any = true;
    }
    EXPECT_EQ(in_polynomial_span(r, b), any);
  }
}

TEST(InPolynomialSpan, SizeMismatchThrows) {
  EXPECT_THROW((void)in_polynomial_span(Gf2Matrix(2, 2), kBField),
               DimensionError);
}

TEST(SemigroupACondition, ZeroAFails) {
  // q = 0, D = 0 reproduces A = 0
  EXPECT_FALSE(semigroup_a_condition(Gf2Matrix::zero(3, 3), kBField,
                                     Gf2Matrix::identity(3)));
}

TEST(SemigroupACondition, RPlusDiagonalFails) {
  Gf2Matrix a = kRGroup;
  a.set(0, 0, a.get(0, 0) ^ 1);  // R + diag(1,0,0), so q = 1 works
  EXPECT_FALSE(semigroup_a_condition(a, kBGroup, kRGroup));
}

TEST(SemigroupACondition, PublishedSemigroupAHolds) {
  const Gf2Matrix b{{1, 1, 1}, {1, 1, 0}, {1, 0, 0}};
  const Gf2Matrix r = b;
  const Gf2Matrix a{{1, 0, 1}, {1, 1, 0}, {1, 0, 0}};
  EXPECT_TRUE(semigroup_a_condition(a, b, r));
  // one-bit symmetric correction keeps the property
  const Gf2Matrix afix{{1, 0, 1}, {0, 1, 0}, {1, 0, 0}};
  EXPECT_TRUE(semigroup_a_condition(afix, b, r));
}

TEST(SemigroupACondition, AgreesWithExhaustion) {
  // oracle: loop over all q masks and all diagonals explicitly
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + int(rng() % 2);
    Gf2Matrix b = random_matrix(n, rng);
    Gf2Matrix r = random_matrix(n, rng);
    Gf2Matrix a = random_matrix(n, rng);
    bool reachable = false;
    const auto powers = matrix_powers(b);
    for (int bits = 0; bits < (1 << n) && !reachable; ++bits) {
      Gf2Matrix q = Gf2Matrix::zero(n, n);
      for (int i = 0; i < n; ++i) {
        if ((bits >> i) & 1) q = q + powers[i];
      }
      const Gf2Matrix qr = q * r;
      for (int diag = 0; diag < (1 << n); ++diag) {
        Gf2Matrix cand = qr;
        for (int i = 0; i < n; ++i) {
          if ((diag >> i) & 1) cand.set(i, i, cand.get(i, i) ^ 1);
        }
        if (cand == a) {
          reachable = true;
          break;
        }
      }
    }
    EXPECT_EQ(semigroup_a_condition(a, b, r), !reachable);
  }
}

}  // namespace
