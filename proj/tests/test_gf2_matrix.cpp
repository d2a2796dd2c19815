#include "cymub/gf2/matrix.hpp"

#include <random>

#include "gtest/gtest.h"

using namespace cymub;

namespace {

Gf2Matrix random_matrix(int n, std::mt19937_64& rng) {
  Gf2Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.xor_row(i, rng() & Gf2Vec::mask(n));
  return m;
}

TEST(Gf2Matrix, IdentityMultiplication) {
  const Gf2Matrix b{{1, 1, 1}, {1, 1, 0}, {1, 0, 0}};
  EXPECT_EQ(Gf2Matrix::identity(3) * b, b);
  EXPECT_EQ(b * Gf2Matrix::identity(3), b);
}

TEST(Gf2Matrix, CharacteristicTwoAddition) {
  const Gf2Matrix b{{1, 1, 1}, {1, 1, 0}, {1, 0, 0}};
  EXPECT_EQ(b + b, Gf2Matrix::zero(3, 3));
}

TEST(Gf2Matrix, FieldBIsSymmetric) {
  const Gf2Matrix b{{1, 1, 1}, {1, 1, 0}, {1, 0, 0}};
  EXPECT_TRUE(b.is_symmetric());
  Gf2Matrix off = b;
  off.set(0, 1, 0);
  EXPECT_FALSE(off.is_symmetric());
}

TEST(Gf2Matrix, DimensionMismatchNamesShapes) {
  const Gf2Matrix a(2, 3), b(2, 3);
  try {
    (void)(a * b);
    FAIL() << "expected DimensionError";
  } catch (const DimensionError& e) {
    EXPECT_NE(std::string(e.what()).find("2x3"), std::string::npos);
  }
}

TEST(Gf2Matrix, InverseIdentity) {
  EXPECT_EQ(Gf2Matrix::identity(3).inverse(), Gf2Matrix::identity(3));
}

TEST(Gf2Matrix, InverseInvolution) {
  // the group-based R is its own inverse
  const Gf2Matrix r{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
  EXPECT_EQ(r.inverse(), r);
  EXPECT_EQ(r * r, Gf2Matrix::identity(3));
}

TEST(Gf2Matrix, SingularInverseCarriesRank) {
  const Gf2Matrix m{{1, 1}, {1, 1}};
  try {
    (void)m.inverse();
    FAIL() << "expected NotInvertibleError";
  } catch (const NotInvertibleError& e) {
    EXPECT_EQ(e.rank(), 1);
  }
}

TEST(Gf2Matrix, InverseRoundTripRandom) {
  std::mt19937_64 rng(7);
  int checked = 0;
  while (checked < 50) {
    const int n = 2 + int(rng() % 7);  // up to 8
    Gf2Matrix m = random_matrix(n, rng);
    if (m.rank() != n) continue;
    ++checked;
    const Gf2Matrix inv = m.inverse();
    EXPECT_EQ(m * inv, Gf2Matrix::identity(n));
    EXPECT_EQ(inv.inverse(), m);
  }
}

TEST(Gf2Matrix, TransposeRoundTrip) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    Gf2Matrix m = random_matrix(5, rng);
    EXPECT_EQ(m.transpose().transpose(), m);
  }
}

TEST(Gf2Matrix, BlocksAndSubmatrices) {
  const Gf2Matrix a = Gf2Matrix::identity(2);
  const Gf2Matrix z = Gf2Matrix::zero(2, 2);
  const Gf2Matrix j = Gf2Matrix::from_blocks(z, a, a, z);
  EXPECT_EQ(j.submatrix(0, 2, 2, 2), a);
  EXPECT_EQ(j.submatrix(2, 2, 2, 2), z);
  EXPECT_EQ(j * j, Gf2Matrix::identity(4));
}

TEST(Gf2Matrix, MatrixVectorAction) {
  const Gf2Matrix b{{1, 1}, {0, 1}};
  Gf2Vec v(2, 0b10);  // e_1
  Gf2Vec out = b * v;
  EXPECT_EQ(out.get(0), 1);
  EXPECT_EQ(out.get(1), 1);
}

TEST(Gf2Matrix, LexOrderReadsRowMajor) {
  const Gf2Matrix a{{0, 1}, {1, 1}};
  const Gf2Matrix b{{1, 0}, {0, 0}};
  EXPECT_TRUE(Gf2Matrix::lex_less(a, b));
  EXPECT_FALSE(Gf2Matrix::lex_less(b, a));
}

TEST(Gf2Matrix, RankExamples) {
  EXPECT_EQ(Gf2Matrix::identity(4).rank(), 4);
  EXPECT_EQ(Gf2Matrix::zero(3, 3).rank(), 0);
  const Gf2Matrix m{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};  // rows sum to zero
  EXPECT_EQ(m.rank(), 2);
}

}  // namespace
