// The oracles are checked against hand-computed facts before the acceptance
// criteria lean on them.

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace witt {
namespace {

using oracle::Gf9;

TEST(Gf9, IsAField) {
  // eta^2 = 2
  EXPECT_EQ(Gf9::mul(3, 3), 2);
  for (int a = 0; a < 9; ++a) {
    EXPECT_EQ(Gf9::add(a, Gf9::neg(a)), 0);
    EXPECT_EQ(Gf9::mul(a, 1), a);
    if (a == 0) continue;
    int inverses = 0;
    for (int b = 1; b < 9; ++b) inverses += Gf9::mul(a, b) == 1;
    EXPECT_EQ(inverses, 1) << a;
    for (int b = 0; b < 9; ++b)
      for (int c = 0; c < 9; ++c)
        EXPECT_EQ(Gf9::mul(a, Gf9::add(b, c)), Gf9::add(Gf9::mul(a, b), Gf9::mul(a, c)));
  }
}

TEST(Gf9, FStructures) {
  // GF(3)^x lies in the squares of GF(9), so <a> descends iff a is a square:
  // eta has order 4 (a square), 1 + eta (code 4) has order 8.
  EXPECT_TRUE(oracle::gf9_has_f_structure({{1}}));
  EXPECT_TRUE(oracle::gf9_has_f_structure({{3}}));
  EXPECT_FALSE(oracle::gf9_has_f_structure({{4}}));
  // hyperbolic plane xy
  EXPECT_TRUE(oracle::gf9_has_f_structure({{0, 1}, {0, 0}}));
  // <1, 1 + eta> has non-square discriminant
  EXPECT_FALSE(oracle::gf9_has_f_structure({{1, 0}, {0, 4}}));
}

TEST(Stripping, SmallCases) {
  FieldRef f3 = parse_field("GF(3)");
  EXPECT_EQ(oracle::witt_index_by_stripping(QuadraticForm::hyperbolic_plane(f3)), 1u);
  // x^2 + y^2 over GF(3): -1 is not a square
  EXPECT_EQ(oracle::witt_index_by_stripping(QuadraticForm::diagonal(f3, {f3->one(), f3->one()})), 0u);
  FieldRef f5 = parse_field("GF(5)");
  EXPECT_EQ(oracle::witt_index_by_stripping(QuadraticForm::diagonal(f5, {f5->one(), f5->one()})), 1u);
  const Vector ones(4, f3->one());
  EXPECT_EQ(oracle::witt_index_by_stripping(QuadraticForm::diagonal(f3, ones)), 2u);
  FieldRef f2 = parse_field("GF(2)");
  EXPECT_EQ(oracle::witt_index_by_stripping(QuadraticForm::binary(f2->one(), f2->one())), 0u);
}

TEST(HilbertBrute, KnownSymbols) {
  EXPECT_EQ(oracle::hilbert_symbol_brute(-1, -1, 2), -1);
  EXPECT_EQ(oracle::hilbert_symbol_brute(2, 2, 2), 1);
  EXPECT_EQ(oracle::hilbert_symbol_brute(-1, 3, 2), -1);
  EXPECT_EQ(oracle::hilbert_symbol_brute(2, 5, 2), -1);
  EXPECT_EQ(oracle::hilbert_symbol_brute(2, 3, 3), -1);   // (2/3)
  EXPECT_EQ(oracle::hilbert_symbol_brute(3, 3, 3), -1);   // (-1/3)
  EXPECT_EQ(oracle::hilbert_symbol_brute(2, 3, 5), 1);
  EXPECT_EQ(oracle::hilbert_symbol_brute(5, 2, 5), -1);   // (2/5)
  EXPECT_EQ(oracle::hilbert_symbol_brute(-1, 5, 5), 1);
  EXPECT_EQ(oracle::hilbert_symbol_brute(3, 7, 7), -1);   // (3/7)
}

TEST(Gf2Squares, Basic) {
  EXPECT_TRUE(oracle::gf2_poly_is_square({1, 0, 1}));
  EXPECT_FALSE(oracle::gf2_poly_is_square({1, 1, 0, 0, 1}));
  EXPECT_FALSE(oracle::gf2_poly_is_square({0, 1}));
}

}  // namespace
}  // namespace witt
