#include <gtest/gtest.h>

#include "braid3/selftest/oracles.hpp"
#include "braid3/sl2.hpp"

using namespace braid3;
using sl2::Vector;

TEST(Sl2, GeneratorsSatisfyTheBraidRelation) {
  EXPECT_EQ(sl2::matrix_of(parse_word("s1 s2 s1")), sl2::matrix_of(parse_word("s2 s1 s2")));
  EXPECT_EQ(sl2::matrix_of(parse_word("D^2")), (sl2::Matrix{-1, 0, 0, -1}));
  EXPECT_EQ(sl2::matrix_of(parse_word("D^4")), sl2::Matrix{});
}

TEST(Sl2, EqualityUsesExponentSumToSeeTheKernel) {
  EXPECT_FALSE(sl2::equal(parse_word("D^4"), Word()));
  EXPECT_TRUE(sl2::equal(parse_word("d^3"), parse_word("D^2")));
}

TEST(Sl2, BandAxes) {
  EXPECT_EQ(sl2::band_axis(sl2::matrix_of(parse_word("s1"))), (Vector{1, 0}));
  EXPECT_EQ(sl2::band_axis(sl2::matrix_of(parse_word("s2"))), (Vector{0, 1}));
  EXPECT_FALSE(sl2::band_axis(sl2::matrix_of(parse_word("s1 s2"))));
  EXPECT_FALSE(sl2::band_axis(sl2::matrix_of(parse_word("s1^-1"))));
  EXPECT_FALSE(sl2::band_axis(sl2::matrix_of(parse_word("s1^2"))));
}

TEST(Sl2, ConjugatedBandsMoveTheirAxis) {
  selftest::Rng rng(31);
  const Vector e1{1, 0};
  for (int t = 0; t < 300; ++t) {
    const Word a = selftest::random_word(rng, t % 8);
    const auto g = sl2::matrix_of(a);
    const auto axis = sl2::band_axis(sl2::matrix_of(a * parse_word("s1") * invert(a)));
    ASSERT_TRUE(axis);
    EXPECT_EQ(*axis, sl2::normalize_sign(g * e1));
  }
}

TEST(Sl2, ConjugatingPowerFindsTheExponent) {
  // A hyperbolic X: its powers carry (1,0) along an infinite orbit.
  const auto x = sl2::matrix_of(parse_word("s1 s2^-1 s1 s2^-1"));
  Vector v{1, 0};
  Vector cur = v;
  for (long m = 0; m < 6; ++m) {
    const auto found = sl2::conjugating_power(x, v, sl2::normalize_sign(cur));
    ASSERT_TRUE(found);
    EXPECT_EQ(*found, m);
    cur = x * cur;
  }
  EXPECT_FALSE(sl2::conjugating_power(x, v, Vector{2, 3}));
}

TEST(Sl2, StabilizingPowerOfEllipticProducts) {
  // s1 s2 has order 6 in SL(2,Z) and moves every axis.
  EXPECT_EQ(sl2::stabilizing_power(sl2::matrix_of(parse_word("s1 s2")), Vector{1, 0}), 3);
  EXPECT_EQ(sl2::stabilizing_power(sl2::matrix_of(parse_word("s1^2")), Vector{1, 0}), 1);
  EXPECT_FALSE(sl2::stabilizing_power(sl2::matrix_of(parse_word("s1^2")), Vector{0, 1}));
}

TEST(Sl2, OverflowIsReported) {
  const auto big = sl2::matrix_of(parse_word("s1^1000 s2^-1000 s1^1000 s2^-1000"));
  EXPECT_THROW(big * big * big, std::overflow_error);
}
