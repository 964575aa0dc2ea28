#include <gtest/gtest.h>

#include "braid3/bands.hpp"
#include "braid3/selftest/oracles.hpp"

using namespace braid3;

namespace {
Word w(const char* text) { return parse_word_auto(text); }
}  // namespace

TEST(IsBand, Generators) {
  EXPECT_TRUE(is_band(w("s1")));
  EXPECT_TRUE(is_band(w("s2")));
  EXPECT_TRUE(is_band(w("s0")));
  EXPECT_FALSE(is_band(w("s1^-1")));
  EXPECT_FALSE(is_band(w("s1 s2")));
  EXPECT_FALSE(is_band(Word()));
  EXPECT_TRUE(is_band(normalize(w("s2 s1 s2^-1"))));
}

TEST(IsBand, CommutatorTimesGenerator) {
  const Word x = w("s1 s2 s1^-1 s2^-1 s1");
  EXPECT_EQ(is_band(x), selftest::conjugate_to_s1_by_search(x, 6));
}

TEST(IsBand, ImpliesExponentSumOne) {
  selftest::Rng rng(61);
  for (int t = 0; t < 500; ++t) {
    const Word x = selftest::random_word(rng, t % 9);
    if (is_band(x)) EXPECT_EQ(exponent_sum(x), 1);
  }
}

TEST(IsBand, InvariantUnderConjugation) {
  selftest::Rng rng(62);
  for (int t = 0; t < 300; ++t) {
    const Word x = selftest::random_word(rng, 1 + 2 * (t % 3));
    const Word g = selftest::random_word(rng, t % 7);
    EXPECT_EQ(is_band(x), is_band(invert(g) * x * g)) << format_word(x) << " by " << format_word(g);
  }
}

TEST(IsBand, AgreesWithConjugatorSearchOnShortWords) {
  int bands = 0;
  for (const Word& x : selftest::reduced_words_up_to(5)) {
    if (exponent_sum(x) != 1) continue;
    const bool b = is_band(x);
    bands += b;
    EXPECT_EQ(b, selftest::conjugate_to_s1_by_search(x, 8)) << format_word(x);
  }
  EXPECT_GT(bands, 10);
}

TEST(ValidateFactorization, Examples) {
  EXPECT_TRUE(validate_factorization(w("s1 s2"), {w("s1"), w("s2")}));
  EXPECT_FALSE(validate_factorization(w("s1 s2"), {w("s2"), w("s1")}));
  EXPECT_TRUE(validate_factorization(w("D^2"), {w("s1"), w("s2"), w("s1"), w("s2"), w("s1"), w("s2")}));
  EXPECT_FALSE(validate_factorization(w("s1^2"), {w("s1^2")}));
  EXPECT_TRUE(validate_factorization(Word(), {}));
}
