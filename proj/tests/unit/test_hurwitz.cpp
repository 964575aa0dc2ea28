#include <gtest/gtest.h>

#include <set>

#include "braid3/errors.hpp"
#include "braid3/factor_search.hpp"
#include "braid3/hurwitz.hpp"
#include "braid3/selftest/oracles.hpp"

using namespace braid3;

namespace {

Factorization tuple(std::initializer_list<const char*> words) {
  std::vector<Word> ws;
  for (const char* t : words) ws.push_back(parse_word_auto(t));
  return Factorization::from_words(ws);
}

Factorization example_tuple(std::vector<int> positions) {
  return build_factorization(parse_word("s1^2 s2^2 s1^2 s2^2"), IndexSet(std::move(positions)));
}

}  // namespace

TEST(SigmaMove, ThreeLetterExample) {
  const Factorization f = tuple({"s1", "s2", "s1"});
  const Factorization once = sigma_move(f, 2);
  EXPECT_EQ(canonical_key(once), canonical_key(tuple({"s1", "s2 s1 s2^-1", "s2"})));
  EXPECT_EQ(canonical_key(sigma_move(once, 1)), canonical_key(tuple({"s2", "s1", "s2"})));
}

TEST(SigmaMove, RejectsBadIndex) {
  const Factorization f = tuple({"s1", "s2"});
  EXPECT_THROW(sigma_move(f, 0), PreconditionError);
  EXPECT_THROW(sigma_move(f, 2), PreconditionError);
}

TEST(SigmaMove, InverseUndoesAndProductIsKept) {
  selftest::Rng rng(41);
  for (int t = 0; t < 300; ++t) {
    const Factorization f = selftest::random_band_tuple(rng, 2 + t % 5, 3);
    for (int i = 1; i < static_cast<int>(f.size()); ++i) {
      EXPECT_EQ(sigma_move(sigma_move(f, i), i, true), f);
      EXPECT_EQ(sigma_move(f, i).product(), f.product());
    }
  }
}

TEST(CanonicalKey, Examples) {
  EXPECT_EQ(canonical_key(tuple({"s1 s2 s1^-1"})), canonical_key(tuple({"s2^-1 s1 s2"})));
  EXPECT_EQ(canonical_key(tuple({"s1 s2 s1^-1"})),
            canonical_key(tuple({"s2^-1 s1 s1 s2 s2^-1 s1^-1 s2 D^2 s1 D^-2 s1^-1"})));
  EXPECT_NE(canonical_key(tuple({"s1", "s2"})), canonical_key(tuple({"s2", "s1"})));
  EXPECT_EQ(canonical_key(Factorization()), "");
  EXPECT_NE(canonical_key(tuple({"s1"})), canonical_key(tuple({"s1", "s1"})));
}

TEST(CanonicalKey, MatchesComponentwiseEquality) {
  selftest::Rng rng(42);
  std::vector<Factorization> fs;
  for (int t = 0; t < 200; ++t) fs.push_back(selftest::random_band_tuple(rng, 1 + t % 3, 1));
  for (const auto& a : fs) {
    for (const auto& b : fs) EXPECT_EQ(canonical_key(a) == canonical_key(b), a == b);
  }
}

TEST(Orbit, SingleFactorIsFixed) {
  const auto o = orbit(tuple({"s1"}));
  ASSERT_EQ(o.size(), 1u);
}

TEST(Orbit, HalfTwistOrbitIsClosedAndSorted) {
  const auto o = orbit(tuple({"s1", "s2", "s1"}));
  EXPECT_EQ(o.size(), 8u);
  for (std::size_t i = 1; i < o.size(); ++i) EXPECT_LT(canonical_key(o[i - 1]), canonical_key(o[i]));
  std::set<FactorizationKey> keys;
  for (const auto& f : o) keys.insert(canonical_key(f));
  for (const auto& f : o) {
    for (int i = 1; i < 3; ++i) {
      EXPECT_TRUE(keys.count(canonical_key(sigma_move(f, i))));
      EXPECT_TRUE(keys.count(canonical_key(sigma_move(f, i, true))));
    }
  }
  EXPECT_EQ(orbit_size(tuple({"s1", "s2", "s1"})), 8u);
}

TEST(Orbit, ReportsCapInsteadOfTruncating) {
  SearchLimits tight;
  tight.max_states = 50;
  EXPECT_THROW(orbit(tuple({"s1", "s2", "s1", "s2", "s1", "s2"}), tight), CapExceeded);
}

TEST(OrbitSize, PairsAreDecidedExactly) {
  // (s1, s2): product s1 s2 acts with order 3 on axes; orbit of size 3.
  EXPECT_EQ(orbit_size(tuple({"s1", "s2"})), 3u);
  EXPECT_EQ(orbit_size(tuple({"s1", "s1"})), 1u);
  // The worked example's pairs have infinite orbits.
  EXPECT_EQ(orbit_size(example_tuple({1, 5})), std::nullopt);
}

TEST(Equivalent, HalfTwistWitness) {
  const Factorization a = tuple({"s1", "s2", "s1"});
  const Factorization b = tuple({"s2", "s1", "s2"});
  const Equivalence e = equivalent(a, b);
  ASSERT_TRUE(e.equivalent);
  EXPECT_EQ(e.witness, (MoveSequence{{2, false}, {1, false}}));
  EXPECT_EQ(format_moves(e.witness), "S2 S1");
  EXPECT_EQ(canonical_key(apply_moves(a, e.witness)), canonical_key(b));
}

TEST(Equivalent, WorkedExamplePairsAreInequivalent) {
  EXPECT_FALSE(equivalent(example_tuple({1, 5}), example_tuple({3, 7})).equivalent);
}

TEST(Equivalent, SelfAndMismatchedProducts) {
  const Factorization f = tuple({"s1", "s2 s1 s2^-1"});
  const Equivalence same = equivalent(f, f);
  EXPECT_TRUE(same.equivalent);
  EXPECT_TRUE(same.witness.empty());
  EXPECT_FALSE(equivalent(tuple({"s1", "s2"}), tuple({"s2", "s1"})).equivalent);
  EXPECT_FALSE(equivalent(tuple({"s1"}), tuple({"s1", "s1"})).equivalent);
}

TEST(Equivalent, RandomMoveSequencesAreRecovered) {
  selftest::Rng rng(43);
  for (int t = 0; t < 200; ++t) {
    const int k = 2 + t % 3;
    const Factorization f = selftest::random_band_tuple(rng, k, 2);
    MoveSequence moves;
    for (int j = 0; j < 4; ++j) {
      moves.push_back({std::uniform_int_distribution<int>(1, k - 1)(rng), (rng() & 1u) != 0});
    }
    const Factorization g = apply_moves(f, moves);
    const Equivalence e = equivalent(f, g);
    ASSERT_TRUE(e.equivalent) << t;
    EXPECT_EQ(canonical_key(apply_moves(f, e.witness)), canonical_key(g));
  }
}

TEST(Equivalent, PairWitnessLengthIsShortest) {
  // Sigma_1^n on a pair; the exact pair search returns |n| moves.
  const Factorization f = example_tuple({1, 5});
  for (int n = -5; n <= 5; ++n) {
    MoveSequence moves(static_cast<std::size_t>(std::abs(n)), Move{1, n < 0});
    const Equivalence e = equivalent(f, apply_moves(f, moves));
    ASSERT_TRUE(e.equivalent);
    EXPECT_EQ(e.witness.size(), static_cast<std::size_t>(std::abs(n)));
  }
}

TEST(OrbitPartition, Examples) {
  const std::vector<Factorization> half{tuple({"s1", "s2", "s1"}), tuple({"s2", "s1", "s2"})};
  EXPECT_EQ(orbit_partition(half).size(), 1u);
  const std::vector<Factorization> example{example_tuple({1, 5}), example_tuple({3, 7})};
  const auto groups = orbit_partition(example);
  ASSERT_EQ(groups.size(), 2u);
  EXPECT_TRUE(orbit_partition({}).empty());
}

TEST(LettersOfEqualWords, GiveEquivalentTuples) {
  // Two positive words spelling the same braid give Hurwitz-equivalent
  // tuples of their letters.
  const std::vector<std::pair<const char*, const char*>> pairs = {
      {"s1 s2 s1 s1", "s2 s1 s2 s1"}, {"s1 s2 s1 s2", "s1 s1 s2 s1"},
      {"s1 s2 s1 s2 s1", "s2 s1 s2 s2 s1"}};
  for (const auto& [a, b] : pairs) {
    ASSERT_TRUE(equal(parse_word(a), parse_word(b)));
    auto letters = [](const char* text) {
      std::vector<Word> out;
      const Word word = parse_word(text);
      for (const Letter& l : word.letters()) out.push_back(Word({l}));
      return Factorization::from_words(out);
    };
    EXPECT_TRUE(equivalent(letters(a), letters(b)).equivalent) << a << " / " << b;
  }
}
