#include <gtest/gtest.h>

#include "braid3/errors.hpp"
#include "braid3/rewrite.hpp"
#include "braid3/selftest/oracles.hpp"
#include "braid3/sl2.hpp"

using namespace braid3;

namespace {

Word b(const char* text) { return parse_word(text, Alphabet::Bkl); }

Word slice(const Word& w, int from, int to) {
  return Word(std::vector<Letter>(w.letters().begin() + from - 1, w.letters().begin() + to),
              Alphabet::Bkl);
}

}  // namespace

TEST(FindComplementaryLetter, SingleFactor) {
  const LetterMatch m = find_complementary_letter(b("s2 s1"), 1);
  EXPECT_EQ(m.side, MatchSide::RightOfU);
  EXPECT_EQ(m.position, 2);
  EXPECT_EQ(m.k, 0);
}

TEST(FindComplementaryLetter, LeftNeighbour) {
  const LetterMatch m = find_complementary_letter(b("s2 s1 s2 s1"), 2);
  EXPECT_EQ(m.side, MatchSide::LeftOfU);
  EXPECT_EQ(m.position, 1);
  EXPECT_EQ(m.k, 0);
}

TEST(FindComplementaryLetter, BandLetters) {
  const Word w = b("s1 s0 s1 s0");
  const LetterMatch m = find_complementary_letter(w, 1);
  EXPECT_EQ(m.side, MatchSide::RightOfU);
  EXPECT_TRUE(sl2::equal(slice(w, 1, m.position), dual_twist_word(m.k + 1)));
}

TEST(FindComplementaryLetter, SomePartnersAreDistant) {
  int distant = 0;
  for (const Word& w : selftest::dual_power_words(2)) {
    for (int i = 1; i <= static_cast<int>(w.size()); ++i) {
      if (find_complementary_letter(w, i).k > 0) ++distant;
    }
  }
  EXPECT_GT(distant, 0);
}

TEST(FindComplementaryLetter, RejectsBadInput) {
  EXPECT_THROW(find_complementary_letter(b("s1 s2"), 1), PreconditionError);
  EXPECT_THROW(find_complementary_letter(b("s2 s1"), 3), PreconditionError);
  EXPECT_THROW(find_complementary_letter(Word(), 1), PreconditionError);
}

TEST(FindComplementaryLetter, EveryPositionOfSmallPowers) {
  for (int p = 1; p <= 3; ++p) {
    const auto words = selftest::dual_power_words(p);
    EXPECT_FALSE(words.empty());
    for (const Word& w : words) {
      for (int i = 1; i <= static_cast<int>(w.size()); ++i) {
        const LetterMatch m = find_complementary_letter(w, i);
        const int lo = std::min(i, m.position), hi = std::max(i, m.position);
        EXPECT_EQ(hi - lo, 2 * m.k + 1);
        EXPECT_TRUE(sl2::equal(slice(w, lo + 1, hi - 1), dual_twist_word(m.k)));
        EXPECT_TRUE(sl2::equal(slice(w, lo, hi), dual_twist_word(m.k + 1)));
      }
    }
  }
}

TEST(ShiftOffDualPair, SingleFactor) {
  const Word w = b("s0 s2 s1");
  const IndexShift s = shift_off_dual_pair(w, IndexSet({3}), 2);
  EXPECT_EQ(s.positions, IndexSet({1}));
  EXPECT_TRUE(s.moves.empty());
  EXPECT_EQ(canonical_key(build_factorization(w, IndexSet({3}))),
            canonical_key(build_factorization(w, IndexSet({1}))));
  EXPECT_EQ(build_factorization(w, IndexSet({1}))[0], normalize(b("s0")));
}

TEST(ShiftOffDualPair, RejectsBadInput) {
  const Word w = b("s2 s1 s2 s1");
  EXPECT_THROW(shift_off_dual_pair(w, IndexSet({1, 2}), 1), PreconditionError);
  EXPECT_THROW(shift_off_dual_pair(w, IndexSet(), 1), PreconditionError);
  EXPECT_THROW(shift_off_dual_pair(w, IndexSet({2}), 2), PreconditionError);  // s1 s2 != d
  EXPECT_THROW(shift_off_dual_pair(b("s2 s1 s1"), IndexSet({1}), 1), PreconditionError);  // s1 s1 != d^p
}

TEST(ShiftOffDualPair, RandomInstancesReplayExactly) {
  selftest::Rng rng(71);
  int built = 0;
  std::size_t total_moves = 0;
  for (int attempt = 0; built < 300 && attempt < 1'000'000; ++attempt) {
    const Word w = selftest::random_positive_word(rng, 2 + attempt % 7, Alphabet::Bkl);
    const int n = static_cast<int>(w.size());
    const int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    if (!sl2::equal(slice(w, i, i + 1), dual_twist_word(1))) continue;
    std::vector<int> chosen;
    for (int j = 1; j <= n; ++j) {
      if ((rng() & 1u) != 0) chosen.push_back(j);
    }
    const IndexSet set(chosen);
    if (set.contains(i) == set.contains(i + 1)) continue;
    const Word kept = remove_positions(w, set);
    const int e = exponent_sum(kept);
    if (e == 0 || e % 2 != 0 || !sl2::equal(kept, dual_twist_word(e / 2))) continue;
    ++built;
    const IndexShift s = shift_off_dual_pair(w, set, i);
    const Factorization from = build_factorization(w, set);
    const Factorization to = build_factorization(w, s.positions);
    EXPECT_EQ(s.positions.size(), set.size());
    EXPECT_FALSE(s.positions.contains(i) || s.positions.contains(i + 1));
    EXPECT_TRUE(sl2::equal(remove_positions(w, s.positions), dual_twist_word(e / 2)));
    EXPECT_EQ(canonical_key(apply_moves(from, s.moves)), canonical_key(to));
    const Equivalence independent = equivalent(from, to);
    EXPECT_TRUE(independent.equivalent);
    total_moves += s.moves.size();
  }
  EXPECT_EQ(built, 300);
  EXPECT_GT(total_moves, 0u);
}
