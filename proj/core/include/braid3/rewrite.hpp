#pragma once

// Rewriting steps on band words equal to powers of d = s2 s1.
//
// find_complementary_letter: in a word W = d^p, every letter u has a partner
// v at distance 2k + 1 with d^k between them and the three pieces multiplying
// to d^(k+1). shift_off_dual_pair: when a_i a_(i+1) = d and exactly one of
// the two is removed by I, trades the removed one for a kept letter, with the
// Hurwitz moves relating W_I and W_J.

#include <vector>

#include "braid3/factor_search.hpp"
#include "braid3/hurwitz.hpp"
#include "braid3/word.hpp"

namespace braid3 {

enum class MatchSide { LeftOfU, RightOfU };

struct LetterMatch {
  MatchSide side = MatchSide::RightOfU;
  int position = 0;  ///< 1-based index l of v in W
  int k = 0;         ///< number of d factors between v and u
};

/// Requires W positive with W = d^p, p >= 1, and 1 <= i <= |W|. Tries
/// k = 0, 1, ... and, for each k, the left candidate before the right one;
/// every answer is checked by normal forms.
LetterMatch find_complementary_letter(const Word& w, int i);

struct IndexShift {
  IndexSet positions;  ///< J
  MoveSequence moves;  ///< apply_moves(W_I, moves) == W_J
};

/// Requires W positive, W \ I = d^p, a_i a_(i+1) = d, and exactly one of
/// i, i+1 in I. The result avoids both i and i+1.
IndexShift shift_off_dual_pair(const Word& w, const IndexSet& positions, int i);

}  // namespace braid3
