#include "braid3/rewrite.hpp"

#include <algorithm>
#include <string>

#include "braid3/errors.hpp"
#include "braid3/garside.hpp"

namespace braid3 {

namespace {

CanonicalBraid dual_of(const Word& w, int from, int to) {
  // 1-based inclusive range; empty when from > to.
  CanonicalBraid out(Structure::Dual);
  for (int j = from; j <= to; ++j) out.append(w[static_cast<std::size_t>(j - 1)]);
  return out;
}

int dual_power(const Word& w) {
  if (!w.is_positive()) throw PreconditionError("expected a positive band word");
  const int e = exponent_sum(w);
  if (e == 0 || e % 2 != 0) return -1;
  const int p = e / 2;
  return dual_of(w, 1, static_cast<int>(w.size())) ==
                 CanonicalBraid::garside_power(p, Structure::Dual)
             ? p
             : -1;
}

bool is_match(const Word& w, int first, int last, int k) {
  return dual_of(w, first + 1, last - 1) == CanonicalBraid::garside_power(k, Structure::Dual) &&
         dual_of(w, first, last) == CanonicalBraid::garside_power(k + 1, Structure::Dual);
}

}  // namespace

LetterMatch find_complementary_letter(const Word& w, int i) {
  const int n = static_cast<int>(w.size());
  if (i < 1 || i > n) {
    throw PreconditionError("position " + std::to_string(i) + " outside a word of length " +
                            std::to_string(n));
  }
  if (dual_power(w) < 1) throw PreconditionError("word is not a positive power of d");
  for (int k = 0; 2 * k + 1 < n; ++k) {
    const int left = i - 1 - 2 * k;
    if (left >= 1 && is_match(w, left, i, k)) return {MatchSide::LeftOfU, left, k};
    const int right = i + 1 + 2 * k;
    if (right <= n && is_match(w, i, right, k)) return {MatchSide::RightOfU, right, k};
  }
  throw std::logic_error("no complementary letter in a power of d");
}

IndexShift shift_off_dual_pair(const Word& w, const IndexSet& positions, int i) {
  const int n = static_cast<int>(w.size());
  if (i < 1 || i + 1 > n) throw PreconditionError("pair (i, i+1) outside the word");
  if (!w.is_positive()) throw PreconditionError("expected a positive band word");
  if (positions.contains(i) == positions.contains(i + 1)) {
    throw PreconditionError("exactly one of i, i+1 must belong to the index set");
  }
  {
    CanonicalBraid pair(Structure::Dual);
    pair.append(w[static_cast<std::size_t>(i - 1)]);
    pair.append(w[static_cast<std::size_t>(i)]);
    if (pair != CanonicalBraid::garside_power(1, Structure::Dual)) {
      throw PreconditionError("letters at i, i+1 do not multiply to d");
    }
  }
  const Word kept = remove_positions(w, positions);
  if (dual_power(kept) < 1) throw PreconditionError("remaining letters do not spell a power of d");

  const int removed = positions.contains(i) ? i : i + 1;
  const int u = removed == i ? i + 1 : i;

  // Positions of W kept by I, in order; u's rank among them.
  std::vector<int> kept_positions;
  for (int j = 1; j <= n; ++j) {
    if (!positions.contains(j)) kept_positions.push_back(j);
  }
  const auto u_rank = static_cast<int>(
      std::find(kept_positions.begin(), kept_positions.end(), u) - kept_positions.begin());
  const LetterMatch match = find_complementary_letter(kept, u_rank + 1);
  const int l = kept_positions[static_cast<std::size_t>(match.position - 1)];

  const std::vector<int>& old = positions.positions();
  const int m = static_cast<int>(std::find(old.begin(), old.end(), removed) - old.begin()) + 1;
  std::vector<int> next;
  for (int j : old) {
    if (j != removed) next.push_back(j);
  }
  next.insert(std::upper_bound(next.begin(), next.end(), l), l);
  const int target = static_cast<int>(std::find(next.begin(), next.end(), l) - next.begin()) + 1;

  // The factor at index m travels to index `target`; everything it passes
  // is conjugated by it.
  MoveSequence moves;
  if (target <= m) {
    for (int j = m - 1; j >= target; --j) moves.push_back({j, true});
  } else {
    for (int j = m; j < target; ++j) moves.push_back({j, false});
  }
  return {IndexSet(std::move(next)), std::move(moves)};
}

}  // namespace braid3
