#pragma once

// Quasipositive factorizations read off a positive word.
//
// For a positive word W = a_1 ... a_n and positions I = {i_1 < ... < i_k},
// removing the letters at I splits W into pieces W_1 ... W_k+1, and
//
//     W_I = (A_1 x_1 A_1^-1, ..., A_k x_k A_k^-1),  A_j = W_1 ... W_j,
//
// with x_j = a_{i_j}. W_I is a band factorization of W D^-p exactly when
// the kept letters spell D^p (d^p for band words and W d^-p). Every Hurwitz
// orbit of band factorizations of W D^-p (resp. W d^-p) contains such a W_I
// with I minimal: no i in I has i-1 outside I and a_{i-1} = a_i.

#include <vector>

#include "braid3/garside.hpp"
#include "braid3/hurwitz.hpp"

namespace braid3 {

/// 1-based strictly increasing positions.
class IndexSet {
 public:
  IndexSet() = default;
  /// Throws PreconditionError unless strictly increasing and >= 1.
  explicit IndexSet(std::vector<int> positions);

  const std::vector<int>& positions() const noexcept { return positions_; }
  std::size_t size() const noexcept { return positions_.size(); }
  bool empty() const noexcept { return positions_.empty(); }
  bool contains(int i) const;

  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;
  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<int> positions_;
};

/// Subword omitting the positions in I. Throws on positions past the end.
Word remove_positions(const Word& w, const IndexSet& positions);

bool is_minimal(const Word& w, const IndexSet& positions);

/// Shifts positions left across equal letters until minimal; W_I is unchanged.
IndexSet minimalize(const Word& w, const IndexSet& positions);

/// The tuple W_I (classical canonical forms, whatever the alphabet of w).
Factorization build_factorization(const Word& w, const IndexSet& positions);

/// All minimal I with |I| = e(w) - 3p (classical) or e(w) - 2p (dual) whose
/// kept letters spell the Garside power, in lexicographic order. Depth-first
/// with two prunings: enough letters must remain, and the kept prefix must
/// left-divide the Garside power.
std::vector<IndexSet> enumerate_index_sets(const Word& w, int p,
                                           Structure structure = Structure::Classical);

/// Stops at the first index set.
bool has_index_set(const Word& w, int p, Structure structure = Structure::Classical);

bool is_quasipositive(const Word& x);

struct Candidate {
  IndexSet positions;
  Factorization factorization;
};

struct OrbitAnalysis {
  Structure structure = Structure::Classical;
  PositiveForm form;
  std::vector<Candidate> candidates;
  /// Candidate indices per Hurwitz class, ordered by least index set.
  std::vector<std::vector<std::size_t>> classes;

  /// The lexicographically least candidate of each class.
  std::vector<Candidate> representatives() const;
};

/// Candidates of an explicit positive form (W, p) partitioned into classes.
OrbitAnalysis analyze_positive_form(const PositiveForm& form, Structure structure,
                                    const SearchLimits& limits = {});

/// Classical: (W, p) = to_positive_form(x); dual: to_dual_positive_form(x).
OrbitAnalysis analyze(const Word& x, Structure structure = Structure::Classical,
                      const SearchLimits& limits = {});

std::vector<Candidate> orbit_representatives(const Word& x,
                                             Structure structure = Structure::Classical,
                                             const SearchLimits& limits = {});

std::size_t count_orbits(const Word& x, const SearchLimits& limits = {});

}  // namespace braid3
