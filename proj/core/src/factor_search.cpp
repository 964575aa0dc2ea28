#include "braid3/factor_search.hpp"

#include <algorithm>

#include "braid3/errors.hpp"

namespace braid3 {

IndexSet::IndexSet(std::vector<int> positions) : positions_(std::move(positions)) {
  for (std::size_t j = 0; j < positions_.size(); ++j) {
    if (positions_[j] < 1 || (j > 0 && positions_[j] <= positions_[j - 1])) {
      throw PreconditionError("index set must be strictly increasing and 1-based");
    }
  }
}

bool IndexSet::contains(int i) const {
  return std::binary_search(positions_.begin(), positions_.end(), i);
}

namespace {

void check_range(const Word& w, const IndexSet& positions) {
  if (!positions.empty() && positions.positions().back() > static_cast<int>(w.size())) {
    throw PreconditionError("position " + std::to_string(positions.positions().back()) +
                            " is past the end of a word of length " +
                            std::to_string(w.size()));
  }
}

void check_positive(const Word& w) {
  if (!w.is_positive()) throw PreconditionError("expected a positive word");
}

int garside_exponent(Structure s) { return s == Structure::Classical ? 3 : 2; }

class IndexSetSearch {
 public:
  IndexSetSearch(const Word& w, int p, Structure structure, bool first_only)
      : word_(w), p_(p), structure_(structure), first_only_(first_only) {
    const int n = static_cast<int>(w.size());
    k_ = exponent_sum(w) - garside_exponent(structure) * p;
    keep_ = n - k_;
    removed_.reserve(static_cast<std::size_t>(std::max(k_, 0)));
  }

  std::vector<IndexSet> run() {
    if (k_ < 0 || keep_ < 0) return {};
    visit(1, CanonicalBraid(structure_), -1);
    return std::move(found_);
  }

 private:
  // last_kept: position of the previous letter if it was kept, else -1.
  void visit(int i, const CanonicalBraid& kept, int previous_kept) {
    if (first_only_ && !found_.empty()) return;
    const int n = static_cast<int>(word_.size());
    const int removed = static_cast<int>(removed_.size());
    const int kept_count = (i - 1) - removed;
    if (i > n) {
      if (kept == CanonicalBraid::garside_power(p_, structure_)) found_.emplace_back(removed_);
      return;
    }
    const Generator g = word_[static_cast<std::size_t>(i - 1)].gen;

    const bool blocked = previous_kept == i - 1 && i > 1 &&
                         word_[static_cast<std::size_t>(i - 2)].gen == g;
    if (removed < k_ && !blocked) {
      removed_.push_back(i);
      visit(i + 1, kept, -1);
      removed_.pop_back();
    }
    if (kept_count < keep_) {
      CanonicalBraid next = kept;
      next.append(Letter{g, false});
      // A positive braid left-divides the p-th Garside power iff sup <= p.
      if (next.sup() <= p_) visit(i + 1, next, i);
    }
  }

  const Word& word_;
  int p_;
  Structure structure_;
  bool first_only_;
  int k_ = 0;
  int keep_ = 0;
  std::vector<int> removed_;
  std::vector<IndexSet> found_;
};

std::vector<IndexSet> search(const Word& w, int p, Structure structure, bool first_only) {
  if (p < 0) throw PreconditionError("Garside exponent must be non-negative");
  check_positive(w);
  if (structure == Structure::Classical && w.uses_s0()) {
    throw AlphabetError("classical enumeration needs a word over s1, s2");
  }
  return IndexSetSearch(w, p, structure, first_only).run();
}

}  // namespace

Word remove_positions(const Word& w, const IndexSet& positions) {
  check_range(w, positions);
  std::vector<Letter> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!positions.contains(static_cast<int>(i) + 1)) out.push_back(w[i]);
  }
  return Word(std::move(out), w.alphabet());
}

bool is_minimal(const Word& w, const IndexSet& positions) {
  check_range(w, positions);
  for (int i : positions.positions()) {
    if (i > 1 && !positions.contains(i - 1) &&
        w[static_cast<std::size_t>(i - 2)] == w[static_cast<std::size_t>(i - 1)]) {
      return false;
    }
  }
  return true;
}

IndexSet minimalize(const Word& w, const IndexSet& positions) {
  check_range(w, positions);
  std::vector<int> current = positions.positions();
  for (bool changed = true; changed;) {
    changed = false;
    for (int& i : current) {
      const bool free_left = i > 1 && std::find(current.begin(), current.end(), i - 1) == current.end();
      if (free_left && w[static_cast<std::size_t>(i - 2)] == w[static_cast<std::size_t>(i - 1)]) {
        --i;
        changed = true;
      }
    }
  }
  return IndexSet(std::move(current));
}

Factorization build_factorization(const Word& w, const IndexSet& positions) {
  check_range(w, positions);
  check_positive(w);
  std::vector<CanonicalBraid> factors;
  factors.reserve(positions.size());
  CanonicalBraid prefix;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (positions.contains(static_cast<int>(i) + 1)) {
      CanonicalBraid x;
      x.append(w[i]);
      factors.push_back(prefix * x * prefix.inverse());
    } else {
      prefix.append(w[i]);
    }
  }
  return Factorization(std::move(factors));
}

std::vector<IndexSet> enumerate_index_sets(const Word& w, int p, Structure structure) {
  return search(w, p, structure, false);
}

bool has_index_set(const Word& w, int p, Structure structure) {
  return !search(w, p, structure, true).empty();
}

bool is_quasipositive(const Word& x) {
  const int e = exponent_sum(x);
  if (e < 0) return false;
  if (e == 0) return normalize(x).is_identity();
  const PositiveForm form = to_positive_form(x);
  return has_index_set(form.word, form.p, Structure::Classical);
}

std::vector<Candidate> OrbitAnalysis::representatives() const {
  std::vector<Candidate> out;
  out.reserve(classes.size());
  for (const auto& members : classes) out.push_back(candidates[members.front()]);
  return out;
}

OrbitAnalysis analyze_positive_form(const PositiveForm& form, Structure structure,
                                    const SearchLimits& limits) {
  OrbitAnalysis out;
  out.structure = structure;
  out.form = form;
  for (IndexSet& positions : enumerate_index_sets(form.word, form.p, structure)) {
    Factorization f = build_factorization(form.word, positions);
    out.candidates.push_back({std::move(positions), std::move(f)});
  }
  std::vector<Factorization> tuples;
  tuples.reserve(out.candidates.size());
  for (const Candidate& c : out.candidates) tuples.push_back(c.factorization);
  out.classes = orbit_partition(tuples, limits);
  // Candidates are already lexicographic, so the least member leads.
  std::sort(out.classes.begin(), out.classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

OrbitAnalysis analyze(const Word& x, Structure structure, const SearchLimits& limits) {
  const PositiveForm form = structure == Structure::Classical ? to_positive_form(x)
                                                              : to_dual_positive_form(x);
  return analyze_positive_form(form, structure, limits);
}

std::vector<Candidate> orbit_representatives(const Word& x, Structure structure,
                                             const SearchLimits& limits) {
  return analyze(x, structure, limits).representatives();
}

std::size_t count_orbits(const Word& x, const SearchLimits& limits) {
  return analyze(x, Structure::Classical, limits).classes.size();
}

}  // namespace braid3
