#include "braid3/selftest/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "braid3/errors.hpp"
#include "braid3/factor_search.hpp"
#include "braid3/polygon.hpp"
#include "braid3/rewrite.hpp"
#include "braid3/selftest/oracles.hpp"
#include "braid3/sl2.hpp"

namespace braid3::selftest {

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string positions_text(const IndexSet& s) {
  std::string out = "{";
  for (int i : s.positions()) out += (out.size() > 1 ? "," : "") + std::to_string(i);
  return out + "}";
}

const char* kExample = "s1^2 s2^2 s1^2 s2^2 D^-2";

std::vector<Generator> artin_letters() { return {Generator::s1, Generator::s2}; }
std::vector<Generator> band_letters() { return {Generator::s0, Generator::s1, Generator::s2}; }

Outcome example_two_orbits(const AcceptanceOptions& opt, double budget) {
  const auto start = std::chrono::steady_clock::now();
  const PositiveForm form{parse_word("s1^2 s2^2 s1^2 s2^2"), 2};
  const OrbitAnalysis a = analyze_positive_form(form, Structure::Classical, opt.limits);
  const auto oracle = unpruned_index_sets(form.word, form.p, Structure::Classical);
  std::vector<IndexSet> listed;
  for (const Candidate& c : a.candidates) listed.push_back(c.positions);
  const IndexSet first({1, 5}), second({3, 7});
  auto class_of = [&](const IndexSet& s) -> long {
    for (std::size_t g = 0; g < a.classes.size(); ++g) {
      for (std::size_t i : a.classes[g]) {
        if (a.candidates[i].positions == s) return static_cast<long>(g);
      }
    }
    return -1;
  };
  const long c1 = class_of(first), c2 = class_of(second);
  const std::size_t via_word = count_orbits(parse_word(kExample), opt.limits);
  const double took = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream d;
  d << "orbits " << a.classes.size() << " (from the braid word: " << via_word << "); index sets";
  for (const IndexSet& s : listed) d << ' ' << positions_text(s);
  d << "; {1,5} in class " << c1 << ", {3,7} in class " << c2 << "; within " << budget
    << " s: " << (took < budget ? "yes" : "no");
  const bool ok = a.classes.size() == 2 && via_word == 2 && listed == oracle && c1 >= 0 &&
                  c2 >= 0 && c1 != c2 && took < budget;
  return {ok, d.str()};
}

Outcome positive_words_single_orbit(const AcceptanceOptions& opt, int max_length,
                                    Structure structure) {
  const auto words = structure == Structure::Classical
                         ? positive_words_up_to(max_length, artin_letters())
                         : positive_words_up_to(max_length, band_letters(), Alphabet::Bkl);
  std::size_t bad = 0;
  std::string first_bad;
  for (const Word& w : words) {
    const std::size_t n = analyze(w, structure, opt.limits).classes.size();
    if (n != 1) {
      if (bad++ == 0) first_bad = format_word(w) + " -> " + std::to_string(n);
    }
  }
  std::ostringstream d;
  d << words.size() << " words, " << bad << " with an orbit count other than 1";
  if (bad > 0) d << " (first: " << first_bad << ")";
  return {bad == 0, d.str()};
}

// Quasipositive braids W D^-p with e(W) = 2 + 3p, p = 1..3.
std::vector<Word> e2_sample(Rng& rng, std::size_t wanted) {
  std::vector<Word> out;
  std::set<std::string> seen;
  std::uniform_int_distribution<int> pick_p(1, 3);
  for (int attempts = 0; out.size() < wanted && attempts < 1'000'000; ++attempts) {
    const int p = pick_p(rng);
    const Word x = random_positive_word(rng, 2 + 3 * p) * half_twist_word(-p);
    if (!seen.insert(format_word(x)).second) continue;
    if (is_quasipositive(x)) out.push_back(x);
  }
  return out;
}

Outcome e2_orbit_counts(const AcceptanceOptions& opt, std::size_t wanted) {
  Rng rng(opt.seed);
  const auto sample = e2_sample(rng, wanted);
  std::size_t ones = 0, twos = 0, bad = 0;
  std::string first_bad;
  for (const Word& x : sample) {
    const std::size_t searched = count_orbits(x, opt.limits);
    const int read_off = orbit_count_e2(x);
    if (searched == 1) ++ones;
    if (searched == 2) ++twos;
    if ((searched != 1 && searched != 2) || static_cast<int>(searched) != read_off) {
      if (bad++ == 0) {
        first_bad = format_word(x) + ": search " + std::to_string(searched) + ", polygon " +
                    std::to_string(read_off);
      }
    }
  }
  std::ostringstream d;
  d << sample.size() << " braids (" << ones << " with one orbit, " << twos << " with two), "
    << bad << " disagreements";
  if (bad > 0) d << " (first: " << first_bad << ")";
  return {sample.size() >= wanted && bad == 0, d.str()};
}

Outcome antisymmetry_bound(int max_n) {
  std::size_t labelings = 0, worst = 0;
  for (int n = 2; n <= max_n; n += 2) {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> labels;
      for (int j = 0; j < n; ++j) labels.push_back((mask >> j & 1) != 0 ? 2 : 1);
      worst = std::max(worst, antisymmetries(labels).size());
      ++labelings;
    }
  }
  std::ostringstream d;
  d << labelings << " labelings of even polygons up to " << max_n
    << " vertices, largest antisymmetry count " << worst;
  return {worst <= 2, d.str()};
}

Outcome hurwitz_laws(const AcceptanceOptions& opt, int tuples) {
  Rng rng(opt.seed + 1);
  std::uniform_int_distribution<int> size(2, 6);
  std::size_t checks = 0, failures = 0;
  auto expect = [&](bool ok) {
    ++checks;
    if (!ok) ++failures;
  };
  for (int t = 0; t < tuples; ++t) {
    const Factorization f = random_band_tuple(rng, size(rng), 3);
    const int k = static_cast<int>(f.size());
    const FactorizationKey key = canonical_key(f);
    for (int i = 1; i < k; ++i) {
      const Factorization fwd = sigma_move(f, i);
      const Factorization back = sigma_move(f, i, true);
      expect(canonical_key(sigma_move(fwd, i, true)) == key);
      expect(canonical_key(sigma_move(back, i)) == key);
      expect(fwd.product() == f.product() && back.product() == f.product());
      if (i + 1 < k) {
        expect(canonical_key(apply_moves(f, {{i, false}, {i + 1, false}, {i, false}})) ==
               canonical_key(apply_moves(f, {{i + 1, false}, {i, false}, {i + 1, false}})));
      }
      for (int j = i + 2; j < k; ++j) {
        expect(canonical_key(apply_moves(f, {{i, false}, {j, false}})) ==
               canonical_key(apply_moves(f, {{j, false}, {i, false}})));
      }
    }
  }
  std::ostringstream d;
  d << tuples << " tuples, " << checks << " identities, " << failures << " failures";
  return {failures == 0, d.str()};
}

// Total letters of the canonical factors.
std::size_t weight(const Factorization& f) {
  std::size_t w = 0;
  for (const CanonicalBraid& b : f.factors()) {
    w += 3 * static_cast<std::size_t>(std::abs(b.inf())) + b.tail().size();
  }
  return w;
}

constexpr std::size_t kAnchorStates = 300;

// Least key of minimum weight among tuples reachable from f by moves that
// never raise the weight, exploring at most `budget` tuples.
FactorizationKey descent_anchor(const Factorization& f, std::size_t budget) {
  const std::size_t bound = weight(f);
  std::set<FactorizationKey> seen{canonical_key(f)};
  std::deque<Factorization> queue{f};
  std::pair<std::size_t, FactorizationKey> best{bound, canonical_key(f)};
  while (!queue.empty() && seen.size() < budget) {
    const Factorization cur = std::move(queue.front());
    queue.pop_front();
    for (int i = 1; i < static_cast<int>(cur.size()); ++i) {
      for (bool inverse : {false, true}) {
        Factorization next = sigma_move(cur, i, inverse);
        const std::size_t w = weight(next);
        if (w > bound) continue;
        FactorizationKey key = canonical_key(next);
        if (!seen.insert(key).second) continue;
        best = std::min(best, std::pair{w, key});
        queue.push_back(std::move(next));
      }
    }
  }
  return best.second;
}

Outcome completeness(const AcceptanceOptions& opt, int conjugator_length) {
  const auto bands = bands_up_to(conjugator_length);
  const char* pilots[] = {"D", "D^2", "s1 s2", kExample, "s1^2 s2^2", "s1 s2^-1 s1 s2 s1"};
  std::ostringstream d;
  d << bands.size() << " bands;";
  bool ok = true;
  for (const char* text : pilots) {
    const Word x = parse_word(text);
    const auto reps = orbit_representatives(x, Structure::Classical, opt.limits);
    const auto tuples =
        band_factorizations(normalize(x), exponent_sum(x), bands);
    // Tuples meeting the same descent anchor are joined by explicit moves, so
    // one search per anchor settles the whole group.
    std::map<FactorizationKey, std::vector<std::size_t>> groups;
    for (std::size_t t = 0; t < tuples.size(); ++t) {
      groups[descent_anchor(tuples[t], kAnchorStates)].push_back(t);
    }
    std::set<FactorizationKey> rep_anchors;
    for (const Candidate& r : reps) rep_anchors.insert(descent_anchor(r.factorization, kAnchorStates));
    std::size_t missed = 0, undecided = 0;
    for (const auto& [anchor, members] : groups) {
      bool found = rep_anchors.contains(anchor);
      bool capped = false;
      for (std::size_t i = 0; i < reps.size() && !found; ++i) {
        try {
          found = equivalent(reps[i].factorization, tuples[members.front()], opt.limits).equivalent;
        } catch (const CapExceeded&) {
          capped = true;
        }
      }
      if (!found) (capped ? undecided : missed) += members.size();
    }
    d << ' ' << text << ": " << tuples.size() << " tuples, " << reps.size() << " orbits";
    if (missed + undecided > 0) d << ", " << missed << " unmatched, " << undecided << " undecided";
    d << ';';
    ok = ok && missed == 0 && undecided == 0;
  }
  return {ok, d.str()};
}

Outcome orbit_closure(const AcceptanceOptions& opt) {
  // Braids from the sweeps above, the worked example first.
  std::vector<Word> corpus{parse_word(kExample)};
  for (const Word& w : positive_words_up_to(8, artin_letters())) corpus.push_back(w);
  for (const Word& x : corpus) {
    for (const Candidate& c : orbit_representatives(x, Structure::Classical, opt.limits)) {
      std::size_t first = 0;
      try {
        first = orbit(c.factorization, opt.limits).size();
        const std::size_t again = orbit(c.factorization, opt.limits).size();
        if (first != again) return {false, "orbit size changed between runs for " + format_word(x)};
      } catch (const CapExceeded& e) {
        std::ostringstream d;
        d << "orbit of the representative " << positions_text(c.positions) << " of "
          << format_word(x) << " hit the cap after " << e.explored() << " tuples";
        if (c.factorization.size() == 2) {
          const auto axis = sl2::band_axis(sl2::matrix_of(c.factorization[0]));
          const bool infinite =
              axis && !sl2::stabilizing_power(sl2::matrix_of(c.factorization.product()), *axis);
          if (infinite) d << "; that orbit is provably infinite (the product acts by a "
                             "non-elliptic matrix that moves the first band's axis)";
        }
        return {false, d.str()};
      }
    }
  }
  return {true, std::to_string(corpus.size()) + " braids, every orbit closed"};
}

Outcome rewrite_engines(const AcceptanceOptions& opt, int shift_instances) {
  std::size_t positions = 0, match_failures = 0;
  for (int p = 1; p <= 3; ++p) {
    for (const Word& w : dual_power_words(p)) {
      for (int i = 1; i <= static_cast<int>(w.size()); ++i) {
        ++positions;
        try {
          const LetterMatch m = find_complementary_letter(w, i);
          const int lo = std::min(i, m.position), hi = std::max(i, m.position);
          const bool side_ok = (m.side == MatchSide::LeftOfU) == (m.position < i);
          std::vector<Letter> middle(w.letters().begin() + lo, w.letters().begin() + hi - 1);
          std::vector<Letter> whole(w.letters().begin() + lo - 1, w.letters().begin() + hi);
          const bool ok = side_ok && hi - lo == 2 * m.k + 1 &&
                          sl2::equal(Word(middle, Alphabet::Bkl), dual_twist_word(m.k)) &&
                          sl2::equal(Word(whole, Alphabet::Bkl), dual_twist_word(m.k + 1));
          if (!ok) ++match_failures;
        } catch (const Error&) {
          ++match_failures;
        }
      }
    }
  }

  Rng rng(opt.seed + 2);
  std::uniform_int_distribution<int> length(2, 8);
  int built = 0, shift_failures = 0;
  for (int attempt = 0; built < shift_instances && attempt < 2'000'000; ++attempt) {
    const Word w = random_positive_word(rng, length(rng), Alphabet::Bkl);
    const int n = static_cast<int>(w.size());
    const int i = std::uniform_int_distribution<int>(1, n - 1)(rng);
    if (!sl2::equal(Word({w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]}, Alphabet::Bkl),
                    dual_twist_word(1))) {
      continue;
    }
    const auto mask = std::uniform_int_distribution<std::uint32_t>(0, (1u << n) - 1)(rng);
    if (((mask >> (i - 1)) & 1u) == ((mask >> i) & 1u)) continue;
    std::vector<int> chosen;
    for (int j = 0; j < n; ++j) {
      if ((mask >> j & 1u) != 0) chosen.push_back(j + 1);
    }
    const IndexSet set(chosen);
    const Word kept = remove_positions(w, set);
    const int e = exponent_sum(kept);
    if (e == 0 || e % 2 != 0 || !oracle_is_garside_power(kept, e / 2, Structure::Dual)) continue;
    ++built;
    try {
      const IndexShift s = shift_off_dual_pair(w, set, i);
      const bool ok =
          s.positions.size() == set.size() && !s.positions.contains(i) &&
          !s.positions.contains(i + 1) &&
          oracle_is_garside_power(remove_positions(w, s.positions), e / 2, Structure::Dual) &&
          canonical_key(apply_moves(build_factorization(w, set), s.moves)) ==
              canonical_key(build_factorization(w, s.positions));
      if (!ok) ++shift_failures;
    } catch (const Error&) {
      ++shift_failures;
    }
  }
  std::ostringstream d;
  d << positions << " positions in powers of d up to d^3, " << match_failures
    << " match failures; " << built << " shift instances, " << shift_failures
    << " replay failures";
  return {match_failures == 0 && built >= shift_instances && shift_failures == 0, d.str()};
}

Outcome pruning_soundness(int max_length) {
  std::size_t cases = 0, mismatches = 0;
  std::string first_bad;
  for (const Word& w : positive_words_up_to(max_length, artin_letters())) {
    for (int p = 0; p <= 3; ++p) {
      ++cases;
      if (enumerate_index_sets(w, p) != unpruned_index_sets(w, p, Structure::Classical)) {
        if (mismatches++ == 0) first_bad = format_word(w) + " p=" + std::to_string(p);
      }
    }
  }
  std::ostringstream d;
  d << cases << " (word, p) cases up to length " << max_length << ", " << mismatches
    << " mismatches";
  if (mismatches > 0) d << " (first: " << first_bad << ")";
  return {mismatches == 0, d.str()};
}

}  // namespace

std::string format_result(const CriterionResult& r) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << " [" << r.title << "] "
      << r.detail << " (" << r.seconds << " s)";
  return out.str();
}

std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& opt, const std::function<void(const CriterionResult&)>& report) {
  const bool full = opt.level == Level::Full;
  struct Item {
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Item> items = {
      {"worked example has two orbits", [&] { return example_two_orbits(opt, 10.0); }},
      {"positive words have one orbit",
       [&] { return positive_words_single_orbit(opt, full ? 8 : 6, Structure::Classical); }},
      {"band-positive words have one orbit",
       [&] { return positive_words_single_orbit(opt, full ? 6 : 5, Structure::Dual); }},
      {"exponent sum 2 orbit counts", [&] { return e2_orbit_counts(opt, full ? 200 : 100); }},
      {"at most two antisymmetries", [&] { return antisymmetry_bound(full ? 12 : 10); }},
      {"Hurwitz action laws", [&] { return hurwitz_laws(opt, full ? 1000 : 200); }},
      {"representatives cover brute-force factorizations",
       [&] { return completeness(opt, full ? 4 : 3); }},
      {"orbit search closes", [&] { return orbit_closure(opt); }},
      {"letter matching and index shifting",
       [&] { return rewrite_engines(opt, full ? 500 : 100); }},
      {"pruned enumeration matches exhaustive", [&] { return pruning_soundness(full ? 10 : 8); }},
  };
  std::vector<CriterionResult> results;
  for (std::size_t j = 0; j < items.size(); ++j) {
    CriterionResult r;
    r.id = static_cast<int>(j) + 1;
    r.title = items[j].title;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome o = items[j].run();
      r.pass = o.pass;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("aborted: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (report) report(r);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace braid3::selftest
