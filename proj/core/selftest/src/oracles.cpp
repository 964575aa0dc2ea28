#include "braid3/selftest/oracles.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "braid3/sl2.hpp"

namespace braid3::selftest {

namespace {

constexpr Letter kArtinLetters[] = {
    {Generator::s1, false}, {Generator::s1, true}, {Generator::s2, false}, {Generator::s2, true}};

Word garside_word(int p, Structure s) {
  return s == Structure::Classical ? half_twist_word(p) : dual_twist_word(p);
}

// Calls visit(tuple) for every tuple of `size` indices into `count` items.
template <typename F>
void for_each_tuple(std::size_t count, int size, F&& visit) {
  std::vector<std::size_t> idx(static_cast<std::size_t>(size), 0);
  if (count == 0 && size > 0) return;
  while (true) {
    visit(idx);
    int j = size - 1;
    while (j >= 0 && ++idx[static_cast<std::size_t>(j)] == count) idx[static_cast<std::size_t>(j--)] = 0;
    if (j < 0) return;
  }
}

}  // namespace

std::vector<Word> positive_words(int length, const std::vector<Generator>& letters,
                                 Alphabet alphabet) {
  std::vector<Word> out;
  for_each_tuple(letters.size(), length, [&](const std::vector<std::size_t>& idx) {
    std::vector<Generator> gens;
    for (std::size_t i : idx) gens.push_back(letters[i]);
    out.push_back(Word::positive(gens, alphabet));
  });
  return out;
}

std::vector<Word> positive_words_up_to(int max_length, const std::vector<Generator>& letters,
                                       Alphabet alphabet) {
  std::vector<Word> out;
  for (int n = 1; n <= max_length; ++n) {
    auto batch = positive_words(n, letters, alphabet);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

std::vector<Word> reduced_words_up_to(int max_length) {
  std::vector<Word> out{Word()};
  std::vector<Word> layer{Word()};
  for (int n = 1; n <= max_length; ++n) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (Letter l : kArtinLetters) {
        if (!w.empty() && w.letters().back() == l.inverted()) continue;
        std::vector<Letter> letters = w.letters();
        letters.push_back(l);
        next.emplace_back(std::move(letters));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

bool oracle_is_garside_power(const Word& w, int p, Structure structure) {
  return sl2::equal(w, garside_word(p, structure));
}

std::vector<IndexSet> unpruned_index_sets(const Word& w, int p, Structure structure) {
  const int n = static_cast<int>(w.size());
  const int k = exponent_sum(w) - (structure == Structure::Classical ? 3 : 2) * p;
  std::vector<IndexSet> out;
  if (k < 0 || k > n) return out;
  // Subsets of size k in lexicographic order.
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) pick[static_cast<std::size_t>(j)] = j + 1;
  while (true) {
    const IndexSet set(pick);
    if (is_minimal(w, set) && oracle_is_garside_power(remove_positions(w, set), p, structure)) {
      out.push_back(set);
    }
    int j = k - 1;
    while (j >= 0 && pick[static_cast<std::size_t>(j)] == n - (k - 1 - j)) --j;
    if (j < 0) break;
    ++pick[static_cast<std::size_t>(j)];
    for (int r = j + 1; r < k; ++r) {
      pick[static_cast<std::size_t>(r)] = pick[static_cast<std::size_t>(r - 1)] + 1;
    }
  }
  return out;
}

std::vector<CanonicalBraid> bands_up_to(int conjugator_length) {
  std::set<CanonicalBraid> found;
  const Word s1 = Word::positive({Generator::s1});
  for (const Word& a : reduced_words_up_to(conjugator_length)) {
    found.insert(normalize(a * s1 * invert(a)));
  }
  return {found.begin(), found.end()};
}

std::vector<Factorization> band_factorizations(const CanonicalBraid& x, int k,
                                               const std::vector<CanonicalBraid>& bands) {
  std::vector<Factorization> out;
  if (k <= 0) {
    if (k == 0 && x.is_identity()) out.emplace_back();
    return out;
  }
  const int left_size = k / 2;
  const int right_size = k - left_size;
  std::map<CanonicalBraid, std::vector<std::vector<std::size_t>>> by_product;
  for_each_tuple(bands.size(), left_size, [&](const std::vector<std::size_t>& idx) {
    CanonicalBraid product;
    for (std::size_t i : idx) product = product * bands[i];
    by_product[product].push_back(idx);
  });
  for_each_tuple(bands.size(), right_size, [&](const std::vector<std::size_t>& idx) {
    CanonicalBraid product;
    for (std::size_t i : idx) product = product * bands[i];
    const auto it = by_product.find(x * product.inverse());
    if (it == by_product.end()) return;
    for (const auto& left : it->second) {
      std::vector<CanonicalBraid> factors;
      for (std::size_t i : left) factors.push_back(bands[i]);
      for (std::size_t i : idx) factors.push_back(bands[i]);
      out.emplace_back(std::move(factors));
    }
  });
  return out;
}

bool conjugate_to_s1_by_search(const Word& x, int max_length) {
  if (exponent_sum(x) != 1) return false;
  const Word s1 = Word::positive({Generator::s1});
  for (const Word& a : reduced_words_up_to(max_length)) {
    if (sl2::equal(invert(a) * x * a, s1)) return true;
  }
  return false;
}

std::vector<Word> dual_power_words(int p) {
  using Letters = std::vector<Generator>;
  const Letters pairs[] = {{Generator::s2, Generator::s1},
                           {Generator::s1, Generator::s0},
                           {Generator::s0, Generator::s2}};
  Letters start;
  for (int j = 0; j < p; ++j) {
    start.push_back(Generator::s2);
    start.push_back(Generator::s1);
  }
  std::set<Letters> seen{start};
  std::vector<Letters> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Letters current = queue[head];
    for (std::size_t i = 0; i + 1 < current.size(); ++i) {
      const Letters here{current[i], current[i + 1]};
      if (std::find(std::begin(pairs), std::end(pairs), here) == std::end(pairs)) continue;
      for (const Letters& other : pairs) {
        Letters next = current;
        next[i] = other[0];
        next[i + 1] = other[1];
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
  }
  std::vector<Word> out;
  for (const Letters& w : seen) out.push_back(Word::positive(w, Alphabet::Bkl));
  return out;
}

Word random_word(Rng& rng, int length, bool with_inverses) {
  std::uniform_int_distribution<int> pick(0, with_inverses ? 3 : 1);
  std::vector<Letter> letters;
  for (int j = 0; j < length; ++j) {
    const int r = pick(rng);
    letters.push_back({r % 2 == 0 ? Generator::s1 : Generator::s2, r >= 2});
  }
  return Word(std::move(letters));
}

Word random_positive_word(Rng& rng, int length, Alphabet alphabet) {
  std::uniform_int_distribution<int> pick(alphabet == Alphabet::Bkl ? 0 : 1, 2);
  std::vector<Generator> gens;
  for (int j = 0; j < length; ++j) gens.push_back(static_cast<Generator>(pick(rng)));
  return Word::positive(gens, alphabet);
}

CanonicalBraid random_band(Rng& rng, int max_conjugator_length) {
  std::uniform_int_distribution<int> len(0, max_conjugator_length);
  const Word a = free_reduce(random_word(rng, len(rng)));
  const Word g = Word::positive({std::uniform_int_distribution<int>(0, 1)(rng) == 0
                                     ? Generator::s1
                                     : Generator::s2});
  return normalize(a * g * invert(a));
}

Factorization random_band_tuple(Rng& rng, int size, int max_conjugator_length) {
  std::vector<CanonicalBraid> factors;
  for (int j = 0; j < size; ++j) factors.push_back(random_band(rng, max_conjugator_length));
  return Factorization(std::move(factors));
}

}  // namespace braid3::selftest
