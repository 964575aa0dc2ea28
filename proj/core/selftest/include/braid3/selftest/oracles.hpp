#pragma once

// Independent checks used by the tests and the acceptance sweeps. Equality
// goes through the SL(2,Z) image and the exponent sum, never through the
// Garside normal forms under test.

#include <cstdint>
#include <random>
#include <vector>

#include "braid3/factor_search.hpp"
#include "braid3/hurwitz.hpp"
#include "braid3/word.hpp"

namespace braid3::selftest {

using Rng = std::mt19937_64;

/// All positive words of exactly this length over the given letters, in
/// lexicographic order of the letter list.
std::vector<Word> positive_words(int length, const std::vector<Generator>& letters,
                                 Alphabet alphabet = Alphabet::Artin);

/// Lengths 1 .. max_length.
std::vector<Word> positive_words_up_to(int max_length, const std::vector<Generator>& letters,
                                       Alphabet alphabet = Alphabet::Artin);

/// Freely reduced words over s1^+-1, s2^+-1 of length <= max_length.
std::vector<Word> reduced_words_up_to(int max_length);

/// w equals D^p (or d^p) according to the matrix oracle.
bool oracle_is_garside_power(const Word& w, int p, Structure structure);

/// Every subset of the right size, tested one by one: minimality by
/// definition and the kept letters by the matrix oracle.
std::vector<IndexSet> unpruned_index_sets(const Word& w, int p, Structure structure);

/// Distinct bands A s1 A^-1 with |A| <= conjugator_length.
std::vector<CanonicalBraid> bands_up_to(int conjugator_length);

/// All k-tuples over `bands` multiplying to x (meet in the middle).
std::vector<Factorization> band_factorizations(const CanonicalBraid& x, int k,
                                               const std::vector<CanonicalBraid>& bands);

/// x is conjugate to s1 by some freely reduced word of length <= max_length.
bool conjugate_to_s1_by_search(const Word& x, int max_length);

/// Every positive band word equal to d^p, obtained from (s2 s1)^p by
/// closing under s2 s1 = s1 s0 = s0 s2.
std::vector<Word> dual_power_words(int p);

Word random_word(Rng& rng, int length, bool with_inverses = true);
Word random_positive_word(Rng& rng, int length, Alphabet alphabet = Alphabet::Artin);
CanonicalBraid random_band(Rng& rng, int max_conjugator_length);
Factorization random_band_tuple(Rng& rng, int size, int max_conjugator_length);

}  // namespace braid3::selftest
