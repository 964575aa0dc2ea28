#pragma once

// Bands are the conjugates of s1. A braid with exponent sum 1 is a band
// exactly when it is quasipositive: any band factorization of it has a
// single factor, and that factor is the braid itself.

#include <vector>

#include "braid3/garside.hpp"
#include "braid3/word.hpp"

namespace braid3 {

bool is_band(const Word& x);
bool is_band(const CanonicalBraid& x);

/// Every factor is a band and the factors multiply to x.
bool validate_factorization(const Word& x, const std::vector<Word>& factors);

}  // namespace braid3
