#include "braid3/bands.hpp"

#include <algorithm>

#include "braid3/factor_search.hpp"

namespace braid3 {

bool is_band(const Word& x) { return exponent_sum(x) == 1 && is_quasipositive(x); }

bool is_band(const CanonicalBraid& x) { return is_band(x.to_word()); }

bool validate_factorization(const Word& x, const std::vector<Word>& factors) {
  if (!std::all_of(factors.begin(), factors.end(), [](const Word& f) { return is_band(f); })) {
    return false;
  }
  CanonicalBraid product;
  for (const Word& f : factors) product.append(f);
  return product == normalize(x);
}

}  // namespace braid3
