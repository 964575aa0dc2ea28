#pragma once

// The Hurwitz action of B_k on k-tuples of bands.
//
// Orbits are usually infinite: two moves on a pair conjugate it by the pair's
// product, so only finitely many *orbits* exist, not finitely many tuples.
// Equivalence is therefore decided exactly for tuples of length <= 2 (via the
// SL(2,Z) image of the product) and by a budgeted bidirectional search for
// longer tuples. A spent budget is reported as CapExceeded, never as "no".

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "braid3/garside.hpp"

namespace braid3 {

class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<CanonicalBraid> factors);

  static Factorization from_words(const std::vector<Word>& words);

  const std::vector<CanonicalBraid>& factors() const noexcept { return factors_; }
  const CanonicalBraid& product() const noexcept { return product_; }
  std::size_t size() const noexcept { return factors_.size(); }
  const CanonicalBraid& operator[](std::size_t i) const { return factors_[i]; }

  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<CanonicalBraid> factors_;
  CanonicalBraid product_;
};

/// Sigma_i (1-based) or its inverse.
struct Move {
  int index = 1;
  bool inverse = false;
  friend bool operator==(Move, Move) = default;
};
using MoveSequence = std::vector<Move>;

std::string format_moves(const MoveSequence& moves);

struct SearchLimits {
  std::size_t max_states = 1'000'000;
  /// Total tail letters held by stored states; guards orbits whose members
  /// keep growing.
  std::size_t max_letters = 50'000'000;
};

/// Forward: (X_i, X_i+1) -> (X_i X_i+1 X_i^-1, X_i).
/// Inverse: (X_i, X_i+1) -> (X_i+1, X_i+1^-1 X_i X_i+1).
/// Throws PreconditionError unless 1 <= i < size.
Factorization sigma_move(const Factorization& f, int i, bool inverse = false);
Factorization apply_moves(const Factorization& f, const MoveSequence& moves);

/// Bytes that coincide exactly when lengths and all canonical forms agree.
/// The empty tuple has the empty key.
using FactorizationKey = std::string;
FactorizationKey canonical_key(const Factorization& f);

/// Breadth-first closure under all moves, sorted by key. Throws CapExceeded
/// when the limits are reached before closure.
std::vector<Factorization> orbit(const Factorization& f, const SearchLimits& limits = {});

struct Equivalence {
  bool equivalent = false;
  MoveSequence witness;  ///< replaying it on the first tuple gives the second
};

Equivalence equivalent(const Factorization& a, const Factorization& b,
                       const SearchLimits& limits = {});

/// Orbit size: a number, or nullopt for a certified infinite orbit.
/// Throws CapExceeded when neither could be established.
std::optional<std::size_t> orbit_size(const Factorization& f, const SearchLimits& limits = {});

/// Groups of input indices, one per Hurwitz class. Groups are ordered by
/// their least canonical key, and indices within a group ascend.
std::vector<std::vector<std::size_t>> orbit_partition(std::span<const Factorization> fs,
                                                      const SearchLimits& limits = {});

}  // namespace braid3
