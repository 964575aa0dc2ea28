#pragma once

// Exact word problem in B3 through Garside normal forms.
//
// Classical structure: Garside element D = s1 s2 s1, proper simples
// s1, s2, s1 s2, s2 s1. Dual structure: Garside element d = s2 s1, proper
// simples s0, s1, s2 with s2 s1 = s1 s0 = s0 s2 = d.
//
// In both structures a positive braid that is not divisible by the Garside
// element has exactly one positive spelling: the one avoiding s1 s2 s1 and
// s2 s1 s2 (classical), or the pairs s2 s1, s1 s0, s0 s2 (dual). A canonical
// braid is therefore stored as (inf, that spelling). The left-greedy factors
// are the maximal alternating runs (classical) or single letters (dual).

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "braid3/word.hpp"

namespace braid3 {

enum class Structure { Classical, Dual };

struct Simple {
  Structure structure = Structure::Classical;
  std::vector<Generator> letters;

  Word word() const;
  friend bool operator==(const Simple&, const Simple&) = default;
};

class CanonicalBraid {
 public:
  explicit CanonicalBraid(Structure structure = Structure::Classical)
      : structure_(structure) {}

  static CanonicalBraid garside_power(int t, Structure structure = Structure::Classical);
  static CanonicalBraid from_word(const Word& w, Structure structure = Structure::Classical);

  Structure structure() const noexcept { return structure_; }
  int inf() const noexcept { return inf_; }
  int sup() const noexcept { return inf_ + static_cast<int>(factor_count()); }
  std::size_t factor_count() const noexcept;
  std::vector<Simple> factors() const;

  /// The positive word after the Garside power, free of the Garside element.
  const std::vector<Generator>& tail() const noexcept { return tail_; }
  bool is_identity() const noexcept { return inf_ == 0 && tail_.empty(); }
  int exponent_sum() const noexcept;

  /// Right multiplication, keeping the form canonical.
  void append(Letter l);
  void append(const Word& w);
  void append_garside_power(int s);

  CanonicalBraid operator*(const CanonicalBraid& rhs) const;
  CanonicalBraid inverse() const;

  /// Garside power as D/d letters followed by the tail.
  Word to_word() const;
  /// "D^t · s1 s2 · s2" (dual: "d^t · s0 · s1").
  std::string to_string() const;

  friend auto operator<=>(const CanonicalBraid&, const CanonicalBraid&) = default;
  friend bool operator==(const CanonicalBraid&, const CanonicalBraid&) = default;

 private:
  void append_positive(Generator g);
  void append_negative(Generator g);
  void append_unsettled(Letter l);
  // The tail is twisted lazily: stored letter j reads as twist^pending_(j)
  // until settle() rewrites it. Public members always leave pending_ = 0.
  void twist_tail(int times);
  void settle();
  Generator last() const;
  void push(Generator g);

  Structure structure_;
  int inf_ = 0;
  std::vector<Generator> tail_;
  int pending_ = 0;
};

CanonicalBraid normalize(const Word& w, Structure structure = Structure::Classical);

/// Equality in B3; band words are converted to the Artin alphabet first.
bool equal(const Word& u, const Word& v);

/// w == D^p (classical) or d^p (dual). w must be positive; p >= 0.
bool is_garside_power(const Word& w, int p, Structure structure = Structure::Classical);

/// prefix left-divides D^p (resp. d^p): prefix^-1 D^p has inf >= 0.
bool is_prefix_divisor(const Word& prefix, int p, Structure structure = Structure::Classical);

struct PositiveForm {
  Word word;
  int p = 0;
};

/// w = W D^-p with W positive over {s1, s2}. Negative letters of the freely
/// reduced input are eliminated left to right with s1^-1 = s2 s1 D^-1 and
/// s2^-1 = s1 s2 D^-1; p counts them.
PositiveForm to_positive_form(const Word& w);

/// w = W d^-p with W positive over {s0, s1, s2}, using x^-1 = y d^-1 where
/// x y = d.
PositiveForm to_dual_positive_form(const Word& w);

/// Canonical form of g^-1 x g.
CanonicalBraid conjugate(const CanonicalBraid& x, const CanonicalBraid& g);

}  // namespace braid3
