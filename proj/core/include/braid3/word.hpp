#pragma once

// Words over the Artin alphabet {s1, s2} and the band alphabet {s0, s1, s2}
// of the three-strand braid group.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace braid3 {

enum class Generator : std::uint8_t { s0 = 0, s1 = 1, s2 = 2 };

/// Conjugation by the half twist D = s1 s2 s1 swaps s1 and s2.
constexpr Generator flip(Generator g) noexcept {
  switch (g) {
    case Generator::s1: return Generator::s2;
    case Generator::s2: return Generator::s1;
    default: return g;
  }
}

/// Conjugation d^-1 (.) d by d = s2 s1 cycles s1 -> s2 -> s0 -> s1.
constexpr Generator rotate(Generator g, int times = 1) noexcept {
  int r = ((times % 3) + 3) % 3;
  int v = static_cast<int>(g);
  // s0=0, s1=1, s2=2 : s1->s2->s0 is +1 mod 3.
  return static_cast<Generator>((v + r) % 3);
}

struct Letter {
  Generator gen = Generator::s1;
  bool inverse = false;

  constexpr Letter inverted() const noexcept { return {gen, !inverse}; }
  constexpr int sign() const noexcept { return inverse ? -1 : 1; }
  friend constexpr bool operator==(Letter, Letter) = default;
};

enum class Alphabet { Artin, Bkl };

class Word {
 public:
  Word() = default;
  /// Throws AlphabetError if s0 appears in an Artin word.
  explicit Word(std::vector<Letter> letters, Alphabet alphabet = Alphabet::Artin);

  /// Positive word from a generator list.
  static Word positive(std::initializer_list<Generator> gens,
                       Alphabet alphabet = Alphabet::Artin);
  static Word positive(const std::vector<Generator>& gens,
                       Alphabet alphabet = Alphabet::Artin);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Alphabet alphabet() const noexcept { return alphabet_; }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  bool is_positive() const noexcept;
  bool uses_s0() const noexcept;

  /// Same letters, different alphabet tag. Throws if s0 is moved to Artin.
  Word with_alphabet(Alphabet alphabet) const;

  /// Concatenation; the result is a band word if either side is.
  Word operator*(const Word& rhs) const;

  /// Letterwise coincidence (the alphabet tag is ignored).
  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_;
  }

 private:
  std::vector<Letter> letters_;
  Alphabet alphabet_ = Alphabet::Artin;
};

/// Whitespace separated tokens `atom('^' int)?` with atoms s0 s1 s2 D d.
/// D = s1 s2 s1, d = s2 s1; a negative exponent repeats the inverted atom.
Word parse_word(std::string_view text, Alphabet alphabet = Alphabet::Artin);

/// Like parse_word, but picks the band alphabet when an s0 token is present.
Word parse_word_auto(std::string_view text);

/// Canonical token form with runs collapsed into exponents ("s1^2 s2^-1").
/// The empty word prints as the empty string.
std::string format_word(const Word& w);

int exponent_sum(const Word& w);
Word invert(const Word& w);
Word free_reduce(const Word& w);

/// Letterwise image under d-conjugation: represents d^-1 w d.
Word rotate_dual(const Word& w);
/// Letterwise image under D-conjugation: represents D^-1 w D. Artin only.
Word flip_classical(const Word& w);

/// Replaces every s0^(+-1) by (s1^-1 s2 s1)^(+-1).
Word bkl_to_artin(const Word& w);

/// D^p and d^p spelled out (negative p gives inverse letters).
Word half_twist_word(int p);
Word dual_twist_word(int p);

}  // namespace braid3
