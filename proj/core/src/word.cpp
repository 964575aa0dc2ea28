#include "braid3/word.hpp"

#include <cctype>
#include <charconv>

#include "braid3/errors.hpp"

namespace braid3 {

namespace {

void check_alphabet(const std::vector<Letter>& letters, Alphabet alphabet) {
  if (alphabet == Alphabet::Bkl) return;
  for (const Letter& l : letters) {
    if (l.gen == Generator::s0) {
      throw AlphabetError("s0 is not a letter of the Artin alphabet");
    }
  }
}

Alphabet join(Alphabet a, Alphabet b) {
  return (a == Alphabet::Bkl || b == Alphabet::Bkl) ? Alphabet::Bkl
                                                    : Alphabet::Artin;
}

const char* generator_name(Generator g) {
  switch (g) {
    case Generator::s0: return "s0";
    case Generator::s1: return "s1";
    case Generator::s2: return "s2";
  }
  return "?";
}

}  // namespace

Word::Word(std::vector<Letter> letters, Alphabet alphabet)
    : letters_(std::move(letters)), alphabet_(alphabet) {
  check_alphabet(letters_, alphabet_);
}

Word Word::positive(std::initializer_list<Generator> gens, Alphabet alphabet) {
  return positive(std::vector<Generator>(gens), alphabet);
}

Word Word::positive(const std::vector<Generator>& gens, Alphabet alphabet) {
  std::vector<Letter> letters;
  letters.reserve(gens.size());
  for (Generator g : gens) letters.push_back({g, false});
  return Word(std::move(letters), alphabet);
}

bool Word::is_positive() const noexcept {
  for (const Letter& l : letters_) {
    if (l.inverse) return false;
  }
  return true;
}

bool Word::uses_s0() const noexcept {
  for (const Letter& l : letters_) {
    if (l.gen == Generator::s0) return true;
  }
  return false;
}

Word Word::with_alphabet(Alphabet alphabet) const {
  return Word(letters_, alphabet);
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(out), join(alphabet_, rhs.alphabet_));
}

Word parse_word(std::string_view text, Alphabet alphabet) {
  std::vector<Letter> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    while (pos < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    std::string_view token = text.substr(start, pos - start);
    std::string_view atom = token;
    long exponent = 1;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      atom = token.substr(0, caret);
      std::string_view digits = token.substr(caret + 1);
      if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
      auto [end, ec] =
          std::from_chars(digits.data(), digits.data() + digits.size(), exponent);
      if (digits.empty() || ec != std::errc() ||
          end != digits.data() + digits.size()) {
        throw ParseError("bad exponent in token '" + std::string(token) + "'",
                         start + caret + 1);
      }
      if (exponent > 100000 || exponent < -100000) {
        throw ParseError("exponent out of range in '" + std::string(token) + "'",
                         start + caret + 1);
      }
    }

    std::vector<Letter> unit;
    if (atom == "s1") {
      unit = {{Generator::s1, false}};
    } else if (atom == "s2") {
      unit = {{Generator::s2, false}};
    } else if (atom == "s0") {
      if (alphabet != Alphabet::Bkl) {
        throw AlphabetError("s0 at position " + std::to_string(start) +
                            " is not allowed in an Artin word");
      }
      unit = {{Generator::s0, false}};
    } else if (atom == "D") {
      unit = {{Generator::s1, false}, {Generator::s2, false}, {Generator::s1, false}};
    } else if (atom == "d") {
      unit = {{Generator::s2, false}, {Generator::s1, false}};
    } else {
      throw ParseError("unknown token '" + std::string(token) + "'", start);
    }

    if (exponent >= 0) {
      for (long r = 0; r < exponent; ++r) out.insert(out.end(), unit.begin(), unit.end());
    } else {
      std::vector<Letter> inv;
      for (auto it = unit.rbegin(); it != unit.rend(); ++it) inv.push_back(it->inverted());
      for (long r = 0; r < -exponent; ++r) out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return Word(std::move(out), alphabet);
}

Word parse_word_auto(std::string_view text) {
  const bool band = text.find("s0") != std::string_view::npos;
  return parse_word(text, band ? Alphabet::Bkl : Alphabet::Artin);
}

std::string format_word(const Word& w) {
  std::string out;
  const auto& ls = w.letters();
  std::size_t i = 0;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const long run = static_cast<long>(j - i);
    if (!out.empty()) out += ' ';
    out += generator_name(ls[i].gen);
    const long exponent = ls[i].inverse ? -run : run;
    if (exponent != 1) {
      out += '^';
      out += std::to_string(exponent);
    }
    i = j;
  }
  return out;
}

int exponent_sum(const Word& w) {
  int e = 0;
  for (const Letter& l : w.letters()) e += l.sign();
  return e;
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverted());
  }
  return Word(std::move(out), w.alphabet());
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const Letter& l : w.letters()) {
    if (!stack.empty() && stack.back() == l.inverted()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack), w.alphabet());
}

Word rotate_dual(const Word& w) {
  std::vector<Letter> out = w.letters();
  for (Letter& l : out) l.gen = rotate(l.gen);
  // s2 rotates to s0, so the image always lives in the band alphabet.
  return Word(std::move(out), Alphabet::Bkl);
}

Word flip_classical(const Word& w) {
  if (w.uses_s0()) {
    throw AlphabetError("D-conjugation of a word containing s0 leaves the alphabet");
  }
  std::vector<Letter> out = w.letters();
  for (Letter& l : out) l.gen = flip(l.gen);
  return Word(std::move(out), w.alphabet());
}

Word bkl_to_artin(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const Letter& l : w.letters()) {
    if (l.gen != Generator::s0) {
      out.push_back(l);
      continue;
    }
    // s0 = s1^-1 s2 s1
    out.push_back({Generator::s1, true});
    out.push_back({Generator::s2, l.inverse});
    out.push_back({Generator::s1, false});
  }
  return Word(std::move(out), Alphabet::Artin);
}

Word half_twist_word(int p) {
  std::vector<Letter> out;
  const bool inv = p < 0;
  for (int r = 0; r < (inv ? -p : p); ++r) {
    // D^-1 = s1^-1 s2^-1 s1^-1, a palindrome, so the pattern is the same.
    out.push_back({Generator::s1, inv});
    out.push_back({Generator::s2, inv});
    out.push_back({Generator::s1, inv});
  }
  return Word(std::move(out), Alphabet::Artin);
}

Word dual_twist_word(int p) {
  std::vector<Letter> out;
  for (int r = 0; r < (p < 0 ? -p : p); ++r) {
    if (p > 0) {
      out.push_back({Generator::s2, false});
      out.push_back({Generator::s1, false});
    } else {
      out.push_back({Generator::s1, true});
      out.push_back({Generator::s2, true});
    }
  }
  return Word(std::move(out), Alphabet::Artin);
}

}  // namespace braid3
