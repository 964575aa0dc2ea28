#include "braid3/garside.hpp"

#include <algorithm>

#include "braid3/errors.hpp"

namespace braid3 {

namespace {

Generator twist(Generator g, Structure s, int times) {
  if (s == Structure::Classical) return (times % 2 != 0) ? flip(g) : g;
  return rotate(g, times);
}

const char* name(Generator g) {
  switch (g) {
    case Generator::s0: return "s0";
    case Generator::s1: return "s1";
    case Generator::s2: return "s2";
  }
  return "?";
}

}  // namespace

Word Simple::word() const {
  return Word::positive(letters, structure == Structure::Dual ? Alphabet::Bkl
                                                              : Alphabet::Artin);
}

CanonicalBraid CanonicalBraid::garside_power(int t, Structure structure) {
  CanonicalBraid b(structure);
  b.inf_ = t;
  return b;
}

CanonicalBraid CanonicalBraid::from_word(const Word& w, Structure structure) {
  CanonicalBraid b(structure);
  b.append(w);
  return b;
}

std::size_t CanonicalBraid::factor_count() const noexcept {
  if (structure_ == Structure::Dual) return tail_.size();
  if (tail_.empty()) return 0;
  std::size_t n = 1;
  for (std::size_t i = 1; i < tail_.size(); ++i) {
    if (tail_[i] == tail_[i - 1]) ++n;
  }
  return n;
}

std::vector<Simple> CanonicalBraid::factors() const {
  std::vector<Simple> out;
  for (std::size_t i = 0; i < tail_.size(); ++i) {
    const bool cut = structure_ == Structure::Dual || i == 0 || tail_[i] == tail_[i - 1];
    if (cut) out.push_back(Simple{structure_, {}});
    out.back().letters.push_back(tail_[i]);
  }
  return out;
}

int CanonicalBraid::exponent_sum() const noexcept {
  const int garside_e = structure_ == Structure::Classical ? 3 : 2;
  return garside_e * inf_ + static_cast<int>(tail_.size());
}

void CanonicalBraid::twist_tail(int times) {
  const int period = structure_ == Structure::Classical ? 2 : 3;
  pending_ = ((pending_ + times) % period + period) % period;
}

void CanonicalBraid::settle() {
  if (pending_ == 0) return;
  for (Generator& g : tail_) g = twist(g, structure_, pending_);
  pending_ = 0;
}

Generator CanonicalBraid::last() const { return twist(tail_.back(), structure_, pending_); }

void CanonicalBraid::push(Generator g) { tail_.push_back(twist(g, structure_, -pending_)); }

void CanonicalBraid::append_positive(Generator g) {
  const std::size_t n = tail_.size();
  if (structure_ == Structure::Classical) {
    // Twisting preserves (in)equality of letters, so stored letters compare.
    const Generator stored = twist(g, structure_, -pending_);
    if (n >= 2 && tail_[n - 1] != stored && tail_[n - 2] == stored) {
      // ... g h g = ... D = D tau(...)
      tail_.resize(n - 2);
      ++inf_;
      twist_tail(1);
      return;
    }
  } else if (n > 0 && last() == rotate(g)) {
    // rotate(g) g is one of s2 s1, s1 s0, s0 s2, all equal to d
    tail_.pop_back();
    ++inf_;
    twist_tail(1);
    return;
  }
  push(g);
}

void CanonicalBraid::append_negative(Generator g) {
  if (!tail_.empty() && last() == g) {
    tail_.pop_back();
    return;
  }
  if (structure_ == Structure::Classical) {
    // g^-1 = flip(g) g D^-1
    append_positive(flip(g));
    append_positive(g);
  } else {
    // g y = d for y = rotate(g, -1), so g^-1 = y d^-1
    append_positive(rotate(g, -1));
  }
  --inf_;
  twist_tail(-1);
}

void CanonicalBraid::append_unsettled(Letter l) {
  if (structure_ == Structure::Classical && l.gen == Generator::s0) {
    // s0^e = s1^-1 s2^e s1
    append_negative(Generator::s1);
    if (l.inverse) {
      append_negative(Generator::s2);
    } else {
      append_positive(Generator::s2);
    }
    append_positive(Generator::s1);
  } else if (l.inverse) {
    append_negative(l.gen);
  } else {
    append_positive(l.gen);
  }
}

void CanonicalBraid::append(Letter l) {
  append_unsettled(l);
  settle();
}

void CanonicalBraid::append(const Word& w) {
  for (const Letter& l : w.letters()) append_unsettled(l);
  settle();
}

void CanonicalBraid::append_garside_power(int s) {
  inf_ += s;
  twist_tail(s);
  settle();
}

CanonicalBraid CanonicalBraid::operator*(const CanonicalBraid& rhs) const {
  if (rhs.structure_ != structure_) {
    throw PreconditionError("cannot multiply canonical forms of different structures");
  }
  CanonicalBraid out = *this;
  out.inf_ += rhs.inf_;
  out.twist_tail(rhs.inf_);
  for (Generator g : rhs.tail_) out.append_positive(g);
  out.settle();
  return out;
}

CanonicalBraid CanonicalBraid::inverse() const {
  CanonicalBraid out(structure_);
  for (auto it = tail_.rbegin(); it != tail_.rend(); ++it) out.append_negative(*it);
  out.inf_ -= inf_;
  out.twist_tail(-inf_);
  out.settle();
  return out;
}

Word CanonicalBraid::to_word() const {
  Word head = structure_ == Structure::Classical ? half_twist_word(inf_)
                                                 : dual_twist_word(inf_);
  const bool band = std::find(tail_.begin(), tail_.end(), Generator::s0) != tail_.end();
  return head * Word::positive(tail_, band ? Alphabet::Bkl : Alphabet::Artin);
}

std::string CanonicalBraid::to_string() const {
  std::string out = structure_ == Structure::Classical ? "D^" : "d^";
  out += std::to_string(inf_);
  for (const Simple& f : factors()) {
    out += " ·";
    for (Generator g : f.letters) {
      out += ' ';
      out += name(g);
    }
  }
  return out;
}

CanonicalBraid normalize(const Word& w, Structure structure) {
  return CanonicalBraid::from_word(w, structure);
}

bool equal(const Word& u, const Word& v) {
  return normalize(u) == normalize(v);
}

namespace {

Word garside_word(int p, Structure s) {
  return s == Structure::Classical ? half_twist_word(p) : dual_twist_word(p);
}

void require_nonnegative(int p) {
  if (p < 0) throw PreconditionError("Garside exponent must be non-negative");
}

}  // namespace

bool is_garside_power(const Word& w, int p, Structure structure) {
  require_nonnegative(p);
  if (!w.is_positive()) throw PreconditionError("is_garside_power expects a positive word");
  return normalize(w, structure) == CanonicalBraid::garside_power(p, structure);
}

bool is_prefix_divisor(const Word& prefix, int p, Structure structure) {
  require_nonnegative(p);
  if (!prefix.is_positive()) {
    throw PreconditionError("is_prefix_divisor expects a positive word");
  }
  CanonicalBraid q = normalize(invert(prefix), structure);
  q.append(garside_word(p, structure));
  return q.inf() >= 0;
}

PositiveForm to_positive_form(const Word& w) {
  const Word reduced = free_reduce(bkl_to_artin(w));
  std::vector<Generator> out;
  int p = 0;
  for (const Letter& l : reduced.letters()) {
    // D^-p x = tau^p(x) D^-p
    const Generator g = (p % 2 != 0) ? flip(l.gen) : l.gen;
    if (!l.inverse) {
      out.push_back(g);
    } else {
      out.push_back(flip(g));
      out.push_back(g);
      ++p;
    }
  }
  return {Word::positive(out, Alphabet::Artin), p};
}

PositiveForm to_dual_positive_form(const Word& w) {
  const Word reduced = free_reduce(w);
  std::vector<Generator> out;
  int p = 0;
  for (const Letter& l : reduced.letters()) {
    const Generator g = rotate(l.gen, p);
    if (!l.inverse) {
      out.push_back(g);
    } else {
      out.push_back(rotate(g, -1));
      ++p;
    }
  }
  return {Word::positive(out, Alphabet::Bkl), p};
}

CanonicalBraid conjugate(const CanonicalBraid& x, const CanonicalBraid& g) {
  return g.inverse() * x * g;
}

}  // namespace braid3
