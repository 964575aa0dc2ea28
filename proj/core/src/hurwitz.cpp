#include "braid3/hurwitz.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "braid3/errors.hpp"
#include "braid3/sl2.hpp"

namespace braid3 {

Factorization::Factorization(std::vector<CanonicalBraid> factors)
    : factors_(std::move(factors)) {
  for (const CanonicalBraid& f : factors_) product_ = product_ * f;
}

Factorization Factorization::from_words(const std::vector<Word>& words) {
  std::vector<CanonicalBraid> fs;
  fs.reserve(words.size());
  for (const Word& w : words) fs.push_back(normalize(w));
  return Factorization(std::move(fs));
}

std::string format_moves(const MoveSequence& moves) {
  std::string out;
  for (const Move& m : moves) {
    if (!out.empty()) out += ' ';
    out += "S" + std::to_string(m.index);
    if (m.inverse) out += "^-1";
  }
  return out;
}

Factorization sigma_move(const Factorization& f, int i, bool inverse) {
  if (i < 1 || static_cast<std::size_t>(i) >= f.size()) {
    throw PreconditionError("move index " + std::to_string(i) + " out of range for a " +
                            std::to_string(f.size()) + "-tuple");
  }
  std::vector<CanonicalBraid> out = f.factors();
  const CanonicalBraid& x = f[i - 1];
  const CanonicalBraid& y = f[i];
  if (!inverse) {
    out[i - 1] = x * y * x.inverse();
    out[i] = x;
  } else {
    out[i - 1] = y;
    out[i] = y.inverse() * x * y;
  }
  return Factorization(std::move(out));
}

Factorization apply_moves(const Factorization& f, const MoveSequence& moves) {
  Factorization cur = f;
  for (const Move& m : moves) cur = sigma_move(cur, m.index, m.inverse);
  return cur;
}

FactorizationKey canonical_key(const Factorization& f) {
  FactorizationKey key;
  const auto put32 = [&key](std::uint32_t v) {
    for (int shift = 24; shift >= 0; shift -= 8) key.push_back(static_cast<char>((v >> shift) & 0xff));
  };
  for (const CanonicalBraid& b : f.factors()) {
    // Offset binary keeps byte order consistent with numeric order.
    put32(static_cast<std::uint32_t>(b.inf()) ^ 0x80000000u);
    put32(static_cast<std::uint32_t>(b.tail().size()));
    for (Generator g : b.tail()) key.push_back(static_cast<char>('0' + static_cast<int>(g)));
  }
  return key;
}

namespace {

std::size_t letters_of(const Factorization& f) {
  std::size_t n = 0;
  for (const CanonicalBraid& b : f.factors()) n += b.tail().size() + 1;
  return n;
}

// Neighbour order: Sigma_{k-1}, Sigma_{k-1}^-1, ..., Sigma_1, Sigma_1^-1.
std::vector<Move> all_moves(std::size_t k) {
  std::vector<Move> out;
  for (int i = static_cast<int>(k) - 1; i >= 1; --i) {
    out.push_back({i, false});
    out.push_back({i, true});
  }
  return out;
}

sl2::Vector axis_of(const CanonicalBraid& band) {
  const auto axis = sl2::band_axis(sl2::matrix_of(band));
  if (!axis) throw PreconditionError("factor " + band.to_string() + " is not a band");
  return *axis;
}

MoveSequence power_of_first_move(long n) {
  return MoveSequence(static_cast<std::size_t>(n < 0 ? -n : n), Move{1, n < 0});
}

// For pairs, the orbit is {Sigma_1^n (a) : n in Z}, and Sigma_1^2 is
// conjugation by the product X. So b lies in the orbit iff b_1 is an
// X-power conjugate of a_1 or of a_1 a_2 a_1^-1.
Equivalence equivalent_pairs(const Factorization& a, const Factorization& b) {
  const sl2::Matrix x = sl2::matrix_of(a.product());
  const sl2::Vector target = axis_of(b[0]);
  const Factorization once = sigma_move(a, 1);
  const std::pair<const Factorization*, long> starts[] = {{&a, 0}, {&once, 1}};
  for (const auto& [start, offset] : starts) {
    const auto m = sl2::conjugating_power(x, axis_of((*start)[0]), target);
    if (!m) continue;
    const MoveSequence witness = power_of_first_move(offset + 2 * *m);
    if (canonical_key(apply_moves(a, witness)) != canonical_key(b)) {
      throw std::logic_error("pair equivalence witness failed to replay");
    }
    return {true, witness};
  }
  return {false, {}};
}

struct SearchNode {
  Factorization value;
  std::size_t parent;
  Move move;  // takes parent to this node
};

class Frontier {
 public:
  explicit Frontier(const Factorization& root) {
    add(root, kNone, Move{});
  }

  bool exhausted() const { return queue_.empty(); }

  std::optional<std::size_t> find(const FactorizationKey& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t pop() {
    const std::size_t id = std::get<2>(queue_.top());
    queue_.pop();
    return id;
  }

  std::size_t add(const Factorization& f, std::size_t parent, Move move) {
    const std::size_t id = nodes_.size();
    FactorizationKey key = canonical_key(f);
    queue_.emplace(letters_of(f), key, id);
    index_.emplace(std::move(key), id);
    letters_ += letters_of(f);
    nodes_.push_back({f, parent, move});
    return id;
  }

  const SearchNode& node(std::size_t id) const { return nodes_[id]; }
  std::size_t size() const { return nodes_.size(); }
  std::size_t letters() const { return letters_; }

  /// Moves taking the root to node `id`.
  MoveSequence path_to(std::size_t id) const {
    MoveSequence out;
    while (nodes_[id].parent != kNone) {
      out.push_back(nodes_[id].move);
      id = nodes_[id].parent;
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

 private:
  using Entry = std::tuple<std::size_t, FactorizationKey, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue_;
  std::unordered_map<FactorizationKey, std::size_t> index_;
  std::vector<SearchNode> nodes_;
  std::size_t letters_ = 0;
};

MoveSequence inverted(MoveSequence moves) {
  std::reverse(moves.begin(), moves.end());
  for (Move& m : moves) m.inverse = !m.inverse;
  return moves;
}

// Plain breadth-first search from a, moves tried in all_moves order, so a
// witness found here is shortest and the first such in that order.
std::optional<Equivalence> ordered_search(const Factorization& a, const FactorizationKey& target,
                                          std::size_t budget) {
  std::unordered_map<FactorizationKey, std::size_t> seen{{canonical_key(a), 0}};
  std::vector<SearchNode> nodes{{a, Frontier::kNone, Move{}}};
  const std::vector<Move> moves = all_moves(a.size());
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    for (const Move& m : moves) {
      Factorization next = sigma_move(nodes[head].value, m.index, m.inverse);
      FactorizationKey key = canonical_key(next);
      if (seen.count(key) != 0) continue;
      if (key == target) {
        MoveSequence witness{m};
        for (std::size_t id = head; nodes[id].parent != Frontier::kNone; id = nodes[id].parent) {
          witness.push_back(nodes[id].move);
        }
        std::reverse(witness.begin(), witness.end());
        return Equivalence{true, witness};
      }
      if (nodes.size() >= budget) return std::nullopt;
      seen.emplace(std::move(key), nodes.size());
      nodes.push_back({std::move(next), head, m});
    }
  }
  return Equivalence{false, {}};  // the whole orbit of a was listed
}

constexpr std::size_t kOrderedBudget = 20'000;

// Best-first from both ends, lowest total length first. Exact when it
// terminates: a meeting gives a witness, an exhausted side is a whole orbit.
Equivalence equivalent_search(const Factorization& a, const Factorization& b,
                              const SearchLimits& limits) {
  if (auto quick = ordered_search(a, canonical_key(b), std::min(kOrderedBudget, limits.max_states))) {
    return *quick;
  }
  Frontier sides[2] = {Frontier(a), Frontier(b)};
  const std::vector<Move> moves = all_moves(a.size());
  for (int turn = 0;; turn ^= 1) {
    Frontier& self = sides[turn];
    Frontier& other = sides[turn ^ 1];
    if (self.exhausted()) return {false, {}};
    const std::size_t id = self.pop();
    const Factorization current = self.node(id).value;
    for (const Move& m : moves) {
      Factorization next = sigma_move(current, m.index, m.inverse);
      const FactorizationKey key = canonical_key(next);
      if (self.find(key)) continue;
      if (auto hit = other.find(key)) {
        MoveSequence here = self.path_to(id);
        here.push_back(m);
        MoveSequence there = other.path_to(*hit);
        MoveSequence witness;
        if (turn == 0) {
          witness = here;
          const MoveSequence back = inverted(there);
          witness.insert(witness.end(), back.begin(), back.end());
        } else {
          witness = there;
          const MoveSequence back = inverted(here);
          witness.insert(witness.end(), back.begin(), back.end());
        }
        return {true, witness};
      }
      self.add(next, id, m);
      const std::size_t states = sides[0].size() + sides[1].size();
      if (states > limits.max_states ||
          sides[0].letters() + sides[1].letters() > limits.max_letters) {
        throw CapExceeded("Hurwitz equivalence search exceeded its budget", states);
      }
    }
  }
}

}  // namespace

std::vector<Factorization> orbit(const Factorization& f, const SearchLimits& limits) {
  std::unordered_map<FactorizationKey, std::size_t> seen;
  std::vector<Factorization> members{f};
  seen.emplace(canonical_key(f), 0);
  std::size_t letters = letters_of(f);
  const std::vector<Move> moves = all_moves(f.size());
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (const Move& m : moves) {
      Factorization next = sigma_move(members[head], m.index, m.inverse);
      FactorizationKey key = canonical_key(next);
      if (seen.count(key) != 0) continue;
      letters += letters_of(next);
      seen.emplace(std::move(key), members.size());
      members.push_back(std::move(next));
      if (members.size() > limits.max_states || letters > limits.max_letters) {
        throw CapExceeded("orbit exceeded the search cap", members.size());
      }
    }
  }
  std::vector<std::pair<FactorizationKey, std::size_t>> order;
  order.reserve(seen.size());
  for (auto& [key, id] : seen) order.emplace_back(key, id);
  std::sort(order.begin(), order.end());
  std::vector<Factorization> sorted;
  sorted.reserve(members.size());
  for (const auto& entry : order) sorted.push_back(std::move(members[entry.second]));
  return sorted;
}

Equivalence equivalent(const Factorization& a, const Factorization& b,
                       const SearchLimits& limits) {
  if (a.size() != b.size() || a.product() != b.product()) return {false, {}};
  if (canonical_key(a) == canonical_key(b)) return {true, {}};
  if (a.size() <= 1) return {false, {}};
  if (a.size() == 2) return equivalent_pairs(a, b);
  return equivalent_search(a, b, limits);
}

std::optional<std::size_t> orbit_size(const Factorization& f, const SearchLimits& limits) {
  if (f.size() <= 1) return 1;
  if (f.size() == 2) {
    const auto period = sl2::stabilizing_power(sl2::matrix_of(f.product()), axis_of(f[0]));
    if (!period) return std::nullopt;
    const FactorizationKey start = canonical_key(f);
    Factorization cur = f;
    for (long n = 1; n <= 2 * *period; ++n) {
      cur = sigma_move(cur, 1);
      if (canonical_key(cur) == start) return static_cast<std::size_t>(n);
    }
    throw std::logic_error("pair orbit did not close at twice its stabilizing power");
  }
  return orbit(f, limits).size();
}

std::vector<std::vector<std::size_t>> orbit_partition(std::span<const Factorization> fs,
                                                      const SearchLimits& limits) {
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    bool placed = false;
    std::optional<CapExceeded> undecided;
    for (auto& group : groups) {
      try {
        if (equivalent(fs[group.front()], fs[i], limits).equivalent) {
          group.push_back(i);
          placed = true;
          break;
        }
      } catch (const CapExceeded& e) {
        undecided = e;
      }
    }
    if (placed) continue;
    if (undecided) throw *undecided;
    groups.push_back({i});
  }
  std::vector<std::pair<FactorizationKey, std::size_t>> order;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    FactorizationKey least = canonical_key(fs[groups[g].front()]);
    for (std::size_t i : groups[g]) least = std::min(least, canonical_key(fs[i]));
    order.emplace_back(std::move(least), g);
  }
  std::sort(order.begin(), order.end());
  std::vector<std::vector<std::size_t>> sorted;
  for (const auto& entry : order) sorted.push_back(std::move(groups[entry.second]));
  return sorted;
}

}  // namespace braid3
