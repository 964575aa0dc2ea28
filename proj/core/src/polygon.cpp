#include "braid3/polygon.hpp"

#include <stdexcept>

#include "braid3/errors.hpp"
#include "braid3/factor_search.hpp"

namespace braid3 {

namespace {

Generator twist(Generator g, int p) { return p % 2 == 0 ? g : flip(g); }

int label_of(const std::vector<Generator>& block) { return static_cast<int>(block.size()); }

}  // namespace

bool RightNormalForm::is_closed() const {
  return !blocks.empty() && twist(blocks.back().back(), p) == blocks.front().front();
}

Word RightNormalForm::to_word() const {
  std::vector<Generator> letters;
  for (const auto& b : blocks) letters.insert(letters.end(), b.begin(), b.end());
  return Word::positive(letters) * half_twist_word(-p);
}

std::string RightNormalForm::to_string() const {
  std::string out;
  for (const auto& b : blocks) {
    if (!out.empty()) out += " · ";
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (j > 0) out += ' ';
      out += b[j] == Generator::s1 ? "s1" : "s2";
    }
  }
  return out + " · D^" + std::to_string(-p);
}

RightNormalForm right_normal_form(const CanonicalBraid& x) {
  if (x.structure() != Structure::Classical) return right_normal_form(x.to_word());
  if (x.tail().empty()) throw PreconditionError("a power of D has no right normal form");
  // D^t T = tau^t(T) D^t.
  RightNormalForm out;
  out.p = -x.inf();
  for (Generator g : x.tail()) {
    const Generator h = twist(g, x.inf());
    if (out.blocks.empty() || out.blocks.back().back() == h) {
      out.blocks.push_back({h});
    } else {
      out.blocks.back().push_back(h);
    }
  }
  return out;
}

RightNormalForm right_normal_form(const Word& x) { return right_normal_form(normalize(x)); }

RightNormalForm cycle(const RightNormalForm& form) {
  CanonicalBraid next;
  for (std::size_t j = 1; j < form.blocks.size(); ++j) {
    for (Generator g : form.blocks[j]) next.append(Letter{g, false});
  }
  for (Generator g : form.blocks.front()) next.append(Letter{twist(g, form.p), false});
  next.append_garside_power(-form.p);
  return right_normal_form(next);
}

RightNormalForm closed_representative(const Word& x) {
  RightNormalForm form = right_normal_form(x);
  const std::size_t bound = 2 * form.size();
  for (std::size_t step = 0; step <= bound; ++step) {
    if (form.is_closed()) return form;
    form = cycle(form);
  }
  const int e = exponent_sum(x);
  const int r = ((e % 6) + 6) % 6;
  if (r == 4) throw ExcludedClass("s1 D^" + std::to_string((e - 4) / 3 + 1));
  if (r == 2) throw ExcludedClass("s1 s2 D^" + std::to_string((e - 2) / 3));
  throw std::logic_error("cycling found no closed normal form outside the excluded classes");
}

PolygonLabeling polygon_of(const RightNormalForm& form) {
  PolygonLabeling out;
  out.closed = form.is_closed();
  for (const auto& b : form.blocks) out.labels.push_back(label_of(b));
  return out;
}

std::vector<Axis> antisymmetries(const std::vector<int>& labels) {
  const int n = static_cast<int>(labels.size());
  std::vector<Axis> out;
  if (n < 2 || n % 2 != 0) return out;
  const auto at = [&](int v) { return labels[static_cast<std::size_t>(((v - 1) % n + n) % n)]; };
  for (int i = 1; i <= n / 2; ++i) {
    const int j = i + n / 2;
    if (at(i) != 2 || at(i + 1) != 2 || at(j) != 2 || at(j + 1) != 2) continue;
    // The reflection sends vertex i - t to i + 1 + t; the pairs strictly
    // between the two invariant sides are t = 1 .. n/2 - 2.
    bool ok = true;
    for (int t = 1; t + 1 < n / 2 && ok; ++t) ok = at(i - t) != at(i + 1 + t);
    if (ok) out.emplace_back(i, j);
  }
  return out;
}

std::vector<Axis> antisymmetries(const PolygonLabeling& polygon) {
  return antisymmetries(polygon.labels);
}

int orbit_count_e2(const Word& x) {
  if (exponent_sum(x) != 2) throw PreconditionError("orbit_count_e2 needs exponent sum 2");
  if (!is_quasipositive(x)) return 0;
  try {
    const RightNormalForm form = closed_representative(x);
    if (form.p == 0) return 1;
    return static_cast<int>(antisymmetries(polygon_of(form)).size());
  } catch (const ExcludedClass&) {
    return 1;
  }
}

}  // namespace braid3
