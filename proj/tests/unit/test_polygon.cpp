#include <gtest/gtest.h>

#include "braid3/errors.hpp"
#include "braid3/factor_search.hpp"
#include "braid3/polygon.hpp"
#include "braid3/selftest/oracles.hpp"
#include "braid3/sl2.hpp"

using namespace braid3;

namespace {

using Blocks = std::vector<std::vector<Generator>>;
constexpr auto s1 = Generator::s1;
constexpr auto s2 = Generator::s2;
const Word kExample = parse_word("s1^2 s2^2 s1^2 s2^2 D^-2");

}  // namespace

TEST(RightNormalForm, Examples) {
  const RightNormalForm d = right_normal_form(parse_word("s2 s1"));
  EXPECT_EQ(d.blocks, (Blocks{{s2, s1}}));
  EXPECT_EQ(d.p, 0);
  const RightNormalForm x = right_normal_form(kExample);
  EXPECT_EQ(x.blocks, (Blocks{{s1}, {s1, s2}, {s2, s1}, {s1, s2}, {s2}}));
  EXPECT_EQ(x.p, 2);
  EXPECT_EQ(right_normal_form(parse_word("s1^3")).blocks, (Blocks{{s1}, {s1}, {s1}}));
  EXPECT_THROW(right_normal_form(parse_word("D^3")), PreconditionError);
  EXPECT_THROW(right_normal_form(Word()), PreconditionError);
}

TEST(RightNormalForm, RoundTripAndJunctions) {
  selftest::Rng rng(81);
  for (int t = 0; t < 1000; ++t) {
    const Word x = selftest::random_word(rng, 1 + t % 12);
    if (normalize(x).tail().empty()) continue;
    const RightNormalForm f = right_normal_form(x);
    EXPECT_TRUE(sl2::equal(f.to_word(), x));
    for (std::size_t i = 0; i < f.size(); ++i) {
      EXPECT_TRUE(f.blocks[i].size() == 1 || f.blocks[i].size() == 2);
      if (f.blocks[i].size() == 2) EXPECT_NE(f.blocks[i][0], f.blocks[i][1]);
      if (i + 1 < f.size()) EXPECT_EQ(f.blocks[i].back(), f.blocks[i + 1].front());
    }
  }
}

TEST(RightNormalForm, ReverseScanGivesTheSameBlocks) {
  selftest::Rng rng(82);
  for (int t = 0; t < 300; ++t) {
    const Word x = selftest::random_word(rng, 1 + t % 12);
    if (normalize(x).tail().empty()) continue;
    const RightNormalForm f = right_normal_form(x);
    std::vector<Generator> letters;
    for (const auto& block : f.blocks) letters.insert(letters.end(), block.begin(), block.end());
    Blocks reversed;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      if (reversed.empty() || reversed.back().back() == *it) {
        reversed.push_back({*it});
      } else {
        reversed.back().push_back(*it);
      }
    }
    for (auto& block : reversed) std::reverse(block.begin(), block.end());
    std::reverse(reversed.begin(), reversed.end());
    EXPECT_EQ(reversed, f.blocks);
  }
}

TEST(ClosedRepresentative, WorkedExample) {
  const RightNormalForm c = closed_representative(kExample);
  EXPECT_EQ(c.blocks, (Blocks{{s1, s2}, {s2, s1}, {s1, s2}, {s2, s1}}));
  EXPECT_EQ(c.p, 2);
  EXPECT_TRUE(c.is_closed());
}

TEST(ClosedRepresentative, ExcludedClasses) {
  try {
    closed_representative(parse_word("s1 s2"));
    FAIL() << "expected an excluded class";
  } catch (const ExcludedClass& e) {
    EXPECT_EQ(e.class_name(), "s1 s2 D^0");
  }
  EXPECT_THROW(closed_representative(parse_word("s1^-1 s2 s1 s1")), ExcludedClass);
  EXPECT_THROW(closed_representative(parse_word("s1 D")), ExcludedClass);
  EXPECT_THROW(closed_representative(parse_word("s1 D^-1")), ExcludedClass);
}

TEST(ClosedRepresentative, IsConjugateAndClosed) {
  selftest::Rng rng(83);
  for (int t = 0; t < 500; ++t) {
    const Word x = selftest::random_word(rng, 1 + t % 12);
    if (normalize(x).tail().empty()) continue;
    try {
      const RightNormalForm c = closed_representative(x);
      EXPECT_TRUE(c.is_closed());
      EXPECT_EQ(sl2::matrix_of(c.to_word()).trace(), sl2::matrix_of(x).trace());
      EXPECT_EQ(exponent_sum(c.to_word()), exponent_sum(x));
    } catch (const ExcludedClass&) {
      const int r = ((exponent_sum(x) % 6) + 6) % 6;
      EXPECT_TRUE(r == 2 || r == 4);
    } catch (const PreconditionError&) {
      EXPECT_EQ(exponent_sum(x) % 3, 0);
    }
  }
}

TEST(Antisymmetries, Examples) {
  EXPECT_EQ(antisymmetries(std::vector<int>{2, 2, 2, 2}).size(), 2u);
  EXPECT_TRUE(antisymmetries(std::vector<int>{2, 2, 2}).empty());
  EXPECT_TRUE(antisymmetries(std::vector<int>{1, 1}).empty());
  EXPECT_EQ(antisymmetries(std::vector<int>{2, 2}), (std::vector<Axis>{{1, 2}}));
  EXPECT_TRUE(antisymmetries(std::vector<int>{2}).empty());
  // Hexagon with the axis through sides 1 and 4: vertices 6 and 3 swap labels.
  EXPECT_EQ(antisymmetries(std::vector<int>{2, 2, 1, 2, 2, 2}), (std::vector<Axis>{{1, 4}}));
}

TEST(Antisymmetries, AtMostTwoForEveryLabeling) {
  for (int n = 1; n <= 12; ++n) {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> labels;
      for (int j = 0; j < n; ++j) labels.push_back((mask >> j & 1) != 0 ? 2 : 1);
      EXPECT_LE(antisymmetries(labels).size(), 2u);
    }
  }
}

TEST(OrbitCountE2, Examples) {
  EXPECT_EQ(orbit_count_e2(kExample), 2);
  EXPECT_EQ(orbit_count_e2(parse_word("s1 s2")), 1);
  EXPECT_EQ(orbit_count_e2(parse_word("s2 s1")), 1);
  EXPECT_EQ(orbit_count_e2(parse_word("s1^2")), 1);
  EXPECT_EQ(orbit_count_e2(parse_word("s1^2 s2^-1 s1")), 0);
  EXPECT_THROW(orbit_count_e2(parse_word("s1")), PreconditionError);
}

TEST(OrbitCountE2, AgreesWithFactorSearch) {
  int counts[3] = {0, 0, 0};
  for (int p = 0; p <= 2; ++p) {
    for (const Word& wp : selftest::positive_words(2 + 3 * p, {Generator::s1, Generator::s2})) {
      const Word x = wp * half_twist_word(-p);
      const std::size_t searched = count_orbits(x);
      ASSERT_LE(searched, 2u);
      ++counts[searched];
      EXPECT_EQ(orbit_count_e2(x), static_cast<int>(searched)) << format_word(x);
    }
  }
  EXPECT_GT(counts[2], 0);
  EXPECT_GT(counts[0], 0);
}

TEST(OrbitCountE2, AgreesOnConjugates) {
  selftest::Rng rng(84);
  for (int t = 0; t < 300; ++t) {
    const int p = 1 + t % 3;
    const Word base = selftest::random_positive_word(rng, 2 + 3 * p) * half_twist_word(-p);
    const Word g = selftest::random_word(rng, t % 6);
    const Word x = invert(g) * base * g;
    EXPECT_EQ(orbit_count_e2(x), static_cast<int>(count_orbits(x))) << format_word(x);
  }
}

TEST(OrbitCountE2, IndependentOfWhichClosedFormIsUsed) {
  selftest::Rng rng(85);
  for (int t = 0; t < 300; ++t) {
    const int p = 1 + t % 3;
    const Word x = selftest::random_positive_word(rng, 2 + 3 * p) * half_twist_word(-p);
    RightNormalForm c;
    try {
      c = closed_representative(x);
    } catch (const ExcludedClass&) {
      continue;
    }
    const std::size_t count = antisymmetries(polygon_of(c)).size();
    RightNormalForm cur = c;
    for (std::size_t step = 0; step < 2 * c.size(); ++step) {
      cur = cycle(cur);
      if (cur.is_closed()) EXPECT_EQ(antisymmetries(polygon_of(cur)).size(), count);
    }
  }
}
