#pragma once

// Right normal forms u_1 ... u_n D^-p with u_i in {s1, s2, s1 s2, s2 s1} and
// last(u_i) = first(u_(i+1)), closed representatives of conjugacy classes,
// and the labelled polygon whose antisymmetries count Hurwitz orbits of
// band factorizations when the exponent sum is 2.

#include <string>
#include <utility>
#include <vector>

#include "braid3/garside.hpp"
#include "braid3/word.hpp"

namespace braid3 {

struct RightNormalForm {
  std::vector<std::vector<Generator>> blocks;  ///< u_1 ... u_n
  int p = 0;

  std::size_t size() const noexcept { return blocks.size(); }
  /// tau^p(last(u_n)) == first(u_1).
  bool is_closed() const;
  /// u_1 ... u_n D^-p spelled out.
  Word to_word() const;
  std::string to_string() const;
  friend bool operator==(const RightNormalForm&, const RightNormalForm&) = default;
};

/// Throws PreconditionError when x is a power of D.
RightNormalForm right_normal_form(const Word& x);
RightNormalForm right_normal_form(const CanonicalBraid& x);

/// Conjugate by u_1: u_2 ... u_n tau^p(u_1) D^-p, renormalized.
RightNormalForm cycle(const RightNormalForm& form);

/// Cycles at most 2n times until the form is closed. Throws ExcludedClass
/// for the classes of s1 D^(2m+1) and s1 s2 D^(2m), and PreconditionError
/// for conjugates of D powers.
RightNormalForm closed_representative(const Word& x);

struct PolygonLabeling {
  std::vector<int> labels;  ///< exponent sums of u_1 ... u_n, each 1 or 2
  bool closed = false;
};

PolygonLabeling polygon_of(const RightNormalForm& form);

/// Sides are 1-based: side i joins u_i and u_(i+1) cyclically.
using Axis = std::pair<int, int>;

/// Axes through the midpoints of sides i and i + n/2 (i = 1 .. n/2) that
/// see label 2 on all four endpoints and swap labels everywhere else. A
/// digon has the single axis (1, 2); odd polygons have none.
std::vector<Axis> antisymmetries(const std::vector<int>& labels);
std::vector<Axis> antisymmetries(const PolygonLabeling& polygon);

/// Number of Hurwitz orbits of band factorizations of x, read off the
/// closed representative. Requires exponent sum 2. Not quasipositive gives
/// 0; the class of s1 s2 and closed forms with p = 0 (positive braids) give 1.
int orbit_count_e2(const Word& x);

}  // namespace braid3
