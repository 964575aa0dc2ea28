#include "braid3/sl2.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace braid3::sl2 {

namespace {

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("SL(2,Z) entry overflow");
  return r;
}

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("SL(2,Z) entry overflow");
  return r;
}

// Entries beyond this bound stop the walks below; norms stay inside
// 128-bit range.
__extension__ using Wide = __int128;

constexpr std::int64_t kWalkBound = std::int64_t{1} << 40;

Wide norm2(Vector v) {
  return static_cast<Wide>(v.x) * v.x + static_cast<Wide>(v.y) * v.y;
}

bool same_band(Vector a, Vector b) {
  return a == b || (a.x == -b.x && a.y == -b.y);
}

bool too_big(Vector v) {
  return std::llabs(v.x) > kWalkBound || std::llabs(v.y) > kWalkBound;
}

// Elliptic images have finite order dividing 12 in SL(2,Z).
bool is_elliptic(const Matrix& m) { return std::llabs(m.trace()) < 2; }

// Walks m = 0, step, 2 step, ... while the squared norm of M^m v can still
// reach `target`. For hyperbolic and parabolic M the map m -> |M^m v|^2 is
// convex, so once it exceeds the target while increasing it never returns.
std::optional<long> walk(const Matrix& step, long sign, Vector v, Vector to) {
  const Wide target = norm2(to);
  Wide previous = -1;
  Vector cur = v;
  for (long m = 0;; ++m) {
    if (same_band(cur, to)) return sign * m;
    const Wide n = norm2(cur);
    if (n > target && previous >= 0 && n > previous) return std::nullopt;
    if (m > 0 && n == previous && same_band(step * cur, cur)) return std::nullopt;
    if (too_big(cur)) return std::nullopt;
    previous = n;
    cur = step * cur;
  }
}

}  // namespace

Matrix Matrix::operator*(const Matrix& r) const {
  return {add(mul(a, r.a), mul(b, r.c)), add(mul(a, r.b), mul(b, r.d)),
          add(mul(c, r.a), mul(d, r.c)), add(mul(c, r.b), mul(d, r.d))};
}

Vector operator*(const Matrix& m, const Vector& v) {
  return {add(mul(m.a, v.x), mul(m.b, v.y)), add(mul(m.c, v.x), mul(m.d, v.y))};
}

Matrix generator_matrix(Letter l) {
  Matrix m;
  switch (l.gen) {
    case Generator::s1: m = {1, 1, 0, 1}; break;
    case Generator::s2: m = {1, 0, -1, 1}; break;
    case Generator::s0: {
      // s0 = s1^-1 s2 s1
      const Matrix s1{1, 1, 0, 1};
      const Matrix s2{1, 0, -1, 1};
      m = s1.inverse() * s2 * s1;
      break;
    }
  }
  return l.inverse ? m.inverse() : m;
}

Matrix matrix_of(const Word& w) {
  Matrix m;
  for (const Letter& l : w.letters()) m = m * generator_matrix(l);
  return m;
}

Matrix matrix_of(const CanonicalBraid& b) { return matrix_of(b.to_word()); }

bool equal(const Word& u, const Word& v) {
  return exponent_sum(u) == exponent_sum(v) && matrix_of(u) == matrix_of(v);
}

Vector normalize_sign(Vector v) {
  if (v.x < 0 || (v.x == 0 && v.y < 0)) return {-v.x, -v.y};
  return v;
}

std::optional<Vector> band_axis(const Matrix& m) {
  // m - I = [-xy, x^2; -y^2, xy]
  const std::int64_t n00 = m.a - 1, n01 = m.b, n10 = m.c, n11 = m.d - 1;
  if (n00 != -n11 || n01 < 0 || n10 > 0) return std::nullopt;
  const auto isqrt = [](std::int64_t s) -> std::optional<std::int64_t> {
    auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<long double>(s))));
    while (r > 0 && r * r > s) --r;
    while ((r + 1) * (r + 1) <= s) ++r;
    if (r * r != s) return std::nullopt;
    return r;
  };
  const auto x = isqrt(n01);
  const auto y_abs = isqrt(-n10);
  if (!x || !y_abs || (*x == 0 && *y_abs == 0)) return std::nullopt;
  Vector v;
  if (*x > 0) {
    if (n11 % *x != 0) return std::nullopt;
    v = {*x, n11 / *x};
  } else {
    v = {0, *y_abs};
  }
  if (mul(v.y, v.y) != -n10) return std::nullopt;
  return normalize_sign(v);
}

std::optional<long> conjugating_power(const Matrix& x, Vector from, Vector to) {
  if (is_elliptic(x)) {
    Vector cur = from;
    for (long m = 0; m < 12; ++m) {
      if (same_band(cur, to)) return m;
      cur = x * cur;
    }
    return std::nullopt;
  }
  const auto forward = walk(x, 1, from, to);
  const auto backward = walk(x.inverse(), -1, from, to);
  if (forward && backward) return std::abs(*forward) <= std::abs(*backward) ? forward : backward;
  return forward ? forward : backward;
}

std::optional<long> stabilizing_power(const Matrix& x, Vector v) {
  if (is_elliptic(x)) {
    Vector cur = x * v;
    for (long m = 1; m <= 12; ++m) {
      if (same_band(cur, v)) return m;
      cur = x * cur;
    }
    return std::nullopt;
  }
  // Hyperbolic and parabolic elements move every axis they do not fix
  // immediately, and a fixed axis is fixed by X itself.
  if (same_band(x * v, v)) return 1;
  return std::nullopt;
}

}  // namespace braid3::sl2
