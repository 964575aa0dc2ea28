#pragma once

// The representation B3 -> SL(2,Z), s1 -> [1 1; 0 1], s2 -> [1 0; -1 1].
// Its kernel is generated by D^4, whose exponent sum is 12, so a braid is
// determined by (matrix, exponent sum). A band maps to the transvection
// w -> w + det(v, w) v for a primitive axis v, unique up to sign, and two
// bands are equal iff their axes agree up to sign.
//
// All arithmetic is checked; overflow throws std::overflow_error.

#include <cstdint>
#include <optional>

#include "braid3/garside.hpp"
#include "braid3/word.hpp"

namespace braid3::sl2 {

struct Matrix {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  Matrix operator*(const Matrix& rhs) const;
  Matrix inverse() const { return {d, -b, -c, a}; }
  std::int64_t trace() const { return a + d; }
  friend bool operator==(const Matrix&, const Matrix&) = default;
};

struct Vector {
  std::int64_t x = 0, y = 0;
  friend bool operator==(const Vector&, const Vector&) = default;
};

Vector operator*(const Matrix& m, const Vector& v);

Matrix generator_matrix(Letter l);
Matrix matrix_of(const Word& w);
Matrix matrix_of(const CanonicalBraid& b);

/// Equality in B3 decided through the representation; independent of the
/// Garside machinery.
bool equal(const Word& u, const Word& v);

/// Axis of a band with sign fixed so the first nonzero coordinate is
/// positive; nullopt when the matrix is not a transvection.
std::optional<Vector> band_axis(const Matrix& m);

/// The +-sign-normalized primitive vector.
Vector normalize_sign(Vector v);

/// Smallest m such that conjugating the band with axis `from` by X^m gives
/// the band with axis `to`, searched over all integers m; nullopt if none.
/// `x` is the image of X.
std::optional<long> conjugating_power(const Matrix& x, Vector from, Vector to);

/// Smallest m >= 1 with X^m fixing the band with axis v; nullopt if X^m
/// never commutes with it.
std::optional<long> stabilizing_power(const Matrix& x, Vector v);

}  // namespace braid3::sl2
