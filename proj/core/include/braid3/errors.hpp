#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braid3 {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed word text. `position` is the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A letter that the word's alphabet does not permit (s0 in an Artin word).
class AlphabetError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A search budget ran out before the question was settled. Never a "no".
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t explored)
      : Error(what), explored_(explored) {}
  std::size_t explored() const noexcept { return explored_; }

 private:
  std::size_t explored_;
};

/// The conjugacy class has no closed right normal form
/// (the classes of s1 D^(2m+1) and s1 s2 D^(2m)).
class ExcludedClass : public Error {
 public:
  explicit ExcludedClass(std::string class_name)
      : Error("braid is conjugate to " + class_name +
              ", which has no closed normal form"),
        class_name_(std::move(class_name)) {}
  const std::string& class_name() const noexcept { return class_name_; }

 private:
  std::string class_name_;
};

}  // namespace braid3
