#ifndef VDOUBLE_ERROR_HPP
#define VDOUBLE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vdouble {

// Base class for every domain error raised by the library. The CLI maps these
// to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (Gauss code, term, word, target spec, JSON payload).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Structurally well-formed input that violates a semantic invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A move was requested at a site where it is not admissible.
class MoveError : public Error {
 public:
  using Error::Error;
};

// Exhaustive search refused because the estimated node count exceeds the guard.
class SearchTooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace vdouble

#endif  // VDOUBLE_ERROR_HPP
