#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace genbern {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadArgument : Error {
  using Error::Error;
};

// Evaluation left the domain of a subexpression (ln of a non-positive value).
struct DomainError : Error {
  using Error::Error;
};

// Evaluation overflowed to +-inf or produced NaN.
struct NonFinite : Error {
  using Error::Error;
};

// Target value lies outside the attainable range of a monotone function.
struct OutOfRange : Error {
  using Error::Error;
};

// A function assumed monotone turned out not to be.
struct NotMonotone : Error {
  using Error::Error;
};

// Two-atom measure construction collapsed to a single point.
struct DegenerateNode : Error {
  using Error::Error;
};

// The 2x2 interpolation system c0*f0 + c1*f1 through two points is singular.
struct SingularInterpolant : Error {
  using Error::Error;
};

// Expression text rejected; `offset` is the byte position of the bad token.
struct ParseError : Error {
  std::size_t offset;
  ParseError(const std::string& what, std::size_t offset_)
      : Error(what + " (at byte " + std::to_string(offset_) + ")"), offset(offset_) {}
};

}  // namespace genbern
