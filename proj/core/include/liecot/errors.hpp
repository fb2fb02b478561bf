#pragma once

#include <stdexcept>
#include <string>

namespace liecot {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
  using Error::Error;
};
struct AlgebraMismatch : Error {
  using Error::Error;
};
struct NotSymmetric : Error {
  using Error::Error;
};
struct NotCotangent : Error {
  using Error::Error;
};
struct NotSimple : Error {
  using Error::Error;
};
struct NotOrthogonal : Error {
  using Error::Error;
};
struct Degenerate : Error {
  using Error::Error;
};
struct JacobiFailure : Error {
  using Error::Error;
};
struct UnknownName : Error {
  using Error::Error;
};
struct InvalidParam : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};
struct NotInvertibleHere : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

// Thrown when a structural identity the library re-verifies fails to hold.
struct ConsistencyError : Error {
  using Error::Error;
};

}  // namespace liecot
