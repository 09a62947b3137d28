#pragma once

#include <stdexcept>
#include <string>

namespace qschur {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct DegreeMismatch : Error {
  using Error::Error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

// a solve left a nonzero residual, or an internal invariant broke
struct ConsistencyError : Error {
  using Error::Error;
};

// identity parameters outside the stated hypotheses
struct Inadmissible : Error {
  using Error::Error;
};

}  // namespace qschur
