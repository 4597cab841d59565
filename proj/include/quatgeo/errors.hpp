#pragma once

#include <stdexcept>
#include <string>

namespace quatgeo {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Arithmetic / linear algebra
struct DivisionByZero : Error {
  using Error::Error;
};
struct NotInvertible : Error {
  using Error::Error;
};
struct NotAnEigenvalue : Error {
  using Error::Error;
};
struct NotDiagonalizable : Error {
  using Error::Error;
};

// Affine closed forms
struct DegenerateD : Error {
  using Error::Error;
};
struct ShapeError : Error {
  using Error::Error;
};

// Group exploration resource limits
struct ExplosionCap : Error {
  using Error::Error;
};
struct ImageNotFinite : Error {
  using Error::Error;
};
struct ClosureError : Error {
  using Error::Error;
};
struct StepCapExceeded : Error {
  using Error::Error;
};

// Classification input
struct NotAGroup : Error {
  using Error::Error;
};
struct InvalidArgument : Error {
  using Error::Error;
};

// A condition that is impossible unless the library itself is wrong.
struct InternalInconsistency : Error {
  using Error::Error;
};

// Text input
struct ParseError : Error {
  ParseError(const std::string& msg, int line, int col)
      : Error(msg + " (line " + std::to_string(line) + ", col " +
              std::to_string(col) + ")"),
        line(line),
        col(col) {}
  int line = 0;
  int col = 0;
};

}  // namespace quatgeo
