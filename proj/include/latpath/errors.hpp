#pragma once

#include <stdexcept>
#include <string>

namespace latpath {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Series inversion or rational expansion whose constant term is not +1 or -1.
class NonUnitConstant : public Error {
 public:
  using Error::Error;
};

// A division that must be exact in Z[w] left a remainder.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

// Height outside [0, k) requested from a banded path family.
class BandViolation : public Error {
 public:
  using Error::Error;
};

// Column index above the diagonal of a lower-triangular array.
class IndexOutOfTriangle : public Error {
 public:
  using Error::Error;
};

// Precondition on a size, order or index was not met.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace latpath
