#pragma once

#include <stdexcept>
#include <string>

namespace paracurv {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularMatrixError : Error {
  using Error::Error;
};
struct DimensionMismatchError : Error {
  using Error::Error;
};
struct DegeneratePlaneError : Error {
  using Error::Error;
};
struct DegenerateDirectionError : Error {
  using Error::Error;
};
struct EvenDimensionError : Error {
  using Error::Error;
};
struct NotQuasiParaSasakianError : Error {
  using Error::Error;
};
struct DimensionTooSmallError : Error {
  using Error::Error;
};
struct WrongDimensionError : Error {
  using Error::Error;
};
struct NoNonNullHorizontalDirectionError : Error {
  using Error::Error;
};
struct UnknownModelError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct DuplicateEntryError : Error {
  using Error::Error;
};

}  // namespace paracurv
