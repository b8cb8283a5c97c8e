#ifndef SHUFFLE_ERRORS_HPP
#define SHUFFLE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace shuffle {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VarCountMismatch : public Error {
 public:
  using Error::Error;
};

// A division that was required to be exact left a remainder. This always
// means an algebraic identity failed upstream.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

class SymmetryViolation : public Error {
 public:
  using Error::Error;
};

class WheelViolation : public Error {
 public:
  using Error::Error;
};

class SlopeExceeded : public Error {
 public:
  using Error::Error;
};

class WindowExceeded : public Error {
 public:
  using Error::Error;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// A denominator vanished at an evaluation point.
class AccidentalPole : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace shuffle

#endif  // SHUFFLE_ERRORS_HPP
