#pragma once

#include <stdexcept>
#include <string>

namespace qgen {

// Base class for every error the library raises, so the CLI boundary can
// catch a single type and map it to an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A rational-function denominator has q = 1 as a root after reduction.
class DenominatorVanishes : public Error {
 public:
  using Error::Error;
};

// Series division requires the divisor's constant term to be a unit.
class NonInvertibleConstantTerm : public Error {
 public:
  using Error::Error;
};

// Fibonacci-polynomial index below -1.
class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

// A graded-basis leading coefficient is not invertible in the value ring;
// the caller has to widen the value ring.
class NonUnitLeadingCoefficient : public Error {
 public:
  using Error::Error;
};

// A functional was applied to a polynomial of higher degree than its table.
class DegreeExceedsTable : public Error {
 public:
  using Error::Error;
};

// A functional was applied to a Laurent polynomial with an s^-1 term.
class NegativeOffset : public Error {
 public:
  using Error::Error;
};

// A Seidel matrix was requested deeper than its seed sequence allows.
class SeedTooShort : public Error {
 public:
  using Error::Error;
};

// Unknown identity key passed to the verifier.
class UnknownIdentity : public Error {
 public:
  using Error::Error;
};

// Identity parameters outside the range the registry declares.
class ParamOutOfRange : public Error {
 public:
  using Error::Error;
};

// Input text does not match the canonical grammar.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qgen
