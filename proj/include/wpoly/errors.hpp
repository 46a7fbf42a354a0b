#pragma once

#include <stdexcept>

namespace wpoly {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyBasisFamily : public Error {
 public:
  using Error::Error;
};

class UnequalBasisCardinality : public Error {
 public:
  using Error::Error;
};

class ExchangeAxiomViolation : public Error {
 public:
  using Error::Error;
};

class ElementOutOfRange : public Error {
 public:
  using Error::Error;
};

class GroundSetCapExceeded : public Error {
 public:
  using Error::Error;
};

class NonPrimeCharacteristic : public Error {
 public:
  using Error::Error;
};

class FieldTooLarge : public Error {
 public:
  using Error::Error;
};

class RankDeficientMatrix : public Error {
 public:
  using Error::Error;
};

class EnumerationBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class InterpolationInconsistency : public Error {
 public:
  using Error::Error;
};

class MissingDegree : public Error {
 public:
  using Error::Error;
};

class MissingEntry : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace wpoly
