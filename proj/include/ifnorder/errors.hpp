#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ifnorder {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text: numbers, literals, documents, sequence files.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Trapezoid knots not nondecreasing, or outside [0,1].
class KnotOrderError : public Error {
 public:
  using Error::Error;
};

/// A level or parameter lies outside its admissible range.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Index past the end of a finite level sequence.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// A score function received a value of the wrong shape.
class KindMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// The equality certificate needs a diagonal sequence with three distinct levels.
class CertificateInapplicable : public Error {
 public:
  using Error::Error;
};

/// A decision-matrix cell failed validation; the message names the cell.
class CellValidationError : public Error {
 public:
  CellValidationError(std::string alternative, std::string attribute,
                      const std::string& reason)
      : Error("cell (" + alternative + ", " + attribute + "): " + reason),
        alternative_(std::move(alternative)),
        attribute_(std::move(attribute)) {}

  const std::string& alternative() const noexcept { return alternative_; }
  const std::string& attribute() const noexcept { return attribute_; }

 private:
  std::string alternative_;
  std::string attribute_;
};

class WeightSumError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

}  // namespace ifnorder
