#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lieprop {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotSquare : public Error {
 public:
  NotSquare() : Error("matrix is not square") {}
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class BadScalar : public Error {
 public:
  using Error::Error;
};

class NonCanonicalScalar : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class ConstantPolynomial : public Error {
 public:
  ConstantPolynomial() : Error("polynomial is constant") {}
};

class NotAnIdeal : public Error {
 public:
  NotAnIdeal() : Error("subspace is not an ideal") {}
};

class RadicalUnavailableInPositiveCharacteristic : public Error {
 public:
  RadicalUnavailableInPositiveCharacteristic()
      : Error("radical via the Killing form requires characteristic zero") {}
};

class PositiveCharacteristic : public Error {
 public:
  PositiveCharacteristic() : Error("operation requires the rational field") {}
};

class DimensionBudgetExceeded : public Error {
 public:
  DimensionBudgetExceeded(std::size_t dim, std::size_t bound)
      : Error("dimension " + std::to_string(dim) + " exceeds symbolic bound " +
              std::to_string(bound)) {}
};

class InvalidPlace : public Error {
 public:
  using Error::Error;
};

class NotRegular : public Error {
 public:
  NotRegular() : Error("element is not regular") {}
};

class CentralInput : public Error {
 public:
  CentralInput() : Error("element is central") {}
};

class BadTrace : public Error {
 public:
  BadTrace() : Error("trace must be 0 or 1") {}
};

class PreconditionNotCertified : public Error {
 public:
  using Error::Error;
};

class NonCommutingAction : public Error {
 public:
  NonCommutingAction(std::size_t a, std::size_t b)
      : Error("action matrices " + std::to_string(a) + " and " + std::to_string(b) +
              " do not commute") {}
};

class NotSolvable : public Error {
 public:
  NotSolvable() : Error("algebra is not solvable") {}
};

class BadDenominator : public Error {
 public:
  explicit BadDenominator(std::uint32_t p)
      : Error("structure constant denominator divisible by " + std::to_string(p)) {}
};

class BudgetGuardExceeded : public Error {
 public:
  explicit BudgetGuardExceeded(double estimate)
      : Error("enumeration estimate " + std::to_string(estimate) + " exceeds guard"),
        estimate_(estimate) {}
  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

/// Raised by the representation check of semidirect sums; lists the basis
/// pairs (i, j) for which rho([s_i, s_j]) != [rho(s_i), rho(s_j)].
class NotARepresentation : public Error {
 public:
  explicit NotARepresentation(std::vector<std::pair<std::size_t, std::size_t>> pairs)
      : Error("matrices do not define a representation (" + std::to_string(pairs.size()) +
              " violating pairs)"),
        pairs_(std::move(pairs)) {}
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const noexcept {
    return pairs_;
  }

 private:
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

/// Input text could not be read as an algebra file. `where` is a JSON pointer
/// or a "line:column" position.
class ParseError : public Error {
 public:
  ParseError(std::string where, const std::string& what)
      : Error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

}  // namespace lieprop
