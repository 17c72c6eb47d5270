#pragma once

#include <stdexcept>
#include <string>

namespace rampi {

// Root of every error raised by the library. The CLI maps DomainError and
// PoleError to exit code 2; everything else is a runtime failure.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A negative-shift Pochhammer product hit a zero factor (a gamma pole).
class PoleError : public Error {
 public:
  using Error::Error;
};

// Input outside the implemented parameter domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// No dominating ratio could be established for the requested truncation.
class BoundUnavailable : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

// A sequence transformation divided by a quantity that vanished at the
// working precision before producing any estimate.
class NumericBreakdown : public Error {
 public:
  using Error::Error;
};

// A term-count or precision ceiling was reached before the target.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// The two independent pi formulas disagreed; indicates an arithmetic bug.
class AgreementFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace rampi
