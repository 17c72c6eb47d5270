#pragma once

#include <mpfr.h>

#include <compare>
#include <string>

#include "rampi/rational.hpp"

namespace rampi {

enum class Rounding { nearest, up, down };

// Owning handle on an MPFR value at an explicit precision. Every operation
// rounds to nearest-even unless a directed rounding is requested, so results
// are reproducible bit for bit. Binary operators produce a result at the
// larger of the two operand precisions.
class BigFloat {
 public:
  explicit BigFloat(long precisionBits = 53);
  BigFloat(long value, long precisionBits);
  BigFloat(const BigRational& value, long precisionBits, Rounding rounding = Rounding::nearest);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  static BigFloat fromString(const std::string& decimal, long precisionBits);
  // 2^exponent, exact.
  static BigFloat pow2(long exponent, long precisionBits);

  long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }
  // Same value rounded to a different precision.
  BigFloat withPrecision(long precisionBits, Rounding rounding = Rounding::nearest) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  bool isZero() const { return mpfr_zero_p(value_) != 0; }
  bool isFinite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double toDouble() const { return mpfr_get_d(value_, MPFR_RNDN); }
  // Binary exponent e with value = m * 2^e, 0.5 <= |m| < 1. Undefined for zero.
  long exponent() const { return static_cast<long>(mpfr_get_exp(value_)); }

  // Decimal rendering with the given number of significant digits (%g style).
  std::string toString(int significantDigits) const;
  // Enough digits to round-trip the binary value.
  std::string toString() const;

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);

  friend BigFloat operator+(const BigFloat& lhs, const BigFloat& rhs);
  friend BigFloat operator-(const BigFloat& lhs, const BigFloat& rhs);
  friend BigFloat operator*(const BigFloat& lhs, const BigFloat& rhs);
  friend BigFloat operator/(const BigFloat& lhs, const BigFloat& rhs);
  friend BigFloat operator-(const BigFloat& value);

  friend bool operator==(const BigFloat& lhs, const BigFloat& rhs);
  friend std::partial_ordering operator<=>(const BigFloat& lhs, const BigFloat& rhs);

 private:
  mpfr_t value_;
};

BigFloat abs(const BigFloat& value);
BigFloat mulRational(const BigFloat& value, const BigRational& factor);
// Exact comparison of a binary float against a rational.
int compare(const BigFloat& lhs, const BigRational& rhs);
// Upper bound on log10|x| style digit counting: floor(-log10(x)) for x > 0,
// clamped into [0, cap]. Zero maps to cap.
int decimalDigitsBelow(const BigFloat& x, int cap);
// Convert a binary float back into the exact rational it represents.
BigRational toRational(const BigFloat& value);

}  // namespace rampi
