#include "rampi/big_float.hpp"

#include <algorithm>
#include <cmath>

#include "rampi/errors.hpp"

namespace rampi {

namespace {

mpfr_rnd_t toMpfr(Rounding rounding) {
  switch (rounding) {
    case Rounding::up:
      return MPFR_RNDU;
    case Rounding::down:
      return MPFR_RNDD;
    case Rounding::nearest:
      break;
  }
  return MPFR_RNDN;
}

long checkedPrecision(long bits) {
  if (bits < MPFR_PREC_MIN || bits > 1L << 24) throw DomainError("unsupported precision " + std::to_string(bits));
  return bits;
}

long widest(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

BigFloat::BigFloat(long precisionBits) {
  mpfr_init2(value_, checkedPrecision(precisionBits));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, long precisionBits) : BigFloat(precisionBits) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigRational& value, long precisionBits, Rounding rounding) : BigFloat(precisionBits) {
  mpfr_set_q(value_, value.get_mpq_t(), toMpfr(rounding));
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  // Steal the limbs and leave `other` as a valid minimal-precision zero.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::fromString(const std::string& decimal, long precisionBits) {
  BigFloat out(precisionBits);
  if (mpfr_set_str(out.value_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
    throw DomainError("malformed decimal '" + decimal + "'");
  }
  return out;
}

BigFloat BigFloat::pow2(long exponent, long precisionBits) {
  BigFloat out(precisionBits);
  mpfr_set_ui_2exp(out.value_, 1, exponent, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::withPrecision(long precisionBits, Rounding rounding) const {
  BigFloat out(precisionBits);
  mpfr_set(out.value_, value_, toMpfr(rounding));
  return out;
}

std::string BigFloat::toString(int significantDigits) const {
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*RNg", std::max(1, significantDigits), value_);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

std::string BigFloat::toString() const {
  const auto digits = static_cast<int>(std::ceil(static_cast<double>(precision()) * 0.30103)) + 1;
  return toString(digits);
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat operator+(const BigFloat& lhs, const BigFloat& rhs) {
  BigFloat out(widest(lhs, rhs));
  mpfr_add(out.value_, lhs.value_, rhs.value_, MPFR_RNDN);
  return out;
}

BigFloat operator-(const BigFloat& lhs, const BigFloat& rhs) {
  BigFloat out(widest(lhs, rhs));
  mpfr_sub(out.value_, lhs.value_, rhs.value_, MPFR_RNDN);
  return out;
}

BigFloat operator*(const BigFloat& lhs, const BigFloat& rhs) {
  BigFloat out(widest(lhs, rhs));
  mpfr_mul(out.value_, lhs.value_, rhs.value_, MPFR_RNDN);
  return out;
}

BigFloat operator/(const BigFloat& lhs, const BigFloat& rhs) {
  BigFloat out(widest(lhs, rhs));
  mpfr_div(out.value_, lhs.value_, rhs.value_, MPFR_RNDN);
  return out;
}

BigFloat operator-(const BigFloat& value) {
  BigFloat out(value.precision());
  mpfr_neg(out.value_, value.value_, MPFR_RNDN);
  return out;
}

bool operator==(const BigFloat& lhs, const BigFloat& rhs) { return mpfr_equal_p(lhs.value_, rhs.value_) != 0; }

std::partial_ordering operator<=>(const BigFloat& lhs, const BigFloat& rhs) {
  if (mpfr_unordered_p(lhs.value_, rhs.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(lhs.value_, rhs.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

BigFloat abs(const BigFloat& value) {
  BigFloat out(value.precision());
  mpfr_abs(out.get(), value.get(), MPFR_RNDN);
  return out;
}

BigFloat mulRational(const BigFloat& value, const BigRational& factor) {
  BigFloat out(value.precision());
  mpfr_mul_q(out.get(), value.get(), factor.get_mpq_t(), MPFR_RNDN);
  return out;
}

int compare(const BigFloat& lhs, const BigRational& rhs) {
  const int c = mpfr_cmp_q(lhs.get(), rhs.get_mpq_t());
  return (c > 0) - (c < 0);
}

int decimalDigitsBelow(const BigFloat& x, int cap) {
  if (x.isZero()) return cap;
  BigFloat l(64);
  mpfr_log10(l.get(), abs(x).get(), MPFR_RNDN);
  const double d = -l.toDouble();
  if (!std::isfinite(d)) return cap;
  return std::clamp(static_cast<int>(std::floor(d)), 0, cap);
}

BigRational toRational(const BigFloat& value) {
  if (!value.isFinite()) throw DomainError("non-finite value has no rational form");
  BigRational out;
  mpfr_get_q(out.get_mpq_t(), value.get());
  out.canonicalize();
  return out;
}

}  // namespace rampi
