#pragma once

#include <string>

#include "rampi/big_float.hpp"
#include "rampi/rational.hpp"
#include "rampi/surd.hpp"

namespace rampi {

inline constexpr int kDefaultMaxPiDigits = 10000;

struct PiReference {
  int digits = 0;
  BigFloat value;           // formula A at the working precision
  int agreementDigits = 0;  // decimal digits on which both formulas agree

  // value rounded to `digits` significant digits
  std::string decimal() const { return value.toString(digits); }
};

// Working precision used for a d-digit request: ceil(d log2 10) + 32.
long piWorkingBits(int digits);

// Pi from two independent arctangent formulas,
//   A: pi/4 = 4 arctan(1/5) - arctan(1/239)
//   B: pi/4 = arctan(1/2) + arctan(1/3)
// each summed exactly by binary splitting. Throws AgreementFailure unless
// the two agree to at least `digits` decimal digits.
PiReference computePi(int digits, int maxDigits = kDefaultMaxPiDigits);

// Pi correct to (nearly) the given number of bits, validated the same way.
BigFloat piAtPrecision(long precisionBits);

// arctan(1/k) truncated with the alternating-series bound so the omitted tail
// is below 2^-(precisionBits+4). Exact rational result.
BigRational arctanInverseSeries(long k, long precisionBits);

// Newton square root, |result^2 - x| <= |x| 2^(4 - precisionBits).
// Exact for perfect-square rationals.
BigFloat sqrtBig(const BigRational& x, long precisionBits);

// sin(pi x) for rational x by reduction to an angle in [0, pi/4] and a
// rigorously truncated Taylor series.
BigFloat sinPiNumeric(const BigRational& x, long precisionBits);

BigFloat evalSurd(const SurdConstant& surd, long precisionBits);

}  // namespace rampi
