#pragma once

#include <cstdint>

#include "rampi/rational.hpp"

namespace rampi {

// Rising shifted factorial (z)_n = Gamma(z+n)/Gamma(z) at an integer shift.
//
//   n >= 0:  z (z+1) ... (z+n-1)             (empty product for n = 0)
//   n <  0:  1 / ((z-1) (z-2) ... (z-|n|))
//
// Computed as an exact product; throws PoleError if a factor of the
// negative-shift product vanishes.
BigRational poch(const BigRational& z, std::int64_t n);

BigInt factorial(std::int64_t n);

// Product z (z+1) ... (z+count-1) by a balanced product tree. Exposed for the
// summation engine, which needs single terms deep into a series.
BigRational risingProduct(const BigRational& z, std::int64_t count);

// Gamma at a half-integer as a rational multiple of sqrt(pi).
struct HalfGamma {
  BigRational coefficient;
};

// n >= 0 selects Gamma(n + 1/2) = (2n)! / (4^n n!) sqrt(pi);
// n <  0 selects Gamma(1/2 + n) = (-1)^|n| 4^|n| |n|! / (2|n|)! sqrt(pi).
HalfGamma gammaHalf(std::int64_t n);

}  // namespace rampi
