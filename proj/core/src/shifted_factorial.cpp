#include "rampi/shifted_factorial.hpp"

#include <string>

#include "rampi/errors.hpp"

namespace rampi {

namespace {

// Exact integer product over [lo, hi) of (num + den*k) split into a tree so
// that operand sizes stay balanced.
BigInt linearProduct(const BigInt& num, const BigInt& den, std::int64_t lo, std::int64_t hi) {
  if (hi - lo <= 8) {
    BigInt out = 1;
    for (std::int64_t k = lo; k < hi; ++k) out *= num + den * static_cast<long>(k);
    return out;
  }
  const std::int64_t mid = lo + (hi - lo) / 2;
  return linearProduct(num, den, lo, mid) * linearProduct(num, den, mid, hi);
}

}  // namespace

BigRational risingProduct(const BigRational& z, std::int64_t count) {
  if (count <= 0) return 1;
  const BigInt& num = z.get_num();
  const BigInt& den = z.get_den();
  BigInt denPower;
  mpz_pow_ui(denPower.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(count));
  BigRational out(linearProduct(num, den, 0, count), denPower);
  out.canonicalize();
  return out;
}

BigRational poch(const BigRational& z, std::int64_t n) {
  if (n >= 0) return risingProduct(z, n);
  // (z-1)(z-2)...(z-m) = (z-m)(z-m+1)...(z-1), a rising product from z-m.
  const std::int64_t m = -n;
  const BigRational start = z - BigRational(static_cast<long>(m));
  if (isInteger(z) && z >= 1 && z <= m) {
    throw PoleError("(" + toString(z) + ")_" + std::to_string(n) + " has a vanishing factor");
  }
  return 1 / risingProduct(start, m);
}

BigInt factorial(std::int64_t n) {
  if (n < 0) throw DomainError("factorial of negative integer " + std::to_string(n));
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

HalfGamma gammaHalf(std::int64_t n) {
  const std::int64_t m = n >= 0 ? n : -n;
  BigInt fourPow;
  mpz_ui_pow_ui(fourPow.get_mpz_t(), 4, static_cast<unsigned long>(m));
  BigRational ratio(factorial(2 * m), fourPow * factorial(m));
  ratio.canonicalize();
  if (n >= 0) return {ratio};
  BigRational inverse = 1 / ratio;
  if (m % 2 == 1) inverse = -inverse;
  return {inverse};
}

}  // namespace rampi
