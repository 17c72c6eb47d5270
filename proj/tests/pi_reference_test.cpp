#include <gtest/gtest.h>

#include <string>

#include "rampi/errors.hpp"
#include "rampi/pi_reference.hpp"
#include "rampi/series.hpp"

namespace rampi {
namespace {

// Fifty digits kept only as a smoke check; the dual-formula run is the
// actual validation.
const std::string kPi50 = "3.1415926535897932384626433832795028841971693993751";

TEST(ComputePi, TenDigits) {
  const PiReference ref = computePi(10);
  EXPECT_EQ(ref.decimal(), "3.141592654");
  EXPECT_GE(ref.agreementDigits, 10);
}

TEST(ComputePi, FiftyDigitsAgree) {
  const PiReference ref = computePi(50);
  EXPECT_GE(ref.agreementDigits, 50);
  EXPECT_EQ(ref.value.toString(50), kPi50);
}

TEST(ComputePi, PrefixStableAcrossPrecisions) {
  const std::string wide = computePi(400).value.toString(390);
  for (int d : {20, 75, 150, 300}) {
    const std::string narrow = computePi(d).value.toString(d - 2);
    EXPECT_EQ(wide.substr(0, narrow.size() - 1), narrow.substr(0, narrow.size() - 1)) << d;
  }
}

TEST(ComputePi, Rejects) {
  EXPECT_THROW(computePi(0), DomainError);
  EXPECT_THROW(computePi(-3), DomainError);
  EXPECT_THROW(computePi(10001), BudgetExceeded);
  EXPECT_THROW(computePi(200, 100), BudgetExceeded);
}

TEST(ComputePi, WorkingBits) { EXPECT_EQ(piWorkingBits(100), 333 + 32); }

TEST(PiAtPrecision, MatchesComputePi) {
  const BigFloat a = piAtPrecision(300);
  const BigFloat b = computePi(90).value;
  EXPECT_LE(abs(a - b), BigFloat::pow2(-290, 64));
  EXPECT_EQ(a, piAtPrecision(300));  // cached value is identical
}

TEST(ArctanSeries, TruncationBelowTarget) {
  const long bits = 200;
  BigFloat ref(bits + 40);
  BigFloat third(BigRational(1, 3), bits + 40);
  mpfr_atan(ref.get(), third.get(), MPFR_RNDN);
  const BigFloat ours(arctanInverseSeries(3, bits), bits + 40);
  EXPECT_LE(abs(ours - ref), BigFloat::pow2(-bits, 64));
  EXPECT_THROW(arctanInverseSeries(1, 64), DomainError);
}

TEST(SqrtBig, PerfectSquaresExact) {
  EXPECT_EQ(sqrtBig(BigRational(4), 17), BigFloat(2, 17));
  EXPECT_EQ(sqrtBig(BigRational(9, 16), 300), BigFloat(BigRational(3, 4), 300));
  EXPECT_TRUE(sqrtBig(BigRational(0), 64).isZero());
}

TEST(SqrtBig, SquareOfRootTwo) {
  const BigFloat r = sqrtBig(BigRational(2), 256);
  const BigRational rr = toRational(r);
  const BigRational diff = abs(BigRational(rr * rr - 2));
  EXPECT_LE(diff, BigRational(BigInt(1), BigInt(1) << 250));
}

TEST(SqrtBig, NestedRadical) {
  const long bits = 256;
  const BigFloat s5 = sqrtBig(BigRational(5), bits + 32);
  const BigFloat inner = BigFloat(10, bits + 32) - mulRational(s5, BigRational(2));
  const BigFloat outer = sqrtBig(toRational(inner), bits);
  const BigFloat back = outer * outer + mulRational(s5, BigRational(2)) - BigFloat(10, bits);
  EXPECT_LE(abs(back), BigFloat::pow2(-248, 64));
}

TEST(SqrtBig, RefinementKeepsLeadingDigits) {
  const BigFloat lo = sqrtBig(BigRational(7, 3), 128);
  const BigFloat hi = sqrtBig(BigRational(7, 3), 256);
  EXPECT_EQ(lo.toString(35), hi.toString(35));
  EXPECT_LE(abs(lo - hi), BigFloat::pow2(-124, 64));
}

TEST(SqrtBig, NegativeRejected) { EXPECT_THROW(sqrtBig(BigRational(-1), 64), DomainError); }

TEST(EvalSurd, KindOneIsExact) {
  SurdConstant one = sinPiRational({1, 2});
  EXPECT_EQ(evalSurd(one, 512), BigFloat(1, 512));
}

}  // namespace
}  // namespace rampi
