#include "rampi/verifier.hpp"

#include <chrono>
#include <cmath>

#include "rampi/errors.hpp"
#include "rampi/pi_reference.hpp"

namespace rampi {

namespace {

BigRational powerOfTen(int exponent) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exponent)));
  return exponent >= 0 ? BigRational(p) : BigRational(BigInt(1), p);
}

BigFloat rhsNumeric(const ClosedFormRHS& rhs, long bits) {
  const long work = bits + 16;
  const BigFloat sine = evalSurd(rhs.sine, work);
  const BigFloat pi = piAtPrecision(work);
  return (mulRational(sine, rhs.rationalPart) / pi).withPrecision(bits);
}

// LHS = head + scale * sum_{n >= start} term(n), compared with `rhs`.
VerificationReport verifyCore(const SeriesSpec& spec, std::int64_t start, const BigRational& head,
                              const BigRational& scale, const ClosedFormRHS& rhs, int digits,
                              const VerifyOptions& options) {
  if (digits < 1) throw DomainError("digits must be positive");
  const auto started = std::chrono::steady_clock::now();

  const long baseBits = std::max({options.precisionBits, 4L * digits + 64, 128L});
  const BigFloat rhsEstimate = rhsNumeric(rhs, baseBits);
  const BigRational absScale = abs(scale);

  SumOptions sumOptions;
  sumOptions.mode = options.mode;
  sumOptions.scheme = options.scheme;
  sumOptions.maxTerms = options.maxTerms;
  sumOptions.precisionBits = options.precisionBits;
  sumOptions.threads = options.threads;

  int sumDigits = digits;
  if (options.mode == SumMode::rigorous || (options.mode == SumMode::automatic && digits <= 6)) {
    // Certify an absolute error below half of 10^-digits * min(1, |rhs|).
    BigRational magnitude = toRational(abs(rhsEstimate).withPrecision(64, Rounding::down));
    if (magnitude > 1) magnitude = 1;
    if (magnitude == 0) magnitude = powerOfTen(-digits);
    sumOptions.absTolerance = powerOfTen(-digits) * magnitude / (2 * absScale);
  } else {
    sumDigits = digits + 2;
  }

  const SumResult sum = sumTailToDigits(spec, start, sumDigits, sumOptions);
  const long bits = std::max(sum.workingPrecisionBits, baseBits);

  VerificationReport report;
  report.spec = spec;
  report.method = sum.method;
  report.termsUsed = sum.termsUsed;
  report.workingPrecisionBits = bits;
  report.requestedDigits = digits;
  if (sum.exactValue) {
    report.lhsEstimate = BigFloat(head + scale * *sum.exactValue, bits);
  } else {
    report.lhsEstimate = BigFloat(head, bits) + mulRational(sum.value.withPrecision(bits), scale);
  }
  if (sum.rigorousTailBound) report.rigorousTailBound = mulRational(*sum.rigorousTailBound, absScale);
  report.rhsValue = rhsNumeric(rhs, bits);
  report.absError = abs(report.lhsEstimate - report.rhsValue);
  report.relError = report.rhsValue.isZero() ? report.absError : report.absError / abs(report.rhsValue);
  report.digitsAgreed = decimalDigitsBelow(report.relError, static_cast<int>(static_cast<double>(bits) * 0.30103));

  bool pass = compare(report.relError, powerOfTen(-digits)) <= 0;
  if (report.rigorousTailBound) {
    // Four ulps of the RHS at working precision cover both roundings.
    BigFloat slack = BigFloat::pow2(report.rhsValue.isZero() ? -bits : report.rhsValue.exponent() - bits + 2, bits);
    pass = pass && report.absError <= *report.rigorousTailBound + slack;
  }
  report.pass = pass;
  report.elapsedMillis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace

VerificationReport verifyAgainst(const SeriesSpec& spec, const ClosedFormRHS& rhs, int digits,
                                 const VerifyOptions& options) {
  return verifyCore(spec, 0, BigRational(0), BigRational(1), rhs, digits, options);
}

VerificationReport verifySpec(const SeriesSpec& spec, int digits, const VerifyOptions& options) {
  return verifyAgainst(spec, rhsConstant(spec), digits, options);
}

VerificationReport verifyNormalized(const NormalizedIdentity& identity, int digits, const VerifyOptions& options) {
  VerificationReport report =
      verifyCore(identity.spec, identity.headTerms, identity.head, identity.scale, identity.rhs, digits, options);
  report.label = "normalized";
  return report;
}

VerificationReport verifyGaussReduced(const RationalAlpha& alpha, std::int64_t a, std::int64_t b, std::int64_t c,
                                      int digits, const VerifyOptions& options) {
  VerificationReport report = verifySpec(buildSpec(alpha, a, b, c), digits, options);
  report.label = "gauss-reduced";
  return report;
}

bool verifySymmetry(std::span<const SeriesSpec> specs, const SpecTransform& swap) {
  constexpr std::int64_t kTerms = 200;
  for (const SeriesSpec& spec : specs) {
    const SeriesSpec image = swap(spec);
    BigRational lhs = term(spec, 0);
    BigRational rhs = term(image, 0);
    for (std::int64_t n = 0;; ++n) {
      if (lhs != rhs) return false;
      if (n == kTerms) break;
      lhs *= termRatio(spec, n);
      rhs *= termRatio(image, n);
    }
    if (!(rhsConstant(spec) == rhsConstant(image))) return false;
  }
  return true;
}

}  // namespace rampi
