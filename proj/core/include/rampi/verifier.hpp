#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rampi/big_float.hpp"
#include "rampi/series.hpp"
#include "rampi/summation.hpp"

namespace rampi {

struct VerificationReport {
  SeriesSpec spec;
  SumMethod method = SumMethod::directExact;
  std::int64_t termsUsed = 0;
  long workingPrecisionBits = 0;
  BigFloat lhsEstimate;
  std::optional<BigFloat> rigorousTailBound;
  BigFloat rhsValue;
  BigFloat absError;
  BigFloat relError;
  int digitsAgreed = 0;
  int requestedDigits = 0;
  bool pass = false;
  std::int64_t elapsedMillis = 0;
  // Free-form provenance, e.g. "gauss-reduced" or a catalog id. Not part of
  // the JSON report.
  std::string label;
};

struct VerifyOptions {
  SumMode mode = SumMode::accelerated;
  AccelerationScheme scheme = AccelerationScheme::levinU;
  std::int64_t maxTerms = 1'000'000;
  long precisionBits = 0;
  int threads = 1;
};

// Compares the series against an explicitly supplied right-hand side. The
// other entry points are thin wrappers; tests use this for negative controls.
VerificationReport verifyAgainst(const SeriesSpec& spec, const ClosedFormRHS& rhs, int digits,
                                 const VerifyOptions& options = {});

VerificationReport verifySpec(const SeriesSpec& spec, int digits, const VerifyOptions& options = {});

// Checks scale * series = head + scale * tail numerically; the tail is the
// series from index identity.headTerms on.
VerificationReport verifyNormalized(const NormalizedIdentity& identity, int digits, const VerifyOptions& options = {});

// The same computation as verifySpec, labelled as an instance of Gauss's
// 2F1(a+alpha, b+1-alpha; c+1; 1) summation with rational parameters.
VerificationReport verifyGaussReduced(const RationalAlpha& alpha, std::int64_t a, std::int64_t b, std::int64_t c,
                                      int digits, const VerifyOptions& options = {});

using SpecTransform = std::function<SeriesSpec(const SeriesSpec&)>;

// True iff every spec and its image under `swap` (default: the reflection
// (alpha, a, b) -> (1-alpha, b, a)) have identical terms for n = 0..200 and
// identical closed-form constants.
bool verifySymmetry(std::span<const SeriesSpec> specs, const SpecTransform& swap = reflected);

}  // namespace rampi
