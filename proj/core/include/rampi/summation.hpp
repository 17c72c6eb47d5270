#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rampi/big_float.hpp"
#include "rampi/rational.hpp"
#include "rampi/series.hpp"

namespace rampi {

enum class SumMethod { directExact, directFloat, levinU, wynnEpsilon };
enum class AccelerationScheme { levinU, wynnEpsilon };
enum class SumMode { automatic, rigorous, accelerated };

std::string toString(SumMethod method);
std::string toString(AccelerationScheme scheme);
std::string toString(SumMode mode);
SumMode parseSumMode(const std::string& text);

struct SumOptions {
  SumMode mode = SumMode::automatic;
  AccelerationScheme scheme = AccelerationScheme::levinU;
  std::int64_t maxTerms = 1'000'000;
  long precisionBits = 0;  // 0 picks a precision from the digit target
  int threads = 1;         // binary-splitting fan-out; results do not depend on it
  std::int64_t gMax = 64;
  // Absolute target for the rigorous tail bound; defaults to 10^-digits.
  std::optional<BigRational> absTolerance;
};

struct SumResult {
  BigFloat value;
  std::optional<BigRational> exactValue;  // direct-exact only
  std::int64_t termsUsed = 0;
  SumMethod method = SumMethod::directExact;
  std::optional<BigFloat> rigorousTailBound;  // direct modes only
  std::optional<BigFloat> heuristicError;     // accelerated modes only
  long workingPrecisionBits = 0;
};

struct RangeSum {
  BigRational sum;       // sum of term(n) for n in [start, start + count)
  BigRational nextTerm;  // term(start + count)
};

// Binary splitting over the term-ratio recurrence: numerator, denominator and
// partial-sum products are combined pairwise and reduced once at the end.
RangeSum rangeSumExact(const SeriesSpec& spec, std::int64_t start, std::int64_t count, int threads = 1);

// sum_{n=0}^{N-1} term(spec, n), exact.
BigRational partialSumExact(const SeriesSpec& spec, std::int64_t N, int threads = 1);

// Smallest truncation index at which a dominating ratio can be certified.
// Throws BoundUnavailable if none exists below 10^4.
std::int64_t minimumBoundIndex(const SeriesSpec& spec, std::int64_t gMax = 64);

// Smallest g in [0, gMax] with
//   (n+alpha+a)(n+1-alpha+b)(n+g+s) <= (n+g)(n+1)(n+c+1)   for all n >= N,
// s = c-a-b+1, or nullopt.
std::optional<std::int64_t> dominatingShift(const SeriesSpec& spec, std::int64_t N, std::int64_t gMax = 64);

// Exact upper bound term(N) (N+g+s-1)/(s-1) on sum_{n>=N} term(n), from the
// dominating series summed in closed form by Gauss's theorem.
BigRational tailBoundExact(const SeriesSpec& spec, std::int64_t N, const BigRational& termAtN,
                           std::int64_t gMax = 64);

// Same bound rounded upward.
BigFloat tailBound(const SeriesSpec& spec, std::int64_t N, std::int64_t gMax = 64, long precisionBits = 64);

// Term values rounded at `precisionBits` and summed with Neumaier
// compensation.
BigFloat partialSumFloat(const SeriesSpec& spec, std::int64_t N, long precisionBits);

struct Acceleration {
  BigFloat estimate;
  BigFloat heuristicError;
};

// Levin u (beta = 1) or Wynn epsilon over s_0, s_1, ... Requires >= 8
// partials; works at the widest precision among them.
Acceleration accelerate(std::span<const BigFloat> partials, AccelerationScheme scheme);

// Sums the series from index `start` to a relative accuracy of 10^-digits.
SumResult sumTailToDigits(const SeriesSpec& spec, std::int64_t start, int digits, const SumOptions& options = {});

inline SumResult sumToDigits(const SeriesSpec& spec, int digits, const SumOptions& options = {}) {
  return sumTailToDigits(spec, 0, digits, options);
}

// Working precision used by the accelerated path for a given target and
// number of partial sums.
long acceleratedPrecisionBits(int digits, std::int64_t partials, long requested = 0);

}  // namespace rampi
