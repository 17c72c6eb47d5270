#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rampi/rational.hpp"
#include "rampi/surd.hpp"

namespace rampi {

// alpha = p/q with 0 < p < q and gcd(p, q) = 1.
struct RationalAlpha {
  std::int64_t p = 1;
  std::int64_t q = 2;

  BigRational value() const { return makeRational(p, q); }
  RationalAlpha complement() const { return {q - p, q}; }
  std::string toString() const { return std::to_string(p) + "/" + std::to_string(q); }

  friend bool operator==(const RationalAlpha&, const RationalAlpha&) = default;
};

// Throws DomainError unless p/q is already canonical and inside (0, 1).
RationalAlpha makeAlpha(std::int64_t p, std::int64_t q);
// Accepts any p/q string that reduces to a value inside (0, 1).
RationalAlpha parseAlpha(const std::string& text);

// One instance of the four-parameter expansion
//
//   sum_{n>=0} (alpha)_{a+n} (1-alpha)_{b+n} / (n! (c+n)!)
//     = (alpha)_a (1-alpha)_b (c-a-b-1)! / ((alpha)_{c-b} (1-alpha)_{c-a}) * sin(pi alpha) / pi
//
// Valid specs satisfy c >= 0 and c - a - b >= 1.
struct SeriesSpec {
  RationalAlpha alpha;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 1;

  // Terms decay like n^-(c-a-b+1).
  std::int64_t decayExponent() const { return c - a - b + 1; }
  // Number of leading indices with a+n < 0 or b+n < 0.
  std::int64_t negativeShiftCount() const;
  std::string toString() const;

  friend bool operator==(const SeriesSpec&, const SeriesSpec&) = default;
};

SeriesSpec buildSpec(const RationalAlpha& alpha, std::int64_t a, std::int64_t b, std::int64_t c);

// The spec with (alpha, a, b) replaced by (1 - alpha, b, a); same series.
SeriesSpec reflected(const SeriesSpec& spec);

BigRational term(const SeriesSpec& spec, std::int64_t n);

// term(n+1) / term(n) = (alpha+a+n)(1-alpha+b+n) / ((n+1)(c+n+1)).
BigRational termRatio(const SeriesSpec& spec, std::int64_t n);

// rationalPart * sine / pi.
struct ClosedFormRHS {
  BigRational rationalPart;
  SurdConstant sine;

  friend bool operator==(const ClosedFormRHS&, const ClosedFormRHS&) = default;
};

ClosedFormRHS rhsConstant(const SeriesSpec& spec);

// "4/π", "81√3/(8π)", ...
std::string displayRhs(const ClosedFormRHS& rhs);

// Reindexed tail of a normalized identity. The displayed summand is
//
//   (alpha)_{pochShiftA+n} (1-alpha)_{pochShiftB+n} / ((n+shift)! (n+shift+c)!)
//
// for n >= startIndex, which is the original term at index n + shift.
struct TailRule {
  std::int64_t shift = 0;
  std::int64_t startIndex = 0;
  std::int64_t pochShiftA = 0;
  std::int64_t pochShiftB = 0;
  std::int64_t factorialShift = 0;
  std::int64_t factorialShiftC = 0;
};

// scale * (series value) = head + scale * sum_{n >= tail.startIndex} tailTerm(n).
struct NormalizedIdentity {
  SeriesSpec spec;
  BigRational head;
  BigRational scale;
  std::int64_t headTerms = 0;
  TailRule tail;
  ClosedFormRHS rhs;  // already multiplied by scale
};

// Peels off the first `headTerms` terms (default: negativeShiftCount()) and
// multiplies through by `scale`. headTerms may not be smaller than the number
// of negative-shift terms.
NormalizedIdentity normalizeIdentity(const SeriesSpec& spec, const BigRational& scale,
                                     std::optional<std::int64_t> headTerms = std::nullopt);

// Unscaled tail summand at displayed index n.
BigRational tailTerm(const NormalizedIdentity& identity, std::int64_t n);

}  // namespace rampi
