#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rampi/rational.hpp"

namespace rampi {

struct RationalAlpha;

enum class SurdKind { one, half, simpleSurd, scaledSurdSum, nestedSurd, numericOnly };

std::string toString(SurdKind kind);

// One radical term: coefficient * sqrt(radicand).
struct SurdTerm {
  BigRational coefficient;
  BigRational radicand;

  friend bool operator==(const SurdTerm&, const SurdTerm&) = default;
};

// Exact symbolic value of sin(pi * alpha):
//
//   rationalPart + sum_i coefficient_i * sqrt(radicand_i)
//
// For the nested kind there is exactly one radical term and its radicand is
// replaced by radicand + inner.coefficient * sqrt(inner.radicand). The
// numeric-only kind carries the angle in `alpha` and nothing else. `alpha`
// is always folded into (0, 1/2] so that alpha and 1 - alpha compare equal.
struct SurdConstant {
  SurdKind kind = SurdKind::numericOnly;
  BigRational rationalPart;
  std::vector<SurdTerm> radicands;
  std::optional<SurdTerm> innerRadicand;
  BigRational alpha;

  friend bool operator==(const SurdConstant&, const SurdConstant&) = default;
};

// Closed form for q in {2, 3, 4, 5, 6, 10}; numeric-only otherwise.
SurdConstant sinPiRational(const RationalAlpha& alpha);

// Human-readable rendering of factor * surd, e.g. "81√3/8" or "25(√5−1)/9".
// The result is the numerator of a "/π" display; `unicode` selects √ and −
// versus LaTeX.
struct SurdDisplay {
  std::string numerator;    // factor's numerator times the radical part
  std::string denominator;  // factor's denominator ("1" when integral)
};
SurdDisplay displayScaled(const BigRational& factor, const SurdConstant& surd, bool latex);

}  // namespace rampi
