#include "rampi/series.hpp"

#include <algorithm>
#include <numeric>

#include "rampi/errors.hpp"
#include "rampi/shifted_factorial.hpp"

namespace rampi {

RationalAlpha makeAlpha(std::int64_t p, std::int64_t q) {
  if (q <= 0 || p <= 0 || p >= q) {
    throw DomainError("alpha = " + std::to_string(p) + "/" + std::to_string(q) + " is not inside (0, 1)");
  }
  if (std::gcd(p, q) != 1) {
    throw DomainError("alpha = " + std::to_string(p) + "/" + std::to_string(q) + " is not in lowest terms");
  }
  return {p, q};
}

RationalAlpha parseAlpha(const std::string& text) {
  const BigRational value = parseRational(text);
  if (!value.get_num().fits_slong_p() || !value.get_den().fits_slong_p()) {
    throw DomainError("alpha '" + text + "' is too large");
  }
  return makeAlpha(value.get_num().get_si(), value.get_den().get_si());
}

std::int64_t SeriesSpec::negativeShiftCount() const { return std::max<std::int64_t>({-a, -b, 0}); }

std::string SeriesSpec::toString() const {
  return "(" + alpha.toString() + ", " + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

SeriesSpec buildSpec(const RationalAlpha& alpha, std::int64_t a, std::int64_t b, std::int64_t c) {
  const RationalAlpha checked = makeAlpha(alpha.p, alpha.q);
  if (c < 0) throw DomainError("c = " + std::to_string(c) + " must be nonnegative");
  if (c - a - b < 1) {
    throw DomainError("c - a - b = " + std::to_string(c - a - b) + " must be at least 1 for convergence");
  }
  return {checked, a, b, c};
}

SeriesSpec reflected(const SeriesSpec& spec) { return {spec.alpha.complement(), spec.b, spec.a, spec.c}; }

BigRational term(const SeriesSpec& spec, std::int64_t n) {
  if (n < 0) throw DomainError("term index must be nonnegative");
  const BigRational alpha = spec.alpha.value();
  BigRational out = poch(alpha, spec.a + n) * poch(1 - alpha, spec.b + n);
  out /= BigRational(factorial(n) * factorial(spec.c + n));
  return out;
}

BigRational termRatio(const SeriesSpec& spec, std::int64_t n) {
  if (n < 0) throw DomainError("term index must be nonnegative");
  const BigRational alpha = spec.alpha.value();
  const BigRational up = (alpha + static_cast<long>(spec.a + n)) * (1 - alpha + static_cast<long>(spec.b + n));
  const BigRational down(BigInt(static_cast<long>(n + 1)) * BigInt(static_cast<long>(spec.c + n + 1)));
  return up / down;
}

ClosedFormRHS rhsConstant(const SeriesSpec& spec) {
  const BigRational alpha = spec.alpha.value();
  const BigRational beta = 1 - alpha;
  BigRational value = poch(alpha, spec.a) * poch(beta, spec.b) * BigRational(factorial(spec.c - spec.a - spec.b - 1));
  value /= poch(alpha, spec.c - spec.b) * poch(beta, spec.c - spec.a);
  return {value, sinPiRational(spec.alpha)};
}

std::string displayRhs(const ClosedFormRHS& rhs) {
  const SurdDisplay d = displayScaled(rhs.rationalPart, rhs.sine, false);
  if (d.denominator == "1") return d.numerator + "/π";
  return d.numerator + "/(" + d.denominator + "π)";
}

NormalizedIdentity normalizeIdentity(const SeriesSpec& spec, const BigRational& scale,
                                     std::optional<std::int64_t> headTerms) {
  if (scale == 0) throw DomainError("normalization scale must be nonzero");
  const std::int64_t h = spec.negativeShiftCount();
  const std::int64_t peeled = headTerms.value_or(h);
  if (peeled < h) {
    throw DomainError("head must include all " + std::to_string(h) + " negative-shift terms");
  }

  NormalizedIdentity out;
  out.spec = spec;
  out.scale = scale;
  out.headTerms = peeled;
  BigRational head = 0;
  for (std::int64_t n = 0; n < peeled; ++n) head += term(spec, n);
  out.head = scale * head;
  out.tail = TailRule{h, peeled - h, spec.a + h, spec.b + h, h, spec.c + h};
  out.rhs = rhsConstant(spec);
  out.rhs.rationalPart *= scale;
  return out;
}

BigRational tailTerm(const NormalizedIdentity& identity, std::int64_t n) {
  const TailRule& t = identity.tail;
  const BigRational alpha = identity.spec.alpha.value();
  BigRational out = poch(alpha, t.pochShiftA + n) * poch(1 - alpha, t.pochShiftB + n);
  out /= BigRational(factorial(n + t.factorialShift) * factorial(n + t.factorialShiftC));
  return out;
}

}  // namespace rampi
