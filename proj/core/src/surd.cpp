#include "rampi/surd.hpp"

#include "rampi/series.hpp"

namespace rampi {

std::string toString(SurdKind kind) {
  switch (kind) {
    case SurdKind::one:
      return "one";
    case SurdKind::half:
      return "half";
    case SurdKind::simpleSurd:
      return "simple-surd";
    case SurdKind::scaledSurdSum:
      return "scaled-surd-sum";
    case SurdKind::nestedSurd:
      return "nested-surd";
    case SurdKind::numericOnly:
      return "numeric-only";
  }
  return "numeric-only";
}

SurdConstant sinPiRational(const RationalAlpha& alpha) {
  SurdConstant s;
  const auto q = alpha.q;
  // sin(pi p/q) = sin(pi (q-p)/q), so fold onto p <= q/2.
  const auto p = std::min(alpha.p, alpha.q - alpha.p);
  s.alpha = makeRational(p, q);
  s.rationalPart = 0;
  const BigRational half = makeRational(1, 2);
  const BigRational quarter = makeRational(1, 4);

  if (q == 2) {
    s.kind = SurdKind::one;
    s.rationalPart = 1;
  } else if (q == 6) {
    s.kind = SurdKind::half;
    s.rationalPart = half;
  } else if (q == 3) {
    s.kind = SurdKind::simpleSurd;
    s.radicands = {{half, 3}};
  } else if (q == 4) {
    s.kind = SurdKind::simpleSurd;
    s.radicands = {{half, 2}};
  } else if (q == 10) {
    // sin(pi/10) = (sqrt5 - 1)/4, sin(3pi/10) = (sqrt5 + 1)/4
    s.kind = SurdKind::scaledSurdSum;
    s.rationalPart = p == 1 ? -quarter : quarter;
    s.radicands = {{quarter, 5}};
  } else if (q == 5) {
    // sin(pi/5) = sqrt(10 - 2 sqrt5)/4, sin(2pi/5) = sqrt(10 + 2 sqrt5)/4
    s.kind = SurdKind::nestedSurd;
    s.radicands = {{quarter, 10}};
    s.innerRadicand = SurdTerm{p == 1 ? BigRational(-2) : BigRational(2), 5};
  } else {
    s.kind = SurdKind::numericOnly;
  }
  return s;
}

namespace {

std::string sqrtText(const std::string& radicand, bool latex) {
  return latex ? "\\sqrt{" + radicand + "}" : "√" + (radicand.size() > 1 && radicand.find_first_not_of("0123456789") != std::string::npos ? "(" + radicand + ")" : radicand);
}

std::string minusText(bool latex) { return latex ? "-" : "−"; }

// Prefix an integer multiplier in front of a radical expression, dropping 1.
std::string withMultiplier(const BigInt& m, const std::string& body, bool latex) {
  if (m == 1) return body;
  if (m == -1) return minusText(latex) + body;
  return m.get_str() + body;
}

}  // namespace

SurdDisplay displayScaled(const BigRational& factor, const SurdConstant& surd, bool latex) {
  SurdDisplay out;
  switch (surd.kind) {
    case SurdKind::one:
    case SurdKind::half: {
      const BigRational total = factor * surd.rationalPart;
      out.numerator = total.get_num().get_str();
      out.denominator = total.get_den().get_str();
      return out;
    }
    case SurdKind::simpleSurd: {
      const SurdTerm& t = surd.radicands.front();
      const BigRational f = factor * t.coefficient;
      out.numerator = withMultiplier(f.get_num(), sqrtText(toString(t.radicand), latex), latex);
      out.denominator = f.get_den().get_str();
      return out;
    }
    case SurdKind::scaledSurdSum: {
      const SurdTerm& t = surd.radicands.front();
      const BigRational f = factor * t.coefficient;
      const BigRational shift = surd.rationalPart / t.coefficient;
      std::string body = sqrtText(toString(t.radicand), latex);
      if (shift < 0) {
        body += minusText(latex) + toString(BigRational(-shift));
      } else {
        body += "+" + toString(shift);
      }
      out.numerator = withMultiplier(f.get_num(), "(" + body + ")", latex);
      out.denominator = f.get_den().get_str();
      return out;
    }
    case SurdKind::nestedSurd: {
      const SurdTerm& t = surd.radicands.front();
      const SurdTerm& inner = *surd.innerRadicand;
      const BigRational f = factor * t.coefficient;
      const BigRational v = inner.coefficient;
      std::string radicand = toString(t.radicand);
      radicand += v < 0 ? minusText(latex) : std::string("+");
      const BigRational mag = v < 0 ? BigRational(-v) : v;
      if (mag != 1) radicand += toString(mag);
      radicand += latex ? "\\sqrt{" + toString(inner.radicand) + "}" : "√" + toString(inner.radicand);
      out.numerator = withMultiplier(f.get_num(), sqrtText(radicand, latex), latex);
      out.denominator = f.get_den().get_str();
      return out;
    }
    case SurdKind::numericOnly:
      break;
  }
  const BigRational f = factor;
  const std::string p = surd.alpha.get_num().get_str();
  const std::string q = surd.alpha.get_den().get_str();
  const std::string sine = latex ? "\\sin\\frac{" + (p == "1" ? std::string() : p) + "\\pi}{" + q + "}"
                                 : "sin(" + (p == "1" ? std::string() : p) + "π/" + q + ")";
  out.numerator = withMultiplier(f.get_num(), sine, latex);
  out.denominator = f.get_den().get_str();
  return out;
}

}  // namespace rampi
