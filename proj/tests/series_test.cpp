#include <gtest/gtest.h>

#include "rampi/errors.hpp"
#include "rampi/series.hpp"
#include "rampi/shifted_factorial.hpp"
#include "rampi/summation.hpp"
#include "support.hpp"

namespace rampi {
namespace {

const RationalAlpha kHalf{1, 2};

BigRational q(std::int64_t n, std::int64_t d = 1) { return makeRational(n, d); }

TEST(BuildSpec, AcceptsValid) {
  const SeriesSpec s = buildSpec(kHalf, 0, 0, 1);
  EXPECT_EQ(s.alpha, kHalf);
  EXPECT_EQ(s.decayExponent(), 2);
  EXPECT_NO_THROW(buildSpec({1, 3}, -1, -1, 0));
  EXPECT_EQ(buildSpec({1, 3}, -1, -1, 0).decayExponent(), 3);
}

TEST(BuildSpec, RejectsDivergentOrNegativeC) {
  EXPECT_THROW(buildSpec(kHalf, 1, 1, 1), DomainError);
  EXPECT_THROW(buildSpec(kHalf, 0, 0, 0), DomainError);
  EXPECT_THROW(buildSpec(kHalf, -3, -3, -1), DomainError);
}

TEST(Alpha, CanonicalOnly) {
  EXPECT_THROW(makeAlpha(2, 4), DomainError);
  EXPECT_THROW(makeAlpha(3, 2), DomainError);
  EXPECT_THROW(makeAlpha(0, 5), DomainError);
  EXPECT_THROW(makeAlpha(1, 1), DomainError);
  EXPECT_EQ(parseAlpha("2/4"), kHalf);
  EXPECT_EQ(parseAlpha("3/9"), (RationalAlpha{1, 3}));
  EXPECT_THROW(parseAlpha("3/2"), DomainError);
  EXPECT_THROW(parseAlpha("1/0"), DomainError);
  EXPECT_THROW(parseAlpha("x"), DomainError);
}

TEST(Term, Values) {
  EXPECT_EQ(term(buildSpec(kHalf, 0, 0, 1), 0), 1);
  EXPECT_EQ(term(buildSpec(kHalf, 0, 0, 1), 2), q(3, 64));
  EXPECT_EQ(term(buildSpec(kHalf, -1, -1, 0), 0), 4);
}

TEST(TermRatio, Values) {
  const SeriesSpec s = buildSpec(kHalf, 0, 0, 1);
  EXPECT_EQ(termRatio(s, 0), q(1, 8));
  EXPECT_EQ(termRatio(s, 0), term(s, 1) / term(s, 0));
  const BigRational far = termRatio(s, 1'000'000);
  EXPECT_LT(abs(BigRational(far - 1)), q(1, 100000));
}

TEST(TermRatio, ConsistentWithTerms) {
  for (const SeriesSpec& s : testing::randomSpecs(7, 20)) {
    BigRational t = term(s, 0);
    for (std::int64_t n = 0; n <= 100; ++n) {
      const BigRational next = term(s, n + 1);
      ASSERT_EQ(next, t * termRatio(s, n)) << s.toString() << " n=" << n;
      t = next;
    }
  }
}

TEST(Positivity, TermsPositivePastNegativeShifts) {
  for (const SeriesSpec& s : testing::randomSpecs(11, 50)) {
    for (std::int64_t n = s.negativeShiftCount(); n < s.negativeShiftCount() + 60; ++n) {
      ASSERT_GT(term(s, n), 0) << s.toString() << " n=" << n;
    }
  }
}

TEST(RhsConstant, Values) {
  EXPECT_EQ(rhsConstant(buildSpec(kHalf, 0, 0, 1)).rationalPart, 4);
  EXPECT_EQ(rhsConstant(buildSpec(kHalf, 0, 0, 2)).rationalPart, q(16, 9));
  const ClosedFormRHS third = rhsConstant(buildSpec({1, 3}, -1, -1, 0));
  EXPECT_EQ(third.rationalPart, q(81, 4));
  EXPECT_EQ(third.sine.kind, SurdKind::simpleSurd);
}

TEST(RhsConstant, Display) {
  EXPECT_EQ(displayRhs(rhsConstant(buildSpec(kHalf, 0, 0, 1))), "4/π");
  EXPECT_EQ(displayRhs(rhsConstant(buildSpec(kHalf, 0, 0, 2))), "16/(9π)");
  EXPECT_EQ(displayRhs(rhsConstant(buildSpec({1, 3}, -1, -1, 0))), "81√3/(8π)");
}

TEST(RhsConstant, HalfIntegerGammaRouteAgrees) {
  // With alpha = 1/2, (1/2)_m equals the sqrt(pi) coefficient of Gamma(m + 1/2).
  for (const SeriesSpec& s : testing::randomSpecs(13, 200)) {
    if (!(s.alpha == kHalf)) continue;
    const BigRational viaGamma = gammaHalf(s.a).coefficient * gammaHalf(s.b).coefficient *
                                 BigRational(factorial(s.c - s.a - s.b - 1)) /
                                 (gammaHalf(s.c - s.a).coefficient * gammaHalf(s.c - s.b).coefficient);
    EXPECT_EQ(rhsConstant(s).rationalPart, viaGamma) << s.toString();
  }
  for (std::int64_t a = -3; a <= 3; ++a) {
    for (std::int64_t b = -3; b <= 3; ++b) {
      for (std::int64_t c = std::max<std::int64_t>(0, a + b + 1); c <= 8; ++c) {
        const SeriesSpec s = buildSpec(kHalf, a, b, c);
        const BigRational viaGamma = gammaHalf(a).coefficient * gammaHalf(b).coefficient *
                                     BigRational(factorial(c - a - b - 1)) /
                                     (gammaHalf(c - a).coefficient * gammaHalf(c - b).coefficient);
        ASSERT_EQ(rhsConstant(s).rationalPart, viaGamma) << s.toString();
      }
    }
  }
}

TEST(Reflection, SameTermsAndConstant) {
  const SeriesSpec s = buildSpec({1, 5}, -1, 2, 4);
  const SeriesSpec r = reflected(s);
  EXPECT_EQ(r.alpha, (RationalAlpha{4, 5}));
  EXPECT_EQ(r.a, 2);
  EXPECT_EQ(r.b, -1);
  for (std::int64_t n = 0; n < 30; ++n) EXPECT_EQ(term(s, n), term(r, n));
  EXPECT_EQ(rhsConstant(s), rhsConstant(r));
}

TEST(Normalize, GlaisherForm) {
  const NormalizedIdentity id = normalizeIdentity(buildSpec(kHalf, -1, -1, 0), q(1), 2);
  EXPECT_EQ(id.head, 5);
  EXPECT_EQ(id.rhs.rationalPart, 16);
  EXPECT_EQ(id.tail.startIndex, 1);
  EXPECT_EQ(displayRhs(id.rhs), "16/π");
}

TEST(Normalize, ScaleTwoForm) {
  const NormalizedIdentity id = normalizeIdentity(buildSpec(kHalf, -1, -1, 1), q(2), 2);
  EXPECT_EQ(id.head, 9);
  EXPECT_EQ(id.scale, 2);
  EXPECT_EQ(displayRhs(id.rhs), "256/(9π)");
}

TEST(Normalize, DoubleShiftForm) {
  const NormalizedIdentity id = normalizeIdentity(buildSpec(kHalf, -2, -2, 0), q(36), 3);
  EXPECT_EQ(id.head, 217);
  EXPECT_EQ(id.scale, 36);
  EXPECT_EQ(displayRhs(id.rhs), "2048/(3π)");
}

TEST(Normalize, DefaultPeelsNegativeShiftTermsOnly) {
  const NormalizedIdentity id = normalizeIdentity(buildSpec(kHalf, -1, -1, 1), q(2));
  EXPECT_EQ(id.headTerms, 1);
  EXPECT_EQ(id.head, 8);
  EXPECT_EQ(id.tail.startIndex, 0);
}

TEST(Normalize, HeadPolynomials) {
  for (std::int64_t k = 0; k <= 5; ++k) {
    const NormalizedIdentity one = normalizeIdentity(buildSpec(kHalf, -1, -1, k), BigRational(factorial(k + 1)), 2);
    EXPECT_EQ(one.head, 4 * k + 5) << k;
    const NormalizedIdentity two =
        normalizeIdentity(buildSpec(kHalf, -2, -2, k), BigRational(18 * factorial(k + 2)), 3);
    EXPECT_EQ(two.head, 32 * k * k + 168 * k + 217) << k;
  }
}

TEST(Normalize, AlphaFamiliesHaveHeadOne) {
  struct Case {
    RationalAlpha alpha;
    std::int64_t num, den;
    const char* rhs;
  };
  const Case cases[] = {{{1, 3}, 2, 9, "9√3/(4π)"},
                        {{1, 4}, 3, 16, "8√2/(3π)"},
                        {{1, 6}, 5, 36, "18/(5π)"},
                        {{1, 10}, 9, 100, "25(√5−1)/(9π)"},
                        {{1, 5}, 4, 25, "25√(10−2√5)/(16π)"}};
  for (const Case& c : cases) {
    for (std::int64_t k = 0; k <= 4; ++k) {
      const BigRational scale = BigRational(factorial(k)) * q(c.num, c.den);
      const NormalizedIdentity id = normalizeIdentity(buildSpec(c.alpha, -1, -1, k), scale);
      EXPECT_EQ(id.head, 1) << c.alpha.toString() << " k=" << k;
      if (k == 0) EXPECT_EQ(displayRhs(id.rhs), c.rhs);
    }
  }
}

TEST(Normalize, Rejects) {
  const SeriesSpec s = buildSpec(kHalf, -2, -1, 0);
  EXPECT_THROW(normalizeIdentity(s, q(0)), DomainError);
  EXPECT_THROW(normalizeIdentity(s, q(1), 1), DomainError);
}

TEST(Normalize, TailTermIsShiftedTerm) {
  const SeriesSpec s = buildSpec({2, 7}, -3, 1, 2);
  const NormalizedIdentity id = normalizeIdentity(s, q(5, 3), 4);
  for (std::int64_t n = id.tail.startIndex; n < id.tail.startIndex + 40; ++n) {
    EXPECT_EQ(tailTerm(id, n), term(s, n + id.tail.shift));
  }
}

TEST(Normalize, PartialSumSoundness) {
  std::mt19937_64 rng(17);
  for (const SeriesSpec& s : testing::randomSpecs(19, 40)) {
    const std::int64_t h = s.negativeShiftCount();
    const std::int64_t extra = std::uniform_int_distribution<std::int64_t>(0, 2)(rng);
    const BigRational scale = makeRational(std::uniform_int_distribution<std::int64_t>(1, 50)(rng),
                                           std::uniform_int_distribution<std::int64_t>(1, 50)(rng));
    const NormalizedIdentity id = normalizeIdentity(s, scale, h + extra);
    for (std::int64_t N = std::max<std::int64_t>(id.headTerms, 1); N <= id.headTerms + 25; ++N) {
      BigRational tail = 0;
      for (std::int64_t n = id.tail.startIndex; n < id.tail.startIndex + (N - id.headTerms); ++n) tail += tailTerm(id, n);
      ASSERT_EQ(scale * partialSumExact(s, N), id.head + scale * tail) << s.toString() << " N=" << N;
    }
  }
}

}  // namespace
}  // namespace rampi
