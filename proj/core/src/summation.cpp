#include "rampi/summation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <optional>

#include "rampi/errors.hpp"
#include "rampi/shifted_factorial.hpp"

namespace rampi {

std::string toString(SumMethod method) {
  switch (method) {
    case SumMethod::directExact:
      return "direct-exact";
    case SumMethod::directFloat:
      return "direct-float";
    case SumMethod::levinU:
      return "levin-u";
    case SumMethod::wynnEpsilon:
      return "wynn-epsilon";
  }
  return "direct-exact";
}

std::string toString(AccelerationScheme scheme) {
  return scheme == AccelerationScheme::levinU ? "levin-u" : "wynn-epsilon";
}

std::string toString(SumMode mode) {
  switch (mode) {
    case SumMode::automatic:
      return "automatic";
    case SumMode::rigorous:
      return "rigorous";
    case SumMode::accelerated:
      return "accelerated";
  }
  return "automatic";
}

SumMode parseSumMode(const std::string& text) {
  if (text == "rigorous") return SumMode::rigorous;
  if (text == "accelerated") return SumMode::accelerated;
  if (text == "automatic" || text == "auto") return SumMode::automatic;
  throw DomainError("unknown mode '" + text + "' (expected rigorous or accelerated)");
}

namespace {

// Integer form of the ratio recurrence. With alpha = p/q,
//   term(k+1)/term(k) = (p + q(a+k)) (q - p + q(b+k)) / (q^2 (k+1) (c+k+1)).
struct IntegerRatio {
  long p, q, a, b, c;

  BigInt up(std::int64_t k) const {
    return (BigInt(p) + BigInt(q) * static_cast<long>(a + k)) * (BigInt(q - p) + BigInt(q) * static_cast<long>(b + k));
  }
  BigInt down(std::int64_t k) const {
    return BigInt(q) * q * static_cast<long>(k + 1) * BigInt(static_cast<long>(c + k + 1));
  }
};

IntegerRatio integerRatio(const SeriesSpec& spec) {
  return {static_cast<long>(spec.alpha.p), static_cast<long>(spec.alpha.q), static_cast<long>(spec.a),
          static_cast<long>(spec.b), static_cast<long>(spec.c)};
}

// Over [lo, hi): P = prod up(k), Q = prod down(k),
// T = sum_j (prod_{k<j} up(k)) (prod_{k>=j} down(k)).
struct Split {
  BigInt P, Q, T;
};

Split splitRange(const IntegerRatio& r, std::int64_t lo, std::int64_t hi, int depthBudget) {
  if (hi - lo <= 16) {
    Split s{r.up(lo), r.down(lo), r.down(lo)};
    for (std::int64_t k = lo + 1; k < hi; ++k) {
      const BigInt u = r.up(k);
      const BigInt d = r.down(k);
      s.T = s.T * d + s.P * d;
      s.P *= u;
      s.Q *= d;
    }
    return s;
  }
  const std::int64_t mid = lo + (hi - lo) / 2;
  Split left, right;
  if (depthBudget > 0) {
    auto pending = std::async(std::launch::async, [&] { return splitRange(r, lo, mid, depthBudget - 1); });
    right = splitRange(r, mid, hi, depthBudget - 1);
    left = pending.get();
  } else {
    left = splitRange(r, lo, mid, 0);
    right = splitRange(r, mid, hi, 0);
  }
  Split out;
  out.T = left.T * right.Q + left.P * right.T;
  out.P = std::move(left.P) * right.P;
  out.Q = std::move(left.Q) * right.Q;
  return out;
}

int depthForThreads(int threads) {
  int depth = 0;
  while ((1 << depth) < threads) ++depth;
  return depth;
}

// Polynomial in one variable with rational coefficients, low order first.
using Poly = std::array<BigRational, 4>;

Poly linearProduct(const BigRational& r0, const BigRational& r1, const BigRational& r2) {
  // (m + r0)(m + r1)(m + r2)
  Poly out;
  out[3] = 1;
  out[2] = r0 + r1 + r2;
  out[1] = r0 * r1 + r0 * r2 + r1 * r2;
  out[0] = r0 * r1 * r2;
  return out;
}

bool positiveShifts(const SeriesSpec& spec, std::int64_t N) { return N + spec.a >= 0 && N + spec.b >= 0 && N >= 0; }

}  // namespace

RangeSum rangeSumExact(const SeriesSpec& spec, std::int64_t start, std::int64_t count, int threads) {
  if (start < 0) throw DomainError("range start must be nonnegative");
  const BigRational first = term(spec, start);
  if (count <= 0) return {BigRational(0), first};
  const Split s = splitRange(integerRatio(spec), start, start + count, depthForThreads(threads));
  // mpq arithmetic expects canonical operands, so reduce before multiplying.
  BigRational sumRatio(s.T, s.Q);
  BigRational termRatioProduct(s.P, s.Q);
  sumRatio.canonicalize();
  termRatioProduct.canonicalize();
  return {first * sumRatio, first * termRatioProduct};
}

BigRational partialSumExact(const SeriesSpec& spec, std::int64_t N, int threads) {
  if (N < 1) throw DomainError("partial sum needs N >= 1");
  return rangeSumExact(spec, 0, N, threads).sum;
}

std::optional<std::int64_t> dominatingShift(const SeriesSpec& spec, std::int64_t N, std::int64_t gMax) {
  if (!positiveShifts(spec, N)) return std::nullopt;
  const BigRational alpha = spec.alpha.value();
  const BigRational A = alpha + static_cast<long>(spec.a);
  const BigRational B = 1 - alpha + static_cast<long>(spec.b);
  const std::int64_t s = spec.decayExponent();
  const BigRational n0(static_cast<long>(N));

  // D(N+m) = (m+N+g)(m+N+1)(m+N+c+1) - (m+N+A)(m+N+B)(m+N+g+s); it suffices
  // that every coefficient in m is nonnegative.
  for (std::int64_t g = 0; g <= gMax; ++g) {
    const BigRational gr(static_cast<long>(g));
    const Poly rhs = linearProduct(n0 + gr, n0 + 1, n0 + static_cast<long>(spec.c + 1));
    const Poly lhs = linearProduct(n0 + A, n0 + B, n0 + gr + static_cast<long>(s));
    bool ok = true;
    for (std::size_t i = 0; i < 4 && ok; ++i) ok = rhs[i] - lhs[i] >= 0;
    if (!ok) continue;
    // Direct spot checks of the unexpanded inequality.
    for (std::int64_t m = 0; m < 4 && ok; ++m) {
      const BigRational n(static_cast<long>(N + m));
      ok = (n + A) * (n + B) * (n + gr + static_cast<long>(s)) <= (n + gr) * (n + 1) * (n + static_cast<long>(spec.c + 1));
    }
    if (ok) return g;
  }
  return std::nullopt;
}

std::int64_t minimumBoundIndex(const SeriesSpec& spec, std::int64_t gMax) {
  constexpr std::int64_t kSearchCap = 10'000;
  for (std::int64_t N = spec.negativeShiftCount(); N <= kSearchCap; ++N) {
    if (dominatingShift(spec, N, gMax)) return N;
  }
  throw BoundUnavailable("no dominating ratio for " + spec.toString() + " below index 10^4");
}

BigRational tailBoundExact(const SeriesSpec& spec, std::int64_t N, const BigRational& termAtN, std::int64_t gMax) {
  const auto g = dominatingShift(spec, N, gMax);
  if (!g) {
    throw BoundUnavailable("no dominating ratio with g <= " + std::to_string(gMax) + " at N = " + std::to_string(N) +
                           " for " + spec.toString());
  }
  const std::int64_t s = spec.decayExponent();
  // Dominating tail: term(N) * 2F1(1, N+g; N+g+s; 1) = term(N) (N+g+s-1)/(s-1).
  return termAtN * BigRational(BigInt(static_cast<long>(N + *g + s - 1)), BigInt(static_cast<long>(s - 1)));
}

BigFloat tailBound(const SeriesSpec& spec, std::int64_t N, std::int64_t gMax, long precisionBits) {
  if (N < 1) throw DomainError("tail bound needs N >= 1");
  return BigFloat(tailBoundExact(spec, N, term(spec, N), gMax), precisionBits, Rounding::up);
}

BigFloat partialSumFloat(const SeriesSpec& spec, std::int64_t N, long precisionBits) {
  if (N < 1) throw DomainError("partial sum needs N >= 1");
  if (precisionBits < 53) throw DomainError("float partial sums need at least 53 bits");
  const long guard = precisionBits + 32;
  const IntegerRatio r = integerRatio(spec);
  BigFloat current(term(spec, 0), guard);
  BigFloat sum(precisionBits);
  BigFloat compensation(precisionBits);
  for (std::int64_t n = 0; n < N; ++n) {
    const BigFloat x = current.withPrecision(precisionBits);
    // Neumaier: carry the rounding error of each addition separately.
    const BigFloat t = sum + x;
    if (abs(sum) >= abs(x)) {
      compensation += (sum - t) + x;
    } else {
      compensation += (x - t) + sum;
    }
    sum = t;
    if (n + 1 < N) {
      mpfr_mul_z(current.get(), current.get(), r.up(n).get_mpz_t(), MPFR_RNDN);
      mpfr_div_z(current.get(), current.get(), r.down(n).get_mpz_t(), MPFR_RNDN);
    }
  }
  return sum + compensation;
}

long acceleratedPrecisionBits(int digits, std::int64_t partials, long requested) {
  // Levin's weights cancel roughly 0.6 decimal digits per partial sum.
  const auto needed = static_cast<long>(std::ceil(3.33 * (digits + 0.6 * static_cast<double>(partials)))) + 64;
  return std::max({requested, needed, 4L * digits, 256L});
}

SumResult sumTailToDigits(const SeriesSpec& spec, std::int64_t start, int digits, const SumOptions& options) {
  if (digits < 1) throw DomainError("digits must be positive");
  if (start < 0) throw DomainError("start index must be nonnegative");
  SumMode mode = options.mode;
  if (mode == SumMode::automatic) mode = digits > 6 ? SumMode::accelerated : SumMode::rigorous;

  if (mode == SumMode::rigorous) {
    BigRational tolerance;
    if (options.absTolerance) {
      tolerance = *options.absTolerance;
    } else {
      BigInt pow10;
      mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(digits));
      tolerance = BigRational(BigInt(1), pow10);
    }
    const std::int64_t n0 = std::max(minimumBoundIndex(spec, options.gMax), start + 1);
    auto boundAt = [&](std::int64_t N) { return tailBoundExact(spec, N, term(spec, N), options.gMax); };

    std::int64_t lo = n0;
    std::int64_t hi = std::max<std::int64_t>(n0, 16);
    while (boundAt(hi) >= tolerance) {
      lo = hi;
      hi *= 2;
      if (hi - start > options.maxTerms * 2) {
        throw BudgetExceeded("rigorous bound needs more than " + std::to_string(options.maxTerms) + " terms");
      }
    }
    if (boundAt(lo) < tolerance) hi = lo;
    // Bound is decreasing in N once terms are positive; bisect for the smallest N.
    while (hi - lo > 1) {
      const std::int64_t mid = lo + (hi - lo) / 2;
      if (boundAt(mid) < tolerance) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    const std::int64_t N = hi;
    if (N - start > options.maxTerms) {
      throw BudgetExceeded("rigorous bound needs " + std::to_string(N - start) + " terms, limit " +
                           std::to_string(options.maxTerms));
    }
    const RangeSum rs = rangeSumExact(spec, start, N - start, options.threads);
    const long bits = options.precisionBits > 0 ? options.precisionBits : 4L * digits + 64;
    SumResult out;
    out.value = BigFloat(rs.sum, bits);
    out.exactValue = rs.sum;
    out.termsUsed = N - start;
    out.method = SumMethod::directExact;
    out.rigorousTailBound = BigFloat(tailBoundExact(spec, N, rs.nextTerm, options.gMax), bits, Rounding::up);
    out.workingPrecisionBits = bits;
    return out;
  }

  BigFloat pow10(10, acceleratedPrecisionBits(digits, 64, options.precisionBits));
  mpfr_pow_si(pow10.get(), pow10.get(), -static_cast<long>(digits), MPFR_RNDN);
  const auto method = options.scheme == AccelerationScheme::levinU ? SumMethod::levinU : SumMethod::wynnEpsilon;

  if (options.scheme == AccelerationScheme::wynnEpsilon) {
    // Epsilon handles n^-s remainders poorly on consecutive partials but well
    // on the geometric subsequence S_1, S_2, S_4, ..., whose remainders
    // behave like a sum of geometric sequences in j.
    std::vector<BigRational> sampled{term(spec, start)};
    std::int64_t count = 1;
    std::optional<Acceleration> previous;
    for (;;) {
      if (2 * count > options.maxTerms) {
        throw BudgetExceeded("acceleration did not stabilize within " + std::to_string(options.maxTerms) + " terms");
      }
      sampled.push_back(sampled.back() + rangeSumExact(spec, start + count, count, options.threads).sum);
      count *= 2;
      if (sampled.size() < 10) continue;
      const long bits = acceleratedPrecisionBits(digits, static_cast<std::int64_t>(sampled.size()), options.precisionBits);
      std::vector<BigFloat> partials;
      for (const BigRational& v : sampled) partials.emplace_back(v, bits);
      const Acceleration current = accelerate(partials, options.scheme);
      if (previous) {
        const BigFloat change = abs(current.estimate - previous->estimate);
        BigFloat limit = abs(current.estimate);
        if (limit.isZero()) limit = BigFloat(1, bits);
        if (change <= limit * pow10) {
          SumResult out;
          out.value = current.estimate;
          out.termsUsed = count;
          out.method = method;
          out.heuristicError = current.heuristicError > change ? current.heuristicError : change;
          out.workingPrecisionBits = bits;
          return out;
        }
      }
      previous = current;
    }
  }

  // Levin: extrapolate exact partial sums, and accept only when the estimate
  // from K partials agrees with the one from 2K.
  std::vector<BigRational> exactPartials;
  BigRational currentTerm = term(spec, start);
  BigRational running = 0;
  auto extendTo = [&](std::int64_t count) {
    while (static_cast<std::int64_t>(exactPartials.size()) < count) {
      running += currentTerm;
      exactPartials.push_back(running);
      currentTerm *= termRatio(spec, start + static_cast<std::int64_t>(exactPartials.size()) - 1);
    }
  };

  constexpr std::int64_t kMaxAcceleratedPartials = 4096;
  std::int64_t k = std::max<std::int64_t>(8, digits + 16);
  for (;;) {
    if (2 * k > std::min<std::int64_t>(options.maxTerms, kMaxAcceleratedPartials)) {
      throw BudgetExceeded("acceleration did not stabilize within " + std::to_string(options.maxTerms) + " terms");
    }
    const long bits = acceleratedPrecisionBits(digits, 2 * k, options.precisionBits);
    extendTo(2 * k);
    std::vector<BigFloat> partials;
    partials.reserve(static_cast<std::size_t>(2 * k));
    for (std::int64_t i = 0; i < 2 * k; ++i) partials.emplace_back(exactPartials[static_cast<std::size_t>(i)], bits);

    const Acceleration coarse = accelerate(std::span<const BigFloat>(partials).first(static_cast<std::size_t>(k)), options.scheme);
    const Acceleration fine = accelerate(partials, options.scheme);
    const BigFloat change = abs(fine.estimate - coarse.estimate);
    BigFloat limit = abs(fine.estimate);
    if (limit.isZero()) limit = BigFloat(1, bits);
    if (change <= limit * pow10) {
      SumResult out;
      out.value = fine.estimate;
      out.termsUsed = 2 * k;
      out.method = method;
      out.heuristicError = fine.heuristicError > change ? fine.heuristicError : change;
      out.workingPrecisionBits = bits;
      return out;
    }
    k = k * 3 / 2;
  }
}

}  // namespace rampi
