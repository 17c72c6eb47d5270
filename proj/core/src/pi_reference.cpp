#include "rampi/pi_reference.hpp"

#include <cmath>
#include <future>
#include <map>
#include <mutex>

#include "rampi/errors.hpp"

namespace rampi {

namespace {

constexpr double kLog2Of10 = 3.321928094887362;

// Haible-Papanikolaou splitting for sum_{j in [lo,hi)} (-1)^j / ((2j+1) k^(2j+1)).
// Leaf j: p = (j ? -1 : 1), q = (j ? k^2 : k), b = 2j+1, t = p.
struct ArctanSplit {
  BigInt p, q, b, t;
};

ArctanSplit arctanSplit(long k, long lo, long hi) {
  if (hi - lo == 1) {
    ArctanSplit leaf;
    leaf.p = lo == 0 ? 1 : -1;
    leaf.q = lo == 0 ? BigInt(k) : BigInt(k) * k;
    leaf.b = 2 * lo + 1;
    leaf.t = leaf.p;
    return leaf;
  }
  const long mid = lo + (hi - lo) / 2;
  const ArctanSplit l = arctanSplit(k, lo, mid);
  const ArctanSplit r = arctanSplit(k, mid, hi);
  ArctanSplit out;
  out.p = l.p * r.p;
  out.q = l.q * r.q;
  out.b = l.b * r.b;
  out.t = r.b * r.q * l.t + l.b * l.p * r.t;
  return out;
}

struct PiPair {
  BigRational formulaA;
  BigRational formulaB;
};

PiPair dualPi(long bits) {
  auto formulaB = std::async(std::launch::async, [bits]() -> BigRational {
    return 4 * (arctanInverseSeries(2, bits + 4) + arctanInverseSeries(3, bits + 4));
  });
  BigRational a = 16 * arctanInverseSeries(5, bits + 6) - 4 * arctanInverseSeries(239, bits + 4);
  return {a, formulaB.get()};
}

int agreementDigitsOf(const PiPair& pair, long bits) {
  const BigRational diff = abs(pair.formulaA - pair.formulaB);
  const int cap = static_cast<int>(static_cast<double>(bits) / kLog2Of10) + 16;
  return decimalDigitsBelow(BigFloat(diff, 64), cap);
}

}  // namespace

long piWorkingBits(int digits) { return static_cast<long>(std::ceil(digits * kLog2Of10)) + 32; }

BigRational arctanInverseSeries(long k, long precisionBits) {
  if (k < 2) throw DomainError("arctan(1/k) series needs k >= 2");
  // The first omitted term 1/((2J+1) k^(2J+1)) is below k^-(2J+1) <= 2^-(bits+4).
  const double perTerm = 2.0 * std::log2(static_cast<double>(k));
  const long terms = std::max(1L, static_cast<long>(std::ceil((precisionBits + 4) / perTerm)) + 1);
  const ArctanSplit s = arctanSplit(k, 0, terms);
  BigRational out(s.t, s.b * s.q);
  out.canonicalize();
  return out;
}

PiReference computePi(int digits, int maxDigits) {
  if (digits < 1) throw DomainError("pi digits must be positive");
  if (digits > maxDigits) {
    throw BudgetExceeded("requested " + std::to_string(digits) + " digits exceeds limit " + std::to_string(maxDigits));
  }
  const long bits = piWorkingBits(digits);
  const PiPair pair = dualPi(bits);
  PiReference ref;
  ref.digits = digits;
  ref.agreementDigits = agreementDigitsOf(pair, bits);
  if (ref.agreementDigits < digits) {
    throw AgreementFailure("pi formulas agree on only " + std::to_string(ref.agreementDigits) + " of " +
                           std::to_string(digits) + " digits");
  }
  ref.value = BigFloat(pair.formulaA, bits);
  return ref;
}

BigFloat piAtPrecision(long precisionBits) {
  static std::mutex mutex;
  static std::map<long, BigFloat> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(precisionBits); it != cache.end()) return it->second;
  }
  const long bits = precisionBits + 16;
  const PiPair pair = dualPi(bits);
  const int wanted = static_cast<int>(static_cast<double>(precisionBits) / kLog2Of10);
  if (agreementDigitsOf(pair, bits) < wanted) {
    throw AgreementFailure("pi formulas disagree at " + std::to_string(precisionBits) + " bits");
  }
  BigFloat value(pair.formulaA, precisionBits);
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(precisionBits, value);
  return value;
}

BigFloat sqrtBig(const BigRational& x, long precisionBits) {
  if (x < 0) throw DomainError("square root of negative value " + toString(x));
  if (x == 0) return BigFloat(precisionBits);
  if (mpz_perfect_square_p(x.get_num().get_mpz_t()) && mpz_perfect_square_p(x.get_den().get_mpz_t())) {
    BigInt n, d;
    mpz_sqrt(n.get_mpz_t(), x.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), x.get_den().get_mpz_t());
    return BigFloat(BigRational(n, d), precisionBits);
  }

  // Seed from a double, then Newton y <- (y + x/y)/2 while doubling precision.
  const long target = precisionBits + 8;
  BigFloat xs(x, target);
  long exp2 = 0;
  double mant = mpfr_get_d_2exp(&exp2, xs.get(), MPFR_RNDN);
  if (exp2 % 2 != 0) {
    mant *= 2.0;
    exp2 -= 1;
  }
  BigFloat y(53);
  mpfr_set_d(y.get(), std::sqrt(mant), MPFR_RNDN);
  mpfr_mul_2si(y.get(), y.get(), exp2 / 2, MPFR_RNDN);

  long current = 50;
  for (;;) {
    current = std::min(2 * current, target);
    y = y.withPrecision(current);
    const BigFloat xc = xs.withPrecision(current);
    y = (y + xc / y);
    mpfr_div_2ui(y.get(), y.get(), 1, MPFR_RNDN);
    if (current == target) break;
  }
  for (int i = 0; i < 2; ++i) {
    y = y + xs / y;
    mpfr_div_2ui(y.get(), y.get(), 1, MPFR_RNDN);
  }
  BigFloat out = y.withPrecision(precisionBits);

  const BigRational r = toRational(out);
  const BigRational residual = abs(BigRational(r * r - x));
  BigRational allowed = abs(x);
  mpq_div_2exp(allowed.get_mpq_t(), allowed.get_mpq_t(), static_cast<unsigned long>(precisionBits - 4));
  if (residual > allowed) throw NumericBreakdown("Newton square root failed to converge");
  return out;
}

BigFloat sinPiNumeric(const BigRational& x, long precisionBits) {
  // Reduce to r in [0, 2) then to [0, 1/2] with a sign.
  BigRational r = x;
  BigInt whole;
  BigRational half = makeRational(1, 2);
  mpz_fdiv_q(whole.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  const bool oddPeriod = mpz_odd_p(whole.get_mpz_t()) != 0;
  r -= BigRational(whole);  // now in [0, 1), sin(pi x) = (-1)^whole sin(pi r)
  if (r > half) r = 1 - r;

  const long work = precisionBits + 32;
  const bool useCosine = r > makeRational(1, 4);
  const BigRational angleFraction = useCosine ? BigRational(half - r) : r;
  const BigFloat theta = piAtPrecision(work) * BigFloat(angleFraction, work);

  // Alternating Taylor series with |theta| <= pi/4 < 1: the error is below the
  // first omitted term, so stop once a term drops under 2^-(work).
  const BigFloat thetaSq = theta * theta;
  BigFloat termValue = useCosine ? BigFloat(1, work) : theta;
  BigFloat sum = termValue;
  const BigFloat cutoff = BigFloat::pow2(-work, work);
  for (long k = 1;; ++k) {
    const long d1 = useCosine ? 2 * k - 1 : 2 * k;
    const long d2 = useCosine ? 2 * k : 2 * k + 1;
    termValue = termValue * thetaSq;
    mpfr_div_ui(termValue.get(), termValue.get(), static_cast<unsigned long>(d1 * d2), MPFR_RNDN);
    if (k % 2 == 1) {
      sum -= termValue;
    } else {
      sum += termValue;
    }
    if (abs(termValue) < cutoff) break;
  }
  if (oddPeriod) sum = -sum;
  return sum.withPrecision(precisionBits);
}

BigFloat evalSurd(const SurdConstant& surd, long precisionBits) {
  const long work = precisionBits + 16;
  BigFloat value(surd.rationalPart, work);
  switch (surd.kind) {
    case SurdKind::one:
    case SurdKind::half:
      break;
    case SurdKind::simpleSurd:
    case SurdKind::scaledSurdSum:
      for (const SurdTerm& t : surd.radicands) value += mulRational(sqrtBig(t.radicand, work), t.coefficient);
      break;
    case SurdKind::nestedSurd: {
      const SurdTerm& outer = surd.radicands.front();
      const SurdTerm& inner = *surd.innerRadicand;
      const BigFloat innerRoot = mulRational(sqrtBig(inner.radicand, work + 32), inner.coefficient);
      const BigRational radicand = outer.radicand + toRational(innerRoot);
      value += mulRational(sqrtBig(radicand, work), outer.coefficient);
      break;
    }
    case SurdKind::numericOnly:
      return sinPiNumeric(surd.alpha, precisionBits);
  }
  return value.withPrecision(precisionBits);
}

}  // namespace rampi
