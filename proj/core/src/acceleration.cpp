#include <algorithm>
#include <vector>

#include "rampi/errors.hpp"
#include "rampi/summation.hpp"

namespace rampi {

namespace {

long widestPrecision(std::span<const BigFloat> values) {
  long bits = 53;
  for (const BigFloat& v : values) bits = std::max(bits, v.precision());
  return bits;
}

// Levin u-transform L_k over s_0..s_k with remainder estimates
// w_j = (j+1) (s_j - s_{j-1}):
//
//   L = sum_j c_j s_j / w_j  /  sum_j c_j / w_j,
//   c_j = (-1)^j C(k, j) ((j+1)/(k+1))^(k-1).
BigFloat levinU(std::span<const BigFloat> s, long bits) {
  const auto k = static_cast<long>(s.size()) - 1;
  BigFloat num(bits);
  BigFloat den(bits);
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(k + 1), static_cast<unsigned long>(std::max(0L, k - 1)));
  for (long j = 0; j <= k; ++j) {
    BigInt binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(j));
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(j + 1), static_cast<unsigned long>(std::max(0L, k - 1)));
    BigRational weight(binom * power, scale);
    weight.canonicalize();
    if (j % 2 == 1) weight = -weight;

    const BigFloat a = j == 0 ? s[0] : s[static_cast<std::size_t>(j)] - s[static_cast<std::size_t>(j) - 1];
    if (a.isZero()) throw NumericBreakdown("Levin u: zero term at index " + std::to_string(j));
    BigFloat w = a.withPrecision(bits);
    mpfr_mul_si(w.get(), w.get(), j + 1, MPFR_RNDN);
    const BigFloat c = BigFloat(weight, bits) / w;
    num += c * s[static_cast<std::size_t>(j)];
    den += c;
  }
  if (den.isZero()) throw NumericBreakdown("Levin u: vanishing denominator");
  return num / den;
}

Acceleration levinAcceleration(std::span<const BigFloat> partials, long bits) {
  BigFloat last = levinU(partials, bits);
  BigFloat previous = levinU(partials.first(partials.size() - 1), bits);
  return {last, abs(last - previous)};
}

// Wynn epsilon table, column by column. Even columns hold the estimates; the
// result is the newest entry of the highest even column with two entries.
Acceleration wynnAcceleration(std::span<const BigFloat> partials, long bits) {
  std::vector<BigFloat> older(partials.size() + 1, BigFloat(bits));  // eps_{-1} = 0
  std::vector<BigFloat> current;
  current.reserve(partials.size());
  for (const BigFloat& v : partials) current.push_back(v.withPrecision(bits));

  std::vector<BigFloat> bestColumn = current;
  const BigFloat tiny = BigFloat::pow2(-bits, bits);
  for (std::size_t column = 1; current.size() > 2; ++column) {
    std::vector<BigFloat> next;
    next.reserve(current.size() - 1);
    bool brokeDown = false;
    for (std::size_t i = 0; i + 1 < current.size(); ++i) {
      const BigFloat diff = current[i + 1] - current[i];
      BigFloat scaleRef = abs(current[i + 1]);
      if (scaleRef.isZero()) scaleRef = BigFloat(1, bits);
      if (abs(diff) <= tiny * scaleRef) {
        brokeDown = true;
        break;
      }
      next.push_back(older[i + 1] + BigFloat(1, bits) / diff);
    }
    if (brokeDown) {
      // Converged to working precision in the previous even column.
      if (column == 1) throw NumericBreakdown("Wynn epsilon: consecutive partial sums coincide");
      break;
    }
    older = std::move(current);
    current = std::move(next);
    if (column % 2 == 0 && current.size() >= 2) bestColumn = current;
  }
  const BigFloat& estimate = bestColumn.back();
  return {estimate, abs(estimate - bestColumn[bestColumn.size() - 2])};
}

}  // namespace

Acceleration accelerate(std::span<const BigFloat> partials, AccelerationScheme scheme) {
  if (partials.size() < 8) {
    throw InsufficientData("acceleration needs at least 8 partial sums, got " + std::to_string(partials.size()));
  }
  const long bits = widestPrecision(partials);
  return scheme == AccelerationScheme::levinU ? levinAcceleration(partials, bits) : wynnAcceleration(partials, bits);
}

}  // namespace rampi
