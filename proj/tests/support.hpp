#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "rampi/series.hpp"

namespace rampi::testing {

struct SpecRanges {
  std::int64_t maxQ = 12;
  std::int64_t maxShift = 3;
  std::int64_t maxC = 8;
};

// Uniform over alpha = p/q (q <= maxQ, lowest terms), |a|, |b| <= maxShift,
// 0 <= c <= maxC, rejecting c - a - b < 1.
inline SeriesSpec randomSpec(std::mt19937_64& rng, const SpecRanges& r = {}) {
  std::uniform_int_distribution<std::int64_t> qDist(2, r.maxQ);
  std::uniform_int_distribution<std::int64_t> shiftDist(-r.maxShift, r.maxShift);
  std::uniform_int_distribution<std::int64_t> cDist(0, r.maxC);
  for (;;) {
    const std::int64_t q = qDist(rng);
    const std::int64_t p = std::uniform_int_distribution<std::int64_t>(1, q - 1)(rng);
    if (std::gcd(p, q) != 1) continue;
    const std::int64_t a = shiftDist(rng);
    const std::int64_t b = shiftDist(rng);
    const std::int64_t c = cDist(rng);
    if (c - a - b < 1) continue;
    return buildSpec(makeAlpha(p, q), a, b, c);
  }
}

inline std::vector<SeriesSpec> randomSpecs(std::uint64_t seed, std::size_t count, const SpecRanges& r = {}) {
  std::mt19937_64 rng(seed);
  std::vector<SeriesSpec> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(randomSpec(rng, r));
  return out;
}

}  // namespace rampi::testing
