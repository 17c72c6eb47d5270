#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace rampi {

using BigInt = mpz_class;

// gmpxx keeps mpq values canonical after every arithmetic operation
// (gcd(|num|, den) = 1, den >= 1), which is exactly the invariant we need.
using BigRational = mpq_class;

// Parses "p/q", "p" or "-p/q". Throws DomainError on malformed input or a
// zero denominator. The result is canonical.
BigRational parseRational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string toString(const BigRational& value);
std::string toString(const BigInt& value);

BigRational makeRational(std::int64_t num, std::int64_t den = 1);

inline bool isInteger(const BigRational& value) { return value.get_den() == 1; }

}  // namespace rampi
