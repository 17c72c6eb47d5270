#pragma once

#include <span>
#include <string>

#include "rampi/catalog.hpp"
#include "rampi/verifier.hpp"

namespace rampi {

// Report objects with keys
//   spec{alpha,a,b,c}, method, terms_used, working_precision_bits, lhs, rhs,
//   abs_error, rel_error, digits_agreed, tail_bound, pass, elapsed_ms
// Multi-precision values are decimal strings; tail_bound is null unless the
// method is a direct one.
std::string toJson(const VerificationReport& report, int indent = 2);
std::string toJson(std::span<const VerificationReport> reports, int indent = 2);

// Entry description for `catalog list` and `generate`.
std::string toJson(const CatalogEntry& entry, int indent = 2);
std::string catalogToJson(int indent = 2);

}  // namespace rampi
