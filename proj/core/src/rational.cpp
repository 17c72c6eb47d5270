#include "rampi/rational.hpp"

#include <cctype>

#include "rampi/errors.hpp"

namespace rampi {

namespace {

bool isSignedDigits(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

BigInt parseInteger(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

BigRational parseRational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!isSignedDigits(num) || !isSignedDigits(den) || den.front() == '-' || den.front() == '+') {
    throw DomainError("malformed rational '" + std::string(text) + "' (expected p/q)");
  }
  BigInt d = parseInteger(den);
  if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  BigRational out(parseInteger(num), d);
  out.canonicalize();
  return out;
}

std::string toString(const BigRational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string toString(const BigInt& value) { return value.get_str(); }

BigRational makeRational(std::int64_t num, std::int64_t den) {
  BigRational out{BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))};
  out.canonicalize();
  return out;
}

}  // namespace rampi
