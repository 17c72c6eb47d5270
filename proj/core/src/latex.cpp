#include <algorithm>
#include <regex>
#include <sstream>

#include "rampi/catalog.hpp"
#include "rampi/errors.hpp"

namespace rampi {

namespace {

// Shape of a summand (alpha)_{n+sa} (1-alpha)_{n+sb} / ((n+f)! (n+f+d)!).
struct Summand {
  RationalAlpha alpha;
  std::int64_t shiftA = 0;
  std::int64_t shiftB = 0;
  std::int64_t factorialShift = 0;
  std::int64_t factorialGap = 0;
};

std::string indexText(std::int64_t offset) {
  if (offset == 0) return "n";
  return offset > 0 ? "n+" + std::to_string(offset) : "n-" + std::to_string(-offset);
}

std::string pochLatex(const RationalAlpha& alpha, std::int64_t shift) {
  const std::string base = "(\\frac{" + std::to_string(alpha.p) + "}{" + std::to_string(alpha.q) + "})";
  return base + (shift == 0 ? "_n" : "_{" + indexText(shift) + "}");
}

std::string pochText(const RationalAlpha& alpha, std::int64_t shift) {
  const std::string base = "(" + alpha.toString() + ")";
  return base + (shift == 0 ? "_n" : "_{" + indexText(shift) + "}");
}

std::string factorialOf(std::int64_t offset) { return offset == 0 ? "n!" : "(" + indexText(offset) + ")!"; }

std::string numerator(const Summand& s, bool latex) {
  auto poch = latex ? pochLatex : pochText;
  if (s.alpha == s.alpha.complement() && s.shiftA == s.shiftB) return poch(s.alpha, s.shiftA) + (latex ? "^2" : "²");
  return poch(s.alpha, s.shiftA) + (latex ? "" : " ") + poch(s.alpha.complement(), s.shiftB);
}

std::string denominator(const Summand& s, bool latex) {
  const std::string square = latex ? "^2" : "²";
  const std::int64_t f = s.factorialShift;
  if (s.factorialGap == 0) return factorialOf(f) + square;
  if (s.factorialGap <= 2) {
    std::string out;
    for (std::int64_t j = 1; j <= s.factorialGap; ++j) out += "(" + indexText(f + j) + ")";
    return out + factorialOf(f) + square;
  }
  return factorialOf(f) + (latex ? "" : " ") + factorialOf(f + s.factorialGap);
}

std::string rhsLatex(const ClosedFormRHS& rhs) {
  const SurdDisplay d = displayScaled(rhs.rationalPart, rhs.sine, true);
  std::string num = d.numerator;
  std::string sign;
  if (!num.empty() && num.front() == '-') {
    sign = "-";
    num.erase(0, 1);
  }
  return sign + "\\frac{" + num + "}{" + (d.denominator == "1" ? std::string() : d.denominator) + "\\pi}";
}

std::string scaleLatex(const BigRational& scale) {
  if (scale == 1) return "";
  if (isInteger(scale)) return toString(scale);
  return "\\frac{" + scale.get_num().get_str() + "}{" + scale.get_den().get_str() + "}";
}

std::string sumLatex(const Summand& s, std::int64_t start) {
  return "\\sum_{n=" + std::to_string(start) + "}^\\infty \\frac{" + numerator(s, true) + "}{" + denominator(s, true) + "}";
}

Summand rawSummand(const SeriesSpec& spec) { return {spec.alpha, spec.a, spec.b, 0, spec.c}; }

Summand tailSummand(const NormalizedIdentity& id) {
  return {id.spec.alpha, id.tail.pochShiftA, id.tail.pochShiftB, id.tail.factorialShift,
          id.tail.factorialShiftC - id.tail.factorialShift};
}

// Finds the brace-delimited group starting at text[open] == '{'.
std::string bracedGroup(const std::string& text, std::size_t open, std::size_t* end) {
  if (open >= text.size() || text[open] != '{') throw DomainError("expected '{' in LaTeX input");
  int depth = 0;
  for (std::size_t i = open; i < text.size(); ++i) {
    if (text[i] == '{') ++depth;
    if (text[i] == '}' && --depth == 0) {
      *end = i + 1;
      return text.substr(open + 1, i - open - 1);
    }
  }
  throw DomainError("unbalanced braces in LaTeX input");
}

std::int64_t parseIndex(const std::string& text) {
  // "n", "{n+3}", "{n-2}", or "(n+3)" style without the braces.
  static const std::regex pattern(R"(^\{?n(?:([+-])(\d+))?\}?$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw DomainError("cannot read index '" + text + "'");
  if (!m[1].matched) return 0;
  const std::int64_t v = std::stoll(m[2].str());
  return m[1].str() == "-" ? -v : v;
}

}  // namespace

std::string emitLatex(const SeriesSpec& spec) {
  return rhsLatex(rhsConstant(spec)) + "=" + sumLatex(rawSummand(spec), 0);
}

std::string emitLatex(const CatalogEntry& entry) {
  if (!entry.presentation) return emitLatex(entry.spec);
  const NormalizedIdentity id = entry.normalized();
  std::string out = rhsLatex(id.rhs) + "=";
  if (id.head != 0) out += toString(id.head) + "+";
  out += scaleLatex(id.scale) + sumLatex(tailSummand(id), id.tail.startIndex);
  return out;
}

std::string emitText(const CatalogEntry& entry) {
  std::ostringstream out;
  out << entry.rhsDisplay << " = ";
  if (!entry.presentation) {
    const Summand s = rawSummand(entry.spec);
    out << "Σ_{n≥0} " << numerator(s, false) << " / (" << denominator(s, false) << ")";
    return out.str();
  }
  const NormalizedIdentity id = entry.normalized();
  const Summand s = tailSummand(id);
  if (id.head != 0) out << toString(id.head) << " + ";
  if (id.scale != 1) out << "(" << toString(id.scale) << ")";
  out << "Σ_{n≥" << id.tail.startIndex << "} " << numerator(s, false) << " / (" << denominator(s, false) << ")";
  return out.str();
}

SeriesSpec parseLatexSpec(const std::string& latex) {
  const std::string marker = "\\sum_{n=0}^\\infty \\frac";
  const auto at = latex.find(marker);
  if (at == std::string::npos) throw DomainError("no raw series found in LaTeX input");
  std::size_t pos = at + marker.size();
  const std::string num = bracedGroup(latex, pos, &pos);
  const std::string den = bracedGroup(latex, pos, &pos);

  // Numerator: one or two Pochhammer symbols, optionally squared.
  static const std::regex poch(R"(\(\\frac\{(\d+)\}\{(\d+)\}\)_(n|\{n[+-]\d+\})(\^2)?)");
  struct Factor {
    RationalAlpha alpha;
    std::int64_t shift;
  };
  std::vector<Factor> factors;
  std::string rest = num;
  for (std::sregex_iterator it(num.begin(), num.end(), poch), endIt; it != endIt; ++it) {
    const auto& m = *it;
    const RationalAlpha alpha = makeAlpha(std::stoll(m[1].str()), std::stoll(m[2].str()));
    const std::int64_t shift = parseIndex(m[3].str());
    factors.push_back({alpha, shift});
    if (m[4].matched) factors.push_back({alpha, shift});
  }
  if (factors.size() != 2 || !(factors[1].alpha == factors[0].alpha.complement())) {
    throw DomainError("numerator is not (alpha)_{n+a} (1-alpha)_{n+b}");
  }

  // Denominator: linear factors (n+j), factorials n! / (n+j)!, optional ^2.
  static const std::regex piece(R"(\((n(?:[+-]\d+)?)\)(!)?(\^2)?|n(!)(\^2)?)");
  std::vector<std::int64_t> linear;
  std::vector<std::int64_t> factorials;
  std::size_t consumed = 0;
  for (std::sregex_iterator it(den.begin(), den.end(), piece), endIt; it != endIt; ++it) {
    const auto& m = *it;
    if (static_cast<std::size_t>(m.position(0)) != consumed) throw DomainError("unexpected text in denominator");
    consumed += static_cast<std::size_t>(m.length(0));
    if (m[4].matched) {
      factorials.push_back(0);
      if (m[5].matched) factorials.push_back(0);
      continue;
    }
    const std::int64_t offset = parseIndex(m[1].str());
    if (m[2].matched) {
      factorials.push_back(offset);
      if (m[3].matched) factorials.push_back(offset);
    } else {
      if (m[3].matched) throw DomainError("squared linear factor is not a factorial ratio");
      linear.push_back(offset);
    }
  }
  if (consumed != den.size() || factorials.size() != 2) throw DomainError("denominator is not n! (n+c)!");
  std::sort(factorials.begin(), factorials.end());
  std::sort(linear.begin(), linear.end());
  const std::int64_t low = factorials[0];
  std::int64_t high = factorials[1];
  if (!linear.empty()) {
    if (low != high) throw DomainError("denominator mixes factor forms");
    for (std::size_t i = 0; i < linear.size(); ++i) {
      if (linear[i] != low + static_cast<std::int64_t>(i) + 1) throw DomainError("linear factors do not extend a factorial");
    }
    high = low + static_cast<std::int64_t>(linear.size());
  }
  if (low != 0) throw DomainError("raw series must have n! in the denominator");
  return buildSpec(factors[0].alpha, factors[0].shift, factors[1].shift, high);
}

}  // namespace rampi
