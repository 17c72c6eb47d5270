#include "rampi/report_json.hpp"

#include <json.hpp>

namespace rampi {

namespace {

using nlohmann::ordered_json;

int decimalDigitsFor(long bits) { return static_cast<int>(static_cast<double>(bits) * 0.30103); }

ordered_json specJson(const SeriesSpec& spec) {
  return ordered_json{{"alpha", spec.alpha.toString()}, {"a", spec.a}, {"b", spec.b}, {"c", spec.c}};
}

ordered_json reportJson(const VerificationReport& r) {
  const int valueDigits = decimalDigitsFor(r.workingPrecisionBits);
  ordered_json j;
  j["spec"] = specJson(r.spec);
  j["method"] = toString(r.method);
  j["terms_used"] = r.termsUsed;
  j["working_precision_bits"] = r.workingPrecisionBits;
  j["lhs"] = r.lhsEstimate.toString(valueDigits);
  j["rhs"] = r.rhsValue.toString(valueDigits);
  j["abs_error"] = r.absError.toString(20);
  j["rel_error"] = r.relError.toString(20);
  j["digits_agreed"] = r.digitsAgreed;
  j["tail_bound"] = r.rigorousTailBound ? ordered_json(r.rigorousTailBound->toString(20)) : ordered_json(nullptr);
  j["pass"] = r.pass;
  j["elapsed_ms"] = r.elapsedMillis;
  return j;
}

ordered_json surdJson(const SurdConstant& s) {
  ordered_json j;
  j["kind"] = toString(s.kind);
  j["rational_part"] = toString(s.rationalPart);
  ordered_json terms = ordered_json::array();
  for (const SurdTerm& t : s.radicands) {
    terms.push_back({{"coefficient", toString(t.coefficient)}, {"radicand", toString(t.radicand)}});
  }
  j["radicands"] = terms;
  j["inner_radicand"] = s.innerRadicand ? ordered_json{{"coefficient", toString(s.innerRadicand->coefficient)},
                                                       {"radicand", toString(s.innerRadicand->radicand)}}
                                        : ordered_json(nullptr);
  if (s.kind == SurdKind::numericOnly) j["alpha"] = toString(s.alpha);
  return j;
}

ordered_json entryJson(const CatalogEntry& e) {
  ordered_json j;
  j["id"] = e.id;
  j["citation"] = e.citation;
  j["spec"] = specJson(e.spec);
  const ClosedFormRHS rhs = rhsConstant(e.spec);
  j["rhs_rational_part"] = toString(rhs.rationalPart);
  j["sine"] = surdJson(rhs.sine);
  if (e.presentation) {
    j["presentation"] = {{"scale", toString(e.presentation->scale)},
                         {"head", toString(e.presentation->head)},
                         {"head_terms", e.presentation->headTerms}};
  } else {
    j["presentation"] = nullptr;
  }
  j["rhs_display"] = e.rhsDisplay;
  j["latex"] = emitLatex(e);
  return j;
}

}  // namespace

std::string toJson(const VerificationReport& report, int indent) { return reportJson(report).dump(indent); }

std::string toJson(std::span<const VerificationReport> reports, int indent) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) arr.push_back(reportJson(r));
  return arr.dump(indent);
}

std::string toJson(const CatalogEntry& entry, int indent) { return entryJson(entry).dump(indent); }

std::string catalogToJson(int indent) {
  ordered_json j;
  ordered_json entries = ordered_json::array();
  for (const auto& e : catalogEntries()) entries.push_back(entryJson(e));
  ordered_json families = ordered_json::array();
  for (const auto& f : catalogFamilies()) {
    families.push_back({{"id", f.id}, {"citation", f.citation}, {"k_min", f.kMin}});
  }
  j["entries"] = entries;
  j["families"] = families;
  return j.dump(indent);
}

}  // namespace rampi
