#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rampi/rational.hpp"
#include "rampi/series.hpp"

namespace rampi {

// Scale factor and number of peeled terms of a published normalized form.
struct Presentation {
  BigRational scale;
  std::int64_t headTerms = 0;
  BigRational head;  // filled from normalizeIdentity
};

struct CatalogEntry {
  std::string id;
  SeriesSpec spec;
  std::optional<Presentation> presentation;
  std::string citation;
  std::string rhsDisplay;

  NormalizedIdentity normalized() const;
};

// A one-parameter family indexed by an integer k >= kMin.
struct CatalogFamily {
  std::string id;
  std::string citation;
  std::int64_t kMin = 0;
  std::function<CatalogEntry(std::int64_t k)> instantiate;
};

// The explicit identities, in publication order with stable ids.
const std::vector<CatalogEntry>& catalogEntries();
const std::vector<CatalogFamily>& catalogFamilies();

// Looks up an explicit entry by id, or a family instance written
// "<family-id>-k<k>". Returns nullopt if unknown.
std::optional<CatalogEntry> findCatalogEntry(const std::string& id);

// Builds an entry from a spec, optionally with a presentation.
CatalogEntry makeEntry(std::string id, std::string citation, const SeriesSpec& spec,
                       std::optional<std::pair<BigRational, std::int64_t>> presentation = std::nullopt);

// LaTeX display equation "<rhs> = [head + scale] sum ...".
std::string emitLatex(const CatalogEntry& entry);
std::string emitLatex(const SeriesSpec& spec);

// Reads back the raw-series form produced by emitLatex(SeriesSpec). Throws
// DomainError on anything else.
SeriesSpec parseLatexSpec(const std::string& latex);

// Plain-text rendering, e.g. "4/π = Σ_{n≥0} (1/2)_n (1/2)_n / (n! (n+1)!)".
std::string emitText(const CatalogEntry& entry);

}  // namespace rampi
