#include "rampi/catalog.hpp"

#include "rampi/shifted_factorial.hpp"

namespace rampi {

NormalizedIdentity CatalogEntry::normalized() const {
  if (presentation) return normalizeIdentity(spec, presentation->scale, presentation->headTerms);
  return normalizeIdentity(spec, BigRational(1));
}

CatalogEntry makeEntry(std::string id, std::string citation, const SeriesSpec& spec,
                       std::optional<std::pair<BigRational, std::int64_t>> presentation) {
  CatalogEntry entry;
  entry.id = std::move(id);
  entry.citation = std::move(citation);
  entry.spec = spec;
  if (presentation) {
    const NormalizedIdentity n = normalizeIdentity(spec, presentation->first, presentation->second);
    entry.presentation = Presentation{presentation->first, presentation->second, n.head};
    entry.rhsDisplay = displayRhs(n.rhs);
  } else {
    entry.rhsDisplay = displayRhs(rhsConstant(spec));
  }
  return entry;
}

namespace {

BigRational factorialTimes(std::int64_t n, std::int64_t num, std::int64_t den) {
  return BigRational(factorial(n)) * makeRational(num, den);
}

// Families over a = b = -1, c = k with the head reduced to 1 by scale m k!.
CatalogFamily alphaFamily(std::string id, std::string citation, RationalAlpha alpha, std::int64_t num,
                          std::int64_t den) {
  CatalogFamily f;
  f.id = id;
  f.citation = citation;
  f.kMin = 0;
  f.instantiate = [=](std::int64_t k) {
    return makeEntry(id + "-k" + std::to_string(k), citation + ", k=" + std::to_string(k), buildSpec(alpha, -1, -1, k),
                     std::make_pair(factorialTimes(k, num, den), std::int64_t{1}));
  };
  return f;
}

std::vector<CatalogEntry> buildEntries() {
  const RationalAlpha half{1, 2};
  using P = std::pair<BigRational, std::int64_t>;
  std::vector<CatalogEntry> out;
  out.push_back(makeEntry("ex-3.3", "Example 3.3", buildSpec(half, 0, 0, 1)));
  out.push_back(makeEntry("ex-3.4", "Example 3.4", buildSpec(half, 0, 0, 2)));
  out.push_back(makeEntry("ex-3.6", "Example 3.6", buildSpec(half, -1, -1, 0), P{1, 2}));
  out.push_back(makeEntry("ex-3.7", "Example 3.7", buildSpec(half, -1, -1, 1), P{2, 2}));
  out.push_back(makeEntry("ex-3.10", "Example 3.10", buildSpec(half, -2, -2, 0), P{36, 3}));
  out.push_back(makeEntry("ex-a13-k0", "Example 3.13 (alpha=1/3, k=0)", buildSpec({1, 3}, -1, -1, 0), P{makeRational(2, 9), 1}));
  out.push_back(makeEntry("ex-a14-k0", "Example 3.16 (alpha=1/4, k=0)", buildSpec({1, 4}, -1, -1, 0), P{makeRational(3, 16), 1}));
  out.push_back(makeEntry("ex-a16-k0", "Example 3.19 (alpha=1/6, k=0)", buildSpec({1, 6}, -1, -1, 0), P{makeRational(5, 36), 1}));
  out.push_back(makeEntry("ex-a110-k0", "Example 3.22 (alpha=1/10, k=0)", buildSpec({1, 10}, -1, -1, 0), P{makeRational(9, 100), 1}));
  out.push_back(makeEntry("ex-a15-k0", "Example 3.25 (alpha=1/5, k=0)", buildSpec({1, 5}, -1, -1, 0), P{makeRational(4, 25), 1}));
  return out;
}

std::vector<CatalogFamily> buildFamilies() {
  const RationalAlpha half{1, 2};
  std::vector<CatalogFamily> out;

  CatalogFamily sp2{"sp-3.2", "Special case 3.2 (a=b=0, c=k)", 1, nullptr};
  sp2.instantiate = [=](std::int64_t k) {
    return makeEntry("sp-3.2-k" + std::to_string(k), "Special case 3.2, k=" + std::to_string(k), buildSpec(half, 0, 0, k));
  };
  out.push_back(sp2);

  CatalogFamily sp5{"sp-3.5", "Special case 3.5 (a=b=-1, c=k)", 0, nullptr};
  sp5.instantiate = [=](std::int64_t k) {
    return makeEntry("sp-3.5-k" + std::to_string(k), "Special case 3.5, k=" + std::to_string(k),
                     buildSpec(half, -1, -1, k), std::make_pair(BigRational(factorial(k + 1)), std::int64_t{2}));
  };
  out.push_back(sp5);

  CatalogFamily sp9{"sp-3.9", "Special case 3.9 (a=b=-2, c=k)", 0, nullptr};
  sp9.instantiate = [=](std::int64_t k) {
    return makeEntry("sp-3.9-k" + std::to_string(k), "Special case 3.9, k=" + std::to_string(k),
                     buildSpec(half, -2, -2, k), std::make_pair(BigRational(18 * factorial(k + 2)), std::int64_t{3}));
  };
  out.push_back(sp9);

  out.push_back(alphaFamily("sp-a13", "Special case 3.12 (alpha=1/3, a=b=-1, c=k)", {1, 3}, 2, 9));
  out.push_back(alphaFamily("sp-a14", "Special case 3.15 (alpha=1/4, a=b=-1, c=k)", {1, 4}, 3, 16));
  out.push_back(alphaFamily("sp-a16", "Special case 3.18 (alpha=1/6, a=b=-1, c=k)", {1, 6}, 5, 36));
  out.push_back(alphaFamily("sp-a110", "Special case 3.21 (alpha=1/10, a=b=-1, c=k)", {1, 10}, 9, 100));
  out.push_back(alphaFamily("sp-a15", "Special case 3.24 (alpha=1/5, a=b=-1, c=k)", {1, 5}, 4, 25));
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalogEntries() {
  static const std::vector<CatalogEntry> entries = buildEntries();
  return entries;
}

const std::vector<CatalogFamily>& catalogFamilies() {
  static const std::vector<CatalogFamily> families = buildFamilies();
  return families;
}

std::optional<CatalogEntry> findCatalogEntry(const std::string& id) {
  for (const CatalogEntry& e : catalogEntries()) {
    if (e.id == id) return e;
  }
  for (const CatalogFamily& f : catalogFamilies()) {
    const std::string prefix = f.id + "-k";
    if (id.rfind(prefix, 0) != 0) continue;
    const std::string rest = id.substr(prefix.size());
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos || rest.size() > 6) return std::nullopt;
    const std::int64_t k = std::stoll(rest);
    if (k < f.kMin) return std::nullopt;
    return f.instantiate(k);
  }
  return std::nullopt;
}

}  // namespace rampi
