// rampi: build, print and verify 1/pi series from the command line.
//
// Exit codes: 0 every verification passed, 1 some verification failed or ran
// out of budget, 2 usage or domain error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "rampi/rampi.hpp"

namespace {

using namespace rampi;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct SpecArgs {
  std::string id;
  std::string alpha;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 1;
};

struct RunArgs {
  int digits = 20;
  std::string mode = "accelerated";
  std::string scheme = "levin-u";
  std::int64_t maxTerms = 1'000'000;
  long precisionBits = 0;
  int threads = 0;
  std::string format = "json";
  std::string out;
};

int hardwareThreads() { return std::max(1u, std::thread::hardware_concurrency()); }

void writeOutput(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << '\n';
    return;
  }
  // Write next to the target and rename so readers never see a partial file.
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp" + std::to_string(std::random_device{}());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw DomainError("cannot write " + tmp.string());
    f << text << '\n';
    f.close();
    if (!f) throw DomainError("cannot write " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw DomainError("cannot replace " + path + ": " + ec.message());
  }
}

VerifyOptions verifyOptions(const RunArgs& run, int threads) {
  VerifyOptions o;
  o.mode = parseSumMode(run.mode);
  if (o.mode == SumMode::automatic) throw DomainError("--mode must be rigorous or accelerated");
  o.scheme = run.scheme == "wynn-epsilon" ? AccelerationScheme::wynnEpsilon : AccelerationScheme::levinU;
  o.maxTerms = run.maxTerms;
  o.precisionBits = run.precisionBits;
  o.threads = threads;
  return o;
}

// A catalog entry by id, or an ad hoc raw entry from --alpha/--a/--b/--c.
CatalogEntry resolveEntry(const SpecArgs& s) {
  if (!s.id.empty()) {
    auto entry = findCatalogEntry(s.id);
    if (!entry) throw DomainError("unknown catalog id '" + s.id + "'");
    return *entry;
  }
  if (s.alpha.empty()) throw DomainError("give --id or --alpha/--a/--b/--c");
  const SeriesSpec spec = buildSpec(parseAlpha(s.alpha), s.a, s.b, s.c);
  return makeEntry("spec", "user spec", spec);
}

VerificationReport verifyEntry(const CatalogEntry& entry, int digits, const VerifyOptions& options) {
  VerificationReport r = entry.presentation ? verifyNormalized(entry.normalized(), digits, options)
                                            : verifySpec(entry.spec, digits, options);
  r.label = entry.id;
  return r;
}

std::string reportLine(const VerificationReport& r) {
  std::ostringstream out;
  out << (r.pass ? "PASS " : "FAIL ") << (r.label.empty() ? r.spec.toString() : r.label + " " + r.spec.toString())
      << " method=" << toString(r.method) << " terms=" << r.termsUsed << " bits=" << r.workingPrecisionBits
      << " digits=" << r.digitsAgreed << " rel=" << r.relError.toString(3);
  if (r.rigorousTailBound) out << " bound=" << r.rigorousTailBound->toString(3);
  out << " ms=" << r.elapsedMillis;
  return out.str();
}

std::string renderReports(const std::vector<VerificationReport>& reports, const std::string& format) {
  if (format == "json") return toJson(std::span<const VerificationReport>(reports));
  std::string out;
  for (const auto& r : reports) out += (out.empty() ? "" : "\n") + reportLine(r);
  return out;
}

int exitFor(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; }) ? kExitPass : kExitFail;
}

// Runs jobs on up to `threads` workers; results keep job order.
std::vector<VerificationReport> runParallel(const std::vector<CatalogEntry>& entries, int digits,
                                            const VerifyOptions& options, int threads) {
  std::vector<std::optional<VerificationReport>> slots(entries.size());
  std::vector<std::string> errors(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      try {
        slots[i] = verifyEntry(entries[i], digits, options);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  const int n = std::clamp<int>(threads, 1, static_cast<int>(std::max<std::size_t>(entries.size(), 1)));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<VerificationReport> out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!errors[i].empty()) throw BudgetExceeded(entries[i].id + ": " + errors[i]);
    out.push_back(*slots[i]);
  }
  return out;
}

std::string entryText(const CatalogEntry& e) {
  std::string line = e.id + "  " + e.citation + "  " + e.spec.toString();
  return line + "\n    " + emitText(e);
}

void addRunFlags(CLI::App* cmd, RunArgs& run, bool allowFormatText) {
  cmd->add_option("--digits", run.digits, "Decimal digits to verify")->check(CLI::Range(1, 10000));
  cmd->add_option("--mode", run.mode, "rigorous or accelerated")->check(CLI::IsMember({"rigorous", "accelerated"}));
  cmd->add_option("--scheme", run.scheme, "Acceleration scheme")->check(CLI::IsMember({"levin-u", "wynn-epsilon"}));
  cmd->add_option("--max-terms", run.maxTerms, "Term budget")->check(CLI::PositiveNumber);
  cmd->add_option("--precision-bits", run.precisionBits, "Working precision floor (default 4*digits+64)")
      ->check(CLI::Range(53L, 1L << 24));
  cmd->add_option("--threads", run.threads, "Worker threads (default: all cores)")->check(CLI::Range(1, 1024));
  if (allowFormatText) {
    cmd->add_option("--format", run.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  }
  cmd->add_option("--out", run.out, "Write the result to FILE atomically");
}

void addSpecFlags(CLI::App* cmd, SpecArgs& s, bool withId) {
  if (withId) cmd->add_option("--id", s.id, "Catalog id, e.g. ex-3.3 or sp-3.5-k2");
  cmd->add_option("--alpha", s.alpha, "alpha as p/q in (0,1)");
  cmd->add_option("--a", s.a, "Shift of (alpha)");
  cmd->add_option("--b", s.b, "Shift of (1-alpha)");
  cmd->add_option("--c", s.c, "Factorial offset");
}

std::pair<std::int64_t, std::int64_t> parseRange(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw DomainError("range must look like lo..hi");
  try {
    std::size_t used = 0;
    const std::string loText = text.substr(0, dots);
    const std::string hiText = text.substr(dots + 2);
    const std::int64_t lo = std::stoll(loText, &used);
    if (used != loText.size()) throw DomainError("bad range");
    const std::int64_t hi = std::stoll(hiText, &used);
    if (used != hiText.size()) throw DomainError("bad range");
    if (lo > hi) throw DomainError("range lo exceeds hi");
    if (hi - lo > 10000) throw DomainError("range too long");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw DomainError("range must look like lo..hi, got '" + text + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-form 1/pi series: catalog, LaTeX, exact and accelerated verification"};
  app.require_subcommand(1);

  auto* catalog = app.add_subcommand("catalog", "Catalog of published identities");
  catalog->require_subcommand(1);
  std::string listFormat = "text";
  auto* list = catalog->add_subcommand("list", "List entries and families");
  list->add_option("--format", listFormat, "text or json")->check(CLI::IsMember({"text", "json"}));

  SpecArgs genSpec;
  std::string genFormat = "latex";
  auto* generate = app.add_subcommand("generate", "Print the identity for a spec or catalog id");
  addSpecFlags(generate, genSpec, true);
  generate->add_option("--format", genFormat, "latex, json or text")->check(CLI::IsMember({"latex", "json", "text"}));

  SpecArgs verSpec;
  RunArgs verRun;
  auto* verify = app.add_subcommand("verify", "Verify one identity");
  addSpecFlags(verify, verSpec, true);
  addRunFlags(verify, verRun, true);

  RunArgs catRun;
  std::int64_t familyInstances = 0;
  auto* verifyCatalog = app.add_subcommand("verify-catalog", "Verify every explicit catalog entry");
  addRunFlags(verifyCatalog, catRun, true);
  verifyCatalog->add_option("--families", familyInstances, "Also verify the first N members of each family")
      ->check(CLI::Range(0, 100));

  SpecArgs sweepSpec;
  RunArgs sweepRun;
  std::string cRange;
  auto* sweep = app.add_subcommand("sweep", "Verify a spec for a range of c");
  sweepSpec.alpha = "1/2";
  sweep->add_option("--alpha", sweepSpec.alpha, "alpha as p/q in (0,1)");
  sweep->add_option("--a", sweepSpec.a, "Shift of (alpha)");
  sweep->add_option("--b", sweepSpec.b, "Shift of (1-alpha)");
  sweep->add_option("--c-range", cRange, "lo..hi inclusive")->required();
  addRunFlags(sweep, sweepRun, true);

  int piDigits = 50;
  std::string piFormat = "text";
  std::string piOut;
  auto* pi = app.add_subcommand("pi", "Dual-formula pi");
  pi->add_option("--digits", piDigits, "Decimal digits")->check(CLI::Range(1, kDefaultMaxPiDigits));
  pi->add_option("--format", piFormat, "text or json")->check(CLI::IsMember({"text", "json"}));
  pi->add_option("--out", piOut, "Write the result to FILE atomically");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (list->parsed()) {
      if (listFormat == "json") {
        writeOutput(catalogToJson(), "");
      } else {
        for (const auto& e : catalogEntries()) std::cout << entryText(e) << '\n';
        for (const auto& f : catalogFamilies()) {
          std::cout << f.id << "-k<k>  " << f.citation << "  k >= " << f.kMin << '\n';
        }
      }
      return kExitPass;
    }

    if (generate->parsed()) {
      const CatalogEntry entry = resolveEntry(genSpec);
      if (genFormat == "latex") {
        std::cout << emitLatex(entry) << '\n';
      } else if (genFormat == "json") {
        std::cout << toJson(entry) << '\n';
      } else {
        std::cout << emitText(entry) << '\n';
      }
      return kExitPass;
    }

    if (verify->parsed()) {
      const CatalogEntry entry = resolveEntry(verSpec);
      const int threads = verRun.threads > 0 ? verRun.threads : hardwareThreads();
      const VerificationReport r = verifyEntry(entry, verRun.digits, verifyOptions(verRun, threads));
      writeOutput(verRun.format == "json" ? toJson(r) : reportLine(r), verRun.out);
      return r.pass ? kExitPass : kExitFail;
    }

    if (verifyCatalog->parsed()) {
      std::vector<CatalogEntry> entries = catalogEntries();
      for (const auto& f : catalogFamilies()) {
        for (std::int64_t k = f.kMin; k < f.kMin + familyInstances; ++k) entries.push_back(f.instantiate(k));
      }
      const int threads = catRun.threads > 0 ? catRun.threads : hardwareThreads();
      const auto reports = runParallel(entries, catRun.digits, verifyOptions(catRun, 1), threads);
      writeOutput(renderReports(reports, catRun.format), catRun.out);
      return exitFor(reports);
    }

    if (sweep->parsed()) {
      const auto [lo, hi] = parseRange(cRange);
      const RationalAlpha alpha = parseAlpha(sweepSpec.alpha);
      std::vector<CatalogEntry> entries;
      for (std::int64_t c = lo; c <= hi; ++c) {
        entries.push_back(makeEntry("c=" + std::to_string(c), "sweep", buildSpec(alpha, sweepSpec.a, sweepSpec.b, c)));
      }
      const int threads = sweepRun.threads > 0 ? sweepRun.threads : hardwareThreads();
      const auto reports = runParallel(entries, sweepRun.digits, verifyOptions(sweepRun, 1), threads);
      writeOutput(renderReports(reports, sweepRun.format), sweepRun.out);
      return exitFor(reports);
    }

    if (pi->parsed()) {
      const PiReference ref = computePi(piDigits);
      if (piFormat == "json") {
        nlohmann::ordered_json j;
        j["digits"] = ref.digits;
        j["value"] = ref.decimal();
        j["agreement_digits"] = ref.agreementDigits;
        j["working_precision_bits"] = piWorkingBits(piDigits);
        writeOutput(j.dump(2), piOut);
      } else {
        writeOutput(ref.decimal(), piOut);
      }
      return kExitPass;
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PoleError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
