#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(RAMPI_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

TEST(Cli, VerifySpecJson) {
  const CliResult r = run("verify --alpha 1/2 --a 0 --b 0 --c 1 --digits 20");
  ASSERT_EQ(r.code, 0) << r.out;
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["spec"]["alpha"], "1/2");
  EXPECT_GE(j["digits_agreed"].get<int>(), 20);
}

TEST(Cli, VerifyCatalogJson) {
  const CliResult r = run("verify-catalog --digits 20 --format json");
  ASSERT_EQ(r.code, 0) << r.out;
  const json j = json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), 10u);
  for (const auto& rep : j) EXPECT_TRUE(rep["pass"].get<bool>());
  EXPECT_EQ(j[0]["spec"]["c"], 1);
  EXPECT_EQ(j[4]["spec"]["a"], -2);
}

TEST(Cli, VerifyCatalogRigorousWithFamilies) {
  const CliResult r = run("verify-catalog --mode rigorous --digits 4 --families 2 --threads 2 --format text");
  ASSERT_EQ(r.code, 0) << r.out;
  std::istringstream lines(r.out);
  int count = 0;
  for (std::string line; std::getline(lines, line);) {
    EXPECT_EQ(line.rfind("PASS ", 0), 0u) << line;
    ++count;
  }
  EXPECT_EQ(count, 10 + 8 * 2);
}

TEST(Cli, DomainErrorExitsTwo) {
  EXPECT_EQ(run("verify --alpha 1/2 --a 1 --b 1 --c 1").code, 2);
  EXPECT_EQ(run("verify --alpha 3/2 --a 0 --b 0 --c 1").code, 2);
  EXPECT_EQ(run("verify --id ex-9.9").code, 2);
  EXPECT_EQ(run("sweep --alpha 1/2 --c-range 4..1").code, 2);
}

TEST(Cli, UsageErrorExitsTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("verify --digits 0 --alpha 1/2 --c 1").code, 2);
  EXPECT_EQ(run("verify --mode sloppy --alpha 1/2 --c 1").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("pi --digits 0").code, 2);
}

TEST(Cli, BudgetFailureExitsOne) {
  EXPECT_EQ(run("verify --id ex-3.3 --max-terms 10").code, 1);
}

TEST(Cli, VerifyCatalogEntry) {
  const CliResult r = run("verify --id sp-3.9-k2 --digits 25 --format text");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("PASS sp-3.9-k2", 0), 0u) << r.out;
}

TEST(Cli, AtomicOut) {
  const auto dir = std::filesystem::temp_directory_path() / ("rampi_cli_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto file = dir / "report.json";
  {
    std::ofstream(file) << "stale";
  }
  const CliResult r = run("verify --id ex-a15-k0 --digits 15 --out " + file.string());
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(file);
  const json j = json::parse(in);
  EXPECT_EQ(j["spec"]["alpha"], "1/5");
  int entries = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++entries;
  EXPECT_EQ(entries, 1);
  std::filesystem::remove_all(dir);
}

TEST(Cli, Pi) {
  const CliResult r = run("pi --digits 10");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3.141592654\n");
  const json j = json::parse(run("pi --digits 30 --format json").out);
  EXPECT_GE(j["agreement_digits"].get<int>(), 30);
}

TEST(Cli, GenerateFormats) {
  const CliResult tex = run("generate --id ex-3.3");
  ASSERT_EQ(tex.code, 0);
  EXPECT_NE(tex.out.find("\\frac{4}{\\pi}"), std::string::npos);
  const CliResult text = run("generate --alpha 1/3 --a -1 --b -1 --c 0 --format text");
  EXPECT_EQ(text.out, "81√3/(8π) = Σ_{n≥0} (1/3)_{n-1} (2/3)_{n-1} / (n!²)\n");
  const json j = json::parse(run("generate --id ex-3.10 --format json").out);
  EXPECT_EQ(j["presentation"]["head"], "217");
}

TEST(Cli, CatalogList) {
  const CliResult r = run("catalog list --format json");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["entries"].size(), 10u);
  const CliResult text = run("catalog list");
  EXPECT_NE(text.out.find("sp-3.9-k<k>"), std::string::npos);
}

TEST(Cli, Sweep) {
  const CliResult r = run("sweep --alpha 1/4 --a -1 --b 0 --c-range 0..3 --digits 15 --format json");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  ASSERT_EQ(j.size(), 4u);
  for (int c = 0; c < 4; ++c) EXPECT_EQ(j[c]["spec"]["c"], c);
}

}  // namespace
