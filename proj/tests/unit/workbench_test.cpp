#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "rspec/errors.hpp"
#include "workbench/cli.hpp"
#include "workbench/csv.hpp"
#include "workbench/manifest.hpp"
#include "workbench/reproduce.hpp"

namespace fs = std::filesystem;
using rspec::workbench::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  args.insert(args.begin(), {"--zeros-file", oracle::fixture_path().string()});
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) v.push_back(line);
  return v;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("rspec_wb_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

}  // namespace

TEST(Csv, RealFormatting) {
  using rspec::workbench::format_real;
  EXPECT_EQ(format_real(0.0), "0");
  EXPECT_EQ(format_real(-0.0), "0");
  EXPECT_EQ(format_real(0.5), "0.5");
  EXPECT_EQ(format_real(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(format_real(14.134725141734694), "14.1347251417");
}

TEST(Csv, QuotesFieldsThatNeedIt) {
  rspec::workbench::CsvTable t({"a", "b"});
  t.row().cell("x,y").cell("say \"hi\"");
  EXPECT_EQ(t.str(), "a,b\n\"x,y\",\"say \"\"hi\"\"\"\n");
}

TEST(Cli, CorrRowHasOneLinePerPrimeAndZeroSelfTerm) {
  const auto r = invoke({"corr", "row", "--p", "19", "--primes", "100", "--zeros", "1000", "--mode", "raw"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 101u);  // header + 100 primes
  EXPECT_EQ(lines[0], "q,c");
  EXPECT_EQ(lines[1].substr(0, 2), "2,");
  EXPECT_EQ(lines[8], "19,0");  // 19 is the 8th prime
  EXPECT_EQ(lines[100].substr(0, 4), "541,");
}

TEST(Cli, EuclidPrintsCandidateAndVerdict) {
  auto r = invoke({"euclid", "--factors", "3,5,7"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "211 prime=true\n");

  r = invoke({"euclid", "--factors", "3,5,7,11,13"});  // 30031 = 59 * 509
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "30031 prime=false\n");
}

TEST(Cli, EuclidRejectsBadFactorsWithExitOne) {
  const auto r = invoke({"euclid", "--factors", "3,9"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST(Cli, ZerosInfoOnFixture) {
  const auto r = invoke({"zeros", "info"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[1], "count 1000");
  EXPECT_EQ(lines[2], "first 14.134725142");
  EXPECT_EQ(lines[3], "last 1419.422480946");
}

TEST(Cli, ZerosCountReportsEstimate) {
  const auto r = invoke({"zeros", "count", "--t", "100,1000"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[1].substr(0, 11), "100,29,28.1");
  EXPECT_EQ(lines[2].substr(0, 13), "1000,649,647.");
}

TEST(Cli, GlobalFlagsAreAcceptedAfterTheSubcommand) {
  const auto r = invoke({"zeros", "info", "--limit", "10"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("count 10\n"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"euclid", "--factors", "3", "--bogus"}).code, 2);
  EXPECT_EQ(invoke({"corr", "row", "--p", "19", "--mode", "fancy"}).code, 2);
  EXPECT_EQ(invoke({"corr"}).code, 2);
}

TEST(Cli, HelpExitsZero) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("reproduce"), std::string::npos);
}

TEST(Cli, MissingZerosFileExitsOne) {
  std::ostringstream out, err;
  const int code = run({"--zeros-file", "/nonexistent/zeros.txt", "zeros", "info"}, out, err);
  EXPECT_EQ(code, 1);
  EXPECT_NE(err.str().find("/nonexistent/zeros.txt"), std::string::npos);
}

TEST(Cli, DomainErrorsExitOne) {
  EXPECT_EQ(invoke({"corr", "row", "--p", "20"}).code, 1);
  EXPECT_EQ(invoke({"poset", "tree", "--p", "91"}).code, 1);
  EXPECT_EQ(invoke({"sector", "hist", "--p", "2", "--zeros", "5000"}).code, 1);
  EXPECT_EQ(invoke({"sector", "bihist", "--p1", "2", "--p2", "3", "--matrix", "1,2,2,4"}).code, 1);
  EXPECT_EQ(invoke({"duality", "zeros-to-primes", "--xmin", "0.5"}).code, 1);
}

TEST(Cli, PosetTreePrintsTextThenEdges) {
  const auto r = invoke({"poset", "tree", "--p", "463"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, 4), "463\n");
  EXPECT_NE(r.out.find("\n  7\n    2\n    3\n"), std::string::npos);
  EXPECT_NE(r.out.find("parent,child,exponent\n463,2,1\n"), std::string::npos);
}

TEST(Cli, PosetPredecessors) {
  const auto r = invoke({"poset", "preds", "--p", "379"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "379-1 = 2*3^3*7\npredecessors 2,3,7\n");
}

TEST(Cli, DualityPeakTableIsAppended) {
  const auto r = invoke({"duality", "zeros-to-primes", "--count", "200", "--xmin", "1.5", "--xmax", "5.5",
                         "--step", "0.01", "--peaks", "--prominence", "20"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto split = r.out.find("\n\npeak_abscissa,peak_value,prominence\n");
  ASSERT_NE(split, std::string::npos);
  EXPECT_EQ(r.out.substr(0, 15), "abscissa,value\n");
}

TEST(Cli, OutWritesCsvAndManifest) {
  TempDir dir;
  const auto csv = dir.path() / "hist.csv";
  const auto r = invoke({"sector", "hist", "--p", "2", "--bins", "10", "--out", csv.string(), "--svg",
                         (dir.path() / "hist.svg").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  const auto body = slurp(csv);
  EXPECT_EQ(lines_of(body).size(), 11u);
  const auto manifest = slurp(rspec::workbench::manifest_path_for(csv));
  EXPECT_NE(manifest.find("\"subcommand\": \"sector hist\""), std::string::npos);
  EXPECT_NE(manifest.find("\"bins\": \"10\""), std::string::npos);
  EXPECT_NE(manifest.find("\"compression\": \"1\""), std::string::npos);  // default recorded
  EXPECT_NE(manifest.find("\"zeros_used\": 1000"), std::string::npos);
  EXPECT_EQ(slurp(dir.path() / "hist.svg").substr(0, 4), "<svg");
  EXPECT_TRUE(fs::exists(dir.path() / "hist.svg.manifest.json"));
}

TEST(Cli, OutputIsIndependentOfThreadCount) {
  const std::vector<std::vector<std::string>> commands{
      {"corr", "row", "--p", "29", "--mode", "centered"},
      {"corr", "matrix", "--primes", "25", "--zeros", "300"},
      {"duality", "primes-to-zeros", "--xmax", "2000", "--tmin", "10", "--tmax", "30", "--step", "0.05"},
      {"duality", "zeros-to-primes", "--xmax", "6", "--step", "0.01"},
  };
  for (const auto& cmd : commands) {
    std::string reference;
    for (const char* threads : {"1", "2", "3", "8"}) {
      auto args = cmd;
      args.insert(args.end(), {"--threads", threads});
      const auto r = invoke(args);
      ASSERT_EQ(r.code, 0) << r.err;
      if (reference.empty()) {
        reference = r.out;
      } else {
        EXPECT_EQ(r.out, reference) << cmd[0] << " " << cmd[1] << " threads=" << threads;
      }
    }
  }
}

TEST(Reproduce, Fig6NoteAnnotatesTargets) {
  TempDir dir;
  const auto zeros = rspec::ZeroTable::load(oracle::fixture_path());
  const auto result =
      rspec::workbench::reproduce(rspec::workbench::Figure::fig6_corr29, zeros, dir.path(), 2);
  ASSERT_TRUE(result.raw_report.has_value());
  ASSERT_TRUE(result.centered_report.has_value());
  EXPECT_EQ(result.raw_report->rows.size(), 100u);
  EXPECT_NE(result.note.find("q=317 q-1=2^2*79 (stated 2^2*79, matches)"), std::string::npos);
  EXPECT_NE(result.note.find("q=379 q-1=2*3^3*7 (stated 2*3^3*7, matches)"), std::string::npos);
  EXPECT_NE(result.note.find("q=463 q-1=2*3*7*11 (stated 2*3*7*11, matches)"), std::string::npos);
  for (const char* name : {"fig6_corr29_raw.csv", "fig6_corr29_centered.csv",
                           "fig6_corr29_resonance_raw.csv", "fig6_corr29_resonance_centered.csv",
                           "fig6_corr29.svg", "fig6_corr29_note.txt",
                           "fig6_corr29_raw.csv.manifest.json"}) {
    EXPECT_TRUE(fs::exists(dir.path() / name)) << name;
  }
}

TEST(Reproduce, Fig5Corr19ReportsBothFactorizations) {
  TempDir dir;
  const auto zeros = rspec::ZeroTable::load(oracle::fixture_path());
  const auto result =
      rspec::workbench::reproduce(rspec::workbench::Figure::fig5_corr19, zeros, dir.path(), 1);
  EXPECT_NE(result.note.find("389-1 = 2^2*97"), std::string::npos);
  EXPECT_NE(result.note.find("359-1 = 2*179"), std::string::npos);
  EXPECT_NE(result.note.find("q=389 q-1=2^2*97 (stated 2*179, MISMATCH)"), std::string::npos);
}

TEST(Reproduce, HistogramRecipesUseTheirParameters) {
  TempDir dir;
  const auto zeros = rspec::ZeroTable::load(oracle::fixture_path());
  rspec::workbench::reproduce(rspec::workbench::Figure::fig3, zeros, dir.path(), 1);
  rspec::workbench::reproduce(rspec::workbench::Figure::fig5_bihist, zeros, dir.path(), 1);
  EXPECT_EQ(lines_of(slurp(dir.path() / "fig3.csv")).size(), 101u);
  EXPECT_EQ(lines_of(slurp(dir.path() / "fig5_bihist.csv")).size(), 2501u);
  EXPECT_EQ(lines_of(slurp(dir.path() / "fig5_bihist.csv"))[0], "x_bin,y_bin,count");
}

TEST(Reproduce, TooFewZerosIsAnIoError) {
  TempDir dir;
  const auto zeros = rspec::ZeroTable::load(oracle::fixture_path(), 999);
  EXPECT_THROW(rspec::workbench::reproduce(rspec::workbench::Figure::fig3, zeros, dir.path()),
               rspec::IoError);
}

TEST(Reproduce, FigureNamesRoundTrip) {
  for (auto f : rspec::workbench::kAllFigures) {
    EXPECT_EQ(rspec::workbench::parse_figure(rspec::workbench::to_string(f)), f);
  }
  EXPECT_FALSE(rspec::workbench::parse_figure("fig7").has_value());
}
