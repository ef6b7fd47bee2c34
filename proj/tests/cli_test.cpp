#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "basket/generator.hpp"
#include "cli/bench.hpp"
#include "cli/commands.hpp"
#include "cli/render.hpp"
#include "support/paper_db.hpp"
#include "support/reference.hpp"

namespace basket::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_tool(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("basket_cli_test_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  std::filesystem::path dir_;
};

const std::string kGrocery = testing::data_path("grocery_sample.basket");

TEST(CliMine, GroceryTable) {
  const Result r = run_tool({"mine", "--input", kGrocery, "--min-support", "0.42",
                             "--min-confidence", "0.8"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines_of(r.out),
            (std::vector<std::string>{std::string(kRuleTableHeader), "Rice | Pulses | 43% | 100%",
                                      "Wheat | Pulses | 57% | 80%"}));
}

TEST(CliMine, FullConfidenceKeepsRiceRow) {
  const Result r = run_tool({"mine", "--input", kGrocery, "--min-support", "0.42",
                             "--min-confidence", "1.0", "--algorithm", "apriori"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(lines_of(r.out).size(), 2u);
  EXPECT_EQ(lines_of(r.out)[1], "Rice | Pulses | 43% | 100%");
}

TEST(CliMine, EnginesRenderIdenticalOutput) {
  std::string first;
  for (const char* algorithm : {"apriori", "fpgrowth", "bruteforce"}) {
    for (const char* output : {"table", "csv", "json"}) {
      const Result r = run_tool({"mine", "--input", kGrocery, "--min-support", "0.2",
                                 "--min-confidence", "0.3", "--algorithm", algorithm, "--output",
                                 output, "--show-itemsets"});
      ASSERT_EQ(r.code, 0) << r.err;
      if (std::string(output) != "json") continue;
      auto doc = nlohmann::json::parse(r.out);
      doc["params"].erase("algorithm");
      if (first.empty()) first = doc.dump();
      EXPECT_EQ(doc.dump(), first) << algorithm;
    }
  }
}

TEST(CliMine, RepeatedRunsAreByteIdentical) {
  const std::vector<std::string> args{"mine", "--input", kGrocery, "--min-support", "0.1",
                                      "--min-confidence", "0.2", "--output", "csv",
                                      "--show-itemsets"};
  EXPECT_EQ(run_tool(args).out, run_tool(args).out);
}

TEST(CliMine, JsonCarriesExactRationals) {
  const Result r = run_tool({"mine", "--input", kGrocery, "--min-support", "0.1",
                             "--min-confidence", "0.1", "--output", "json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["n_transactions"], 7);
  const TransactionDb db = testing::grocery_db();
  ASSERT_FALSE(doc["rules"].empty());
  for (const auto& rule : doc["rules"]) {
    std::vector<std::string_view> lhs, both;
    for (const auto& l : rule["antecedent"]) lhs.push_back(l.get_ref<const std::string&>());
    both = lhs;
    for (const auto& l : rule["consequent"]) both.push_back(l.get_ref<const std::string&>());
    const Count union_count = db.support_count(db.itemset_of(both));
    const Count lhs_count = db.support_count(db.itemset_of(lhs));
    EXPECT_EQ(rule["support"]["num"], union_count);
    EXPECT_EQ(rule["support"]["den"], 7);
    EXPECT_EQ(rule["confidence"]["num"], union_count);
    EXPECT_EQ(rule["confidence"]["den"], lhs_count);
  }
}

TEST(CliMine, TablePercentsMatchExactRationals) {
  const Result json = run_tool({"mine", "--input", kGrocery, "--min-support", "0.1",
                                "--min-confidence", "0.1", "--output", "json"});
  const Result table = run_tool({"mine", "--input", kGrocery, "--min-support", "0.1",
                                 "--min-confidence", "0.1"});
  const auto doc = nlohmann::json::parse(json.out);
  const auto rows = lines_of(table.out);
  ASSERT_EQ(rows.size(), doc["rules"].size() + 1);
  for (std::size_t i = 0; i < doc["rules"].size(); ++i) {
    const auto& rule = doc["rules"][i];
    const auto pct = [](Count num, Count den) {
      // round-half-away via long double, independent of Fraction::percent
      return std::to_string(static_cast<long long>(
                 std::floor(static_cast<long double>(num) * 100.0L / den + 0.5L))) +
             "%";
    };
    const std::string s = pct(rule["support"]["num"], rule["support"]["den"]);
    const std::string c = pct(rule["confidence"]["num"], rule["confidence"]["den"]);
    EXPECT_TRUE(rows[i + 1].ends_with(" | " + s + " | " + c)) << rows[i + 1];
  }
}

TEST(CliMine, MaxAntecedentLimitsRules) {
  const Result r = run_tool({"mine", "--input", kGrocery, "--min-support", "0.1",
                             "--min-confidence", "0.1", "--max-antecedent", "1", "--output",
                             "json"});
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_FALSE(doc["rules"].empty());
  for (const auto& rule : doc["rules"]) EXPECT_EQ(rule["antecedent"].size(), 1u);
}

TEST(CliMine, TidPairsInput) {
  const Result r = run_tool({"mine", "--input", testing::data_path("grocery_sample_tidpairs.csv"),
                             "--format", "tidpairs", "--skip-header", "--min-support", "0.42",
                             "--min-confidence", "0.8"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines_of(r.out).size(), 3u);
}

TEST(CliMine, CsvQuotesMultiItemSides) {
  const Result r = run_tool({"mine", "--input", kGrocery, "--min-support", "0.1",
                             "--min-confidence", "1.0", "--output", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"Wheat, Rice\",Pulses,"), std::string::npos) << r.out;
}

TEST(CliMine, ExitCodes) {
  EXPECT_EQ(run_tool({"mine", "--input", "/nonexistent", "--min-support", "0.5",
                      "--min-confidence", "0.5"})
                .code,
            kIngestError);
  const Result missing = run_tool({"mine", "--input", "/nonexistent", "--min-support", "0.5",
                                   "--min-confidence", "0.5"});
  EXPECT_TRUE(missing.out.empty());
  EXPECT_FALSE(missing.err.empty());
  EXPECT_EQ(run_tool({"mine", "--input", kGrocery, "--min-support", "0.5"}).code, kUsageError);
  EXPECT_EQ(run_tool({"mine", "--input", kGrocery, "--min-support", "0", "--min-confidence",
                      "0.5"})
                .code,
            kUsageError);
  EXPECT_EQ(run_tool({"mine", "--input", kGrocery, "--min-support", "0.5", "--min-confidence",
                      "0.5", "--algorithm", "eclat"})
                .code,
            kUsageError);
  EXPECT_EQ(run_tool({}).code, kUsageError);
  EXPECT_EQ(run_tool({"--help"}).code, kOk);
}

TEST_F(TempDir, MineGuardErrorOnLargeUniverse) {
  const std::string file = path("wide.basket");
  ASSERT_EQ(run_tool({"gen", "--transactions", "50", "--items", "30", "--out", file}).code, 0);
  EXPECT_EQ(run_tool({"mine", "--input", file, "--min-support", "0.5", "--min-confidence", "0.5",
                      "--algorithm", "bruteforce"})
                .code,
            kGuardError);
}

TEST_F(TempDir, MineIngestErrorOnMalformedFile) {
  const std::string file = path("bad.basket");
  std::ofstream(file) << "a, b\na,,c\n";
  const Result r = run_tool({"mine", "--input", file, "--min-support", "0.5",
                             "--min-confidence", "0.5"});
  EXPECT_EQ(r.code, kIngestError);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST_F(TempDir, MinItemsFilter) {
  const std::string file = path("mixed.basket");
  std::ofstream(file) << "a\na, b\na, b\nc\n";
  const Result r = run_tool({"mine", "--input", file, "--min-items", "2", "--min-support", "1.0",
                             "--min-confidence", "1.0", "--output", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["n_transactions"], 2);
}

TEST_F(TempDir, GenIsDeterministic) {
  const std::vector<std::string> base{"gen", "--transactions", "100", "--items", "10", "--seed",
                                      "7"};
  auto a = base, b = base;
  a.insert(a.end(), {"--out", path("a.basket")});
  b.insert(b.end(), {"--out", path("b.basket")});
  const Result ra = run_tool(a);
  ASSERT_EQ(ra.code, 0) << ra.err;
  ASSERT_EQ(run_tool(b).code, 0);
  EXPECT_EQ(slurp(path("a.basket")), slurp(path("b.basket")));
  EXPECT_NE(ra.out.find("generated 100 transactions"), std::string::npos);
  EXPECT_NE(ra.out.find("seed 7"), std::string::npos);
}

TEST_F(TempDir, GenStdoutMatchesFile) {
  ASSERT_EQ(run_tool({"gen", "--transactions", "40", "--out", path("x.basket")}).code, 0);
  const Result r = run_tool({"gen", "--transactions", "40"});
  EXPECT_EQ(r.out, slurp(path("x.basket")));
  EXPECT_NE(r.err.find("generated"), std::string::npos);
}

TEST_F(TempDir, GenCertainPatternIsMined) {
  const std::string file = path("p.basket");
  ASSERT_EQ(run_tool({"gen", "--transactions", "200", "--pattern", "a,b:1.0", "--out", file}).code,
            0);
  const Result r = run_tool({"mine", "--input", file, "--min-support", "1.0", "--min-confidence",
                             "1.0", "--show-itemsets", "--output", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  bool found = false;
  const auto doc = nlohmann::json::parse(r.out);
  for (const auto& s : doc["itemsets"])
    found = found || (s["items"] == nlohmann::json::array({"a", "b"}) && s["count"] == 200);
  EXPECT_TRUE(found) << r.out;
}

TEST_F(TempDir, GenDefaultOutputReingests) {
  const std::string file = path("d.basket");
  ASSERT_EQ(run_tool({"gen", "--out", file}).code, 0);
  EXPECT_EQ(run_tool({"mine", "--input", file, "--min-support", "0.05", "--min-confidence",
                      "0.5"})
                .code,
            0);
}

TEST(CliGen, InvalidConfigIsUsageError) {
  EXPECT_EQ(run_tool({"gen", "--items", "3", "--basket-max", "4"}).code, kUsageError);
  EXPECT_EQ(run_tool({"gen", "--pattern", "a,b"}).code, kUsageError);
  EXPECT_EQ(run_tool({"gen", "--pattern", "a:2"}).code, kUsageError);
}

TEST(CliBench, GeneratedSweepReportsEveryCell) {
  const Result r = run_tool({"bench", "--transactions", "400", "--items", "30", "--pattern",
                             "item_0001,item_0002:0.4", "--thresholds", "0.3,0.1,0.05",
                             "--repeat", "2", "--output", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc["rows"].size(), 6u);
  EXPECT_TRUE(doc["engines_agree"].get<bool>());
  std::size_t previous = 0;
  for (std::size_t i = 0; i < 6; i += 2) {
    const auto& a = doc["rows"][i];
    const auto& f = doc["rows"][i + 1];
    EXPECT_EQ(a["algorithm"], "apriori");
    EXPECT_EQ(f["algorithm"], "fpgrowth");
    EXPECT_EQ(a["frequent_itemsets"], f["frequent_itemsets"]);
    EXPECT_GE(a["frequent_itemsets"].get<std::size_t>(), previous);
    previous = a["frequent_itemsets"].get<std::size_t>();
    for (const auto* row : {&a, &f})
      EXPECT_EQ((*row)["total_ns"].get<long long>(),
                (*row)["build_ns"].get<long long>() + (*row)["mine_ns"].get<long long>());
  }
}

TEST(CliBench, TableOutputOnFile) {
  const Result r = run_tool({"bench", "--input", kGrocery, "--thresholds", "0.42",
                             "--algorithms", "apriori,fpgrowth,bruteforce", "--repeat", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("bruteforce | 0.42 | 3 |"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("| 7\n"), std::string::npos);
}

TEST(CliBench, BadFlags) {
  EXPECT_EQ(run_tool({"bench", "--thresholds", "0.1,,0.2"}).code, kUsageError);
  EXPECT_EQ(run_tool({"bench", "--thresholds", "1.5"}).code, kUsageError);
  EXPECT_EQ(run_tool({"bench", "--algorithms", "apriori,eclat"}).code, kUsageError);
}

TEST(RunBenchmark, DisagreementIsReported) {
  const TransactionDb db = testing::grocery_db();
  std::vector<BenchEngine> engines{bench_engine(Algorithm::fpgrowth)};
  engines.push_back({"broken", [](const TransactionDb& d, const MiningParams& p, PhaseStats* s) {
                       auto r = mine(d, p, Algorithm::apriori, s);
                       if (!r.empty()) r.pop_back();
                       return r;
                     }});
  const std::vector<double> thresholds{0.42};
  EXPECT_THROW(run_benchmark(db, "grocery", thresholds, engines, 1), EngineDisagreement);
}

}  // namespace
}  // namespace basket::cli
