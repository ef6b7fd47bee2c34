#include "cli/bench.hpp"

#include <cstdio>
#include <ostream>

namespace basket::cli {

namespace {

std::string millis(std::chrono::nanoseconds ns) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", static_cast<double>(ns.count()) / 1e6);
  return buf;
}

}  // namespace

BenchEngine bench_engine(Algorithm algorithm) {
  return {std::string(algorithm_name(algorithm)),
          [algorithm](const TransactionDb& db, const MiningParams& params, PhaseStats* stats) {
            return mine(db, params, algorithm, stats);
          }};
}

BenchmarkReport run_benchmark(const TransactionDb& db, std::string dataset,
                              std::span<const double> thresholds,
                              std::span<const BenchEngine> engines, unsigned repeat) {
  if (repeat == 0) throw ConfigError("repeat must be at least 1");
  if (engines.empty()) throw ConfigError("no engines to benchmark");
  BenchmarkReport report{std::move(dataset), db.size(), db.universe_size(), repeat, {}};

  for (double min_support : thresholds) {
    const MiningParams params{min_support, 1.0, std::nullopt};
    const Count threshold = params.support_threshold(db.size());
    std::vector<FrequentItemset> reference;
    std::string reference_engine;
    std::vector<BenchRow> rows;

    for (const BenchEngine& engine : engines) {
      BenchRow row{engine.name, min_support, threshold, {}, 0};
      bool first = true;
      for (unsigned r = 0; r < repeat; ++r) {
        PhaseStats stats;
        auto result = engine.run(db, params, &stats);
        if (reference_engine.empty()) {
          reference = std::move(result);
          reference_engine = engine.name;
        } else if (result != reference) {
          throw EngineDisagreement("engines disagree at min_support " + std::to_string(min_support) +
                                   ": " + reference_engine + " found " +
                                   std::to_string(reference.size()) + " itemsets, " + engine.name +
                                   " found " + std::to_string(result.size()));
        }
        if (first || stats.total() < row.stats.total()) row.stats = stats;
        first = false;
      }
      row.frequent_itemsets = reference.size();
      rows.push_back(std::move(row));
    }
    report.rows.insert(report.rows.end(), rows.begin(), rows.end());
  }
  return report;
}

void render_bench_table(const BenchmarkReport& report, std::ostream& out) {
  out << "dataset: " << report.dataset << "\ntransactions: " << report.n_transactions
      << "  items: " << report.n_items << "  repeat: " << report.repeat
      << " (minimum total reported)\nengines agree on every threshold\n";
  out << "algorithm | min_support | threshold | build_ms | mine_ms | total_ms | peak_structures"
         " | frequent_itemsets\n";
  for (const BenchRow& row : report.rows)
    out << row.algorithm << " | " << row.min_support << " | " << row.support_threshold << " | "
        << millis(row.stats.build) << " | " << millis(row.stats.mine) << " | "
        << millis(row.stats.total()) << " | " << row.stats.peak_structures << " | "
        << row.frequent_itemsets << '\n';
}

nlohmann::ordered_json bench_to_json(const BenchmarkReport& report) {
  nlohmann::ordered_json doc;
  doc["dataset"] = report.dataset;
  doc["n_transactions"] = report.n_transactions;
  doc["n_items"] = report.n_items;
  doc["repeat"] = report.repeat;
  doc["engines_agree"] = true;
  auto rows = nlohmann::ordered_json::array();
  for (const BenchRow& row : report.rows) {
    rows.push_back({{"algorithm", row.algorithm},
                    {"min_support", row.min_support},
                    {"support_threshold", row.support_threshold},
                    {"build_ns", row.stats.build.count()},
                    {"mine_ns", row.stats.mine.count()},
                    {"total_ns", row.stats.total().count()},
                    {"peak_structures", row.stats.peak_structures},
                    {"frequent_itemsets", row.frequent_itemsets}});
  }
  doc["rows"] = std::move(rows);
  return doc;
}

}  // namespace basket::cli
