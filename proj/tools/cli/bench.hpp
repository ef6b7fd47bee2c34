#pragma once

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "basket/engine.hpp"
#include "basket/errors.hpp"

namespace basket::cli {

/// An engine as the harness sees it: mine and fill in phase timings.
struct BenchEngine {
  std::string name;
  std::function<std::vector<FrequentItemset>(const TransactionDb&, const MiningParams&,
                                             PhaseStats*)>
      run;
};

BenchEngine bench_engine(Algorithm algorithm);

struct BenchRow {
  std::string algorithm;
  double min_support = 0.0;
  Count support_threshold = 0;
  /// Phases of the repeat with the smallest total.
  PhaseStats stats;
  std::size_t frequent_itemsets = 0;
};

struct BenchmarkReport {
  std::string dataset;
  std::size_t n_transactions = 0;
  std::size_t n_items = 0;
  unsigned repeat = 1;
  std::vector<BenchRow> rows;
};

/// Engines returned different itemsets for the same input and threshold.
class EngineDisagreement : public Error {
 public:
  using Error::Error;
};

/// Runs every engine at every threshold `repeat` times and keeps the fastest
/// repeat. Before any timing is reported, all engines must return identical
/// results at each threshold; otherwise EngineDisagreement is thrown.
BenchmarkReport run_benchmark(const TransactionDb& db, std::string dataset,
                              std::span<const double> thresholds,
                              std::span<const BenchEngine> engines, unsigned repeat);

void render_bench_table(const BenchmarkReport& report, std::ostream& out);
nlohmann::ordered_json bench_to_json(const BenchmarkReport& report);

}  // namespace basket::cli
