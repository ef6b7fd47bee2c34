#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "basket/engine.hpp"
#include "basket/rules.hpp"

namespace basket::cli {

enum class OutputFormat { table, csv, json };

OutputFormat parse_output_format(std::string_view name);

/// Everything `mine` prints.
struct MineReport {
  const TransactionDb* db = nullptr;
  RuleSet rules;
  std::vector<FrequentItemset> itemsets;
  bool show_itemsets = false;
  Algorithm algorithm = Algorithm::fpgrowth;
  Count support_threshold = 0;
  RuleOptions options;
};

inline constexpr std::string_view kRuleTableHeader =
    "People who bought this item | Also bought the following items | Support | Confidence";

/// Labels of `items` in id order joined by ", ".
std::string join_labels(const TransactionDb& db, const ItemSet& items);

void render_table(const MineReport& report, std::ostream& out);
void render_csv(const MineReport& report, std::ostream& out);
nlohmann::ordered_json to_json(const MineReport& report);
void render(const MineReport& report, OutputFormat format, std::ostream& out);

}  // namespace basket::cli
