#include "cli/render.hpp"

#include <ostream>

#include "basket/errors.hpp"

namespace basket::cli {

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

nlohmann::ordered_json fraction_json(const Fraction& f) {
  return {{"num", f.num}, {"den", f.den}, {"value", f.value()}, {"percent", f.percent()}};
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "table") return OutputFormat::table;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw ConfigError("unknown output format '" + std::string(name) + "'");
}

std::string join_labels(const TransactionDb& db, const ItemSet& items) {
  std::string out;
  for (ItemId id : items) {
    if (!out.empty()) out += ", ";
    out += db.dictionary().label(id);
  }
  return out;
}

void render_table(const MineReport& report, std::ostream& out) {
  const TransactionDb& db = *report.db;
  if (report.show_itemsets) {
    out << "Frequent itemsets (support count >= " << report.support_threshold << " of "
        << db.size() << " transactions)\n";
    out << "Itemset | Count | Support\n";
    for (const FrequentItemset& f : report.itemsets)
      out << join_labels(db, f.itemset) << " | " << f.count << " | "
          << Fraction{f.count, db.size()}.percent_string() << '\n';
    out << '\n';
  }
  out << kRuleTableHeader << '\n';
  for (const AssociationRule& r : report.rules.rules)
    out << join_labels(db, r.antecedent) << " | " << join_labels(db, r.consequent) << " | "
        << r.support.percent_string() << " | " << r.confidence.percent_string() << '\n';
}

void render_csv(const MineReport& report, std::ostream& out) {
  const TransactionDb& db = *report.db;
  if (report.show_itemsets) {
    out << "itemset,count,support_num,support_den\n";
    for (const FrequentItemset& f : report.itemsets)
      out << csv_field(join_labels(db, f.itemset)) << ',' << f.count << ',' << f.count << ','
          << db.size() << '\n';
    out << '\n';
  }
  out << "antecedent,consequent,support_num,support_den,support_percent,"
         "confidence_num,confidence_den,confidence_percent\n";
  for (const AssociationRule& r : report.rules.rules)
    out << csv_field(join_labels(db, r.antecedent)) << ','
        << csv_field(join_labels(db, r.consequent)) << ',' << r.support.num << ','
        << r.support.den << ',' << r.support.percent() << ',' << r.confidence.num << ','
        << r.confidence.den << ',' << r.confidence.percent() << '\n';
}

nlohmann::ordered_json to_json(const MineReport& report) {
  const TransactionDb& db = *report.db;
  const MiningParams& params = report.rules.params;
  nlohmann::ordered_json doc;
  doc["n_transactions"] = db.size();
  doc["n_items"] = db.universe_size();
  auto& p = doc["params"];
  p["algorithm"] = std::string(algorithm_name(report.algorithm));
  p["min_support"] = params.min_support;
  p["min_confidence"] = params.min_confidence;
  p["support_threshold"] = report.support_threshold;
  p["max_itemset_size"] = params.max_itemset_size ? nlohmann::ordered_json(*params.max_itemset_size)
                                                  : nlohmann::ordered_json(nullptr);
  p["max_antecedent"] = report.options.max_antecedent
                            ? nlohmann::ordered_json(*report.options.max_antecedent)
                            : nlohmann::ordered_json(nullptr);
  auto rules = nlohmann::ordered_json::array();
  for (const AssociationRule& r : report.rules.rules) {
    nlohmann::ordered_json rule;
    rule["antecedent"] = db.labels_of(r.antecedent);
    rule["consequent"] = db.labels_of(r.consequent);
    rule["union_count"] = r.union_count;
    rule["antecedent_count"] = r.antecedent_count;
    rule["support"] = fraction_json(r.support);
    rule["confidence"] = fraction_json(r.confidence);
    rules.push_back(std::move(rule));
  }
  doc["rules"] = std::move(rules);
  if (report.show_itemsets) {
    auto sets = nlohmann::ordered_json::array();
    for (const FrequentItemset& f : report.itemsets)
      sets.push_back({{"items", db.labels_of(f.itemset)}, {"count", f.count}});
    doc["itemsets"] = std::move(sets);
  }
  return doc;
}

void render(const MineReport& report, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::table: render_table(report, out); break;
    case OutputFormat::csv: render_csv(report, out); break;
    case OutputFormat::json: out << to_json(report).dump(2) << '\n'; break;
  }
}

}  // namespace basket::cli
