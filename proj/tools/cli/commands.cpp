#include "cli/commands.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "basket/errors.hpp"
#include "basket/generator.hpp"
#include "basket/ingest.hpp"
#include "cli/bench.hpp"
#include "cli/render.hpp"

namespace basket::cli {

namespace {

struct InputFlags {
  std::string path;
  std::string format = "basket";
  bool skip_header = false;
  std::optional<std::size_t> min_items;

  TransactionDb load() const {
    IngestOptions options;
    options.skip_header = skip_header;
    if (min_items) options.min_items = *min_items;
    return load_transactions(path, parse_input_format(format), options);
  }
};

struct GeneratorFlags {
  GeneratorConfig config;
  std::vector<std::string> patterns;

  GeneratorConfig resolve() const {
    GeneratorConfig out = config;
    for (const std::string& p : patterns) out.patterns.push_back(parse_pattern(p));
    out.validate();
    return out;
  }

  std::string describe() const {
    std::ostringstream s;
    s << "synthetic(transactions=" << config.num_transactions << ", items=" << config.universe_size
      << ", basket=" << config.basket_min << ".." << config.basket_max
      << ", patterns=" << patterns.size() << ", seed=" << config.seed << ")";
    return s.str();
  }
};

struct MineFlags {
  InputFlags input;
  double min_support = 0.0;
  double min_confidence = 0.0;
  std::string algorithm = "fpgrowth";
  std::string output = "table";
  std::optional<std::size_t> max_antecedent;
  std::optional<std::size_t> max_itemset_size;
  bool show_itemsets = false;
};

struct BenchFlags {
  InputFlags input;
  GeneratorFlags generator;
  std::string thresholds = "0.02,0.05,0.1,0.2";
  std::string algorithms = "apriori,fpgrowth";
  unsigned repeat = 3;
  std::string output = "table";
};

void add_input_flags(CLI::App& cmd, InputFlags& f, bool required) {
  auto* input = cmd.add_option("--input", f.path, "Transaction file");
  if (required) input->required();
  cmd.add_option("--format", f.format, "Input format")
      ->check(CLI::IsMember({"basket", "tidpairs"}))
      ->capture_default_str();
  cmd.add_flag("--skip-header", f.skip_header, "Skip the first line of tid-pair input");
  cmd.add_option("--min-items", f.min_items, "Drop transactions with fewer distinct items");
}

void add_generator_flags(CLI::App& cmd, GeneratorFlags& f) {
  cmd.add_option("--transactions", f.config.num_transactions, "Number of transactions")
      ->capture_default_str();
  cmd.add_option("--items", f.config.universe_size, "Universe size")->capture_default_str();
  cmd.add_option("--basket-min", f.config.basket_min, "Smallest basket")->capture_default_str();
  cmd.add_option("--basket-max", f.config.basket_max, "Largest basket")->capture_default_str();
  cmd.add_option("--pattern", f.patterns, "Embedded pattern 'a,b:0.5' (repeatable)");
  cmd.add_option("--seed", f.config.seed, "Random seed")->capture_default_str();
}

template <typename T, typename Parse>
std::vector<T> parse_list(const std::string& text, Parse parse) {
  std::vector<T> out;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view piece = trim(rest.substr(0, comma));
    if (piece.empty()) throw ConfigError("empty entry in list '" + text + "'");
    out.push_back(parse(piece));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

double parse_fraction(std::string_view text) {
  const std::string s(text);
  try {
    std::size_t used = 0;
    const double value = std::stod(s, &used);
    if (used == s.size() && value > 0.0 && value <= 1.0) return value;
  } catch (const std::exception&) {
  }
  throw ConfigError("threshold '" + s + "' is not a fraction in (0, 1]");
}

int cmd_mine(const MineFlags& f, std::ostream& out) {
  const MiningParams params{f.min_support, f.min_confidence, f.max_itemset_size};
  params.validate();
  if (f.max_antecedent && *f.max_antecedent == 0)
    throw ConfigError("--max-antecedent must be positive");
  const Algorithm algorithm = parse_algorithm(f.algorithm);
  const OutputFormat format = parse_output_format(f.output);

  const TransactionDb db = f.input.load();
  MineReport report;
  report.db = &db;
  report.algorithm = algorithm;
  report.show_itemsets = f.show_itemsets;
  report.support_threshold = params.support_threshold(db.size());
  report.options.max_antecedent = f.max_antecedent;
  report.itemsets = mine(db, params, algorithm);
  report.rules = generate_rules(report.itemsets, db, params, report.options);
  render(report, format, out);
  return kOk;
}

int cmd_gen(const GeneratorFlags& f, const std::string& out_path, std::ostream& out,
            std::ostream& err) {
  const GeneratorConfig config = f.resolve();
  const TransactionDb db = generate_db(config);
  std::ostream* summary = &out;
  if (out_path.empty()) {
    db.write_basket(out);
    summary = &err;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw ConfigError("cannot write '" + out_path + "'");
    db.write_basket(file);
    if (!file.flush()) throw ConfigError("failed writing '" + out_path + "'");
  }
  std::ostringstream checksum;
  checksum << std::hex << basket_checksum(db);
  *summary << "generated " << db.size() << " transactions over " << db.universe_size()
           << " items (universe " << config.universe_size << ", seed " << config.seed
           << ", checksum " << checksum.str() << ")";
  if (!out_path.empty()) *summary << " -> " << out_path;
  *summary << '\n';
  return kOk;
}

int cmd_bench(const BenchFlags& f, std::ostream& out) {
  const auto thresholds = parse_list<double>(f.thresholds, parse_fraction);
  const auto algorithms = parse_list<Algorithm>(f.algorithms, parse_algorithm);
  const bool json = parse_output_format(f.output) == OutputFormat::json;
  if (f.output == "csv") throw ConfigError("bench supports table or json output");

  std::optional<TransactionDb> db;
  std::string dataset;
  if (!f.input.path.empty()) {
    db.emplace(f.input.load());
    dataset = "file:" + f.input.path;
  } else {
    db.emplace(generate_db(f.generator.resolve()));
    dataset = f.generator.describe();
  }

  std::vector<BenchEngine> engines;
  for (Algorithm a : algorithms) engines.push_back(bench_engine(a));
  const BenchmarkReport report = run_benchmark(*db, dataset, thresholds, engines, f.repeat);
  if (json)
    out << bench_to_json(report).dump(2) << '\n';
  else
    render_bench_table(report, out);
  return kOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frequent itemset and association rule mining", "basket"};
  app.require_subcommand(1);

  MineFlags mine_flags;
  auto* mine_cmd = app.add_subcommand("mine", "Mine association rules from a transaction file");
  add_input_flags(*mine_cmd, mine_flags.input, true);
  mine_cmd->add_option("--min-support", mine_flags.min_support, "Minimum support fraction")
      ->required();
  mine_cmd->add_option("--min-confidence", mine_flags.min_confidence, "Minimum confidence fraction")
      ->required();
  mine_cmd->add_option("--algorithm", mine_flags.algorithm, "Mining engine")
      ->check(CLI::IsMember({"apriori", "fpgrowth", "bruteforce"}))
      ->capture_default_str();
  mine_cmd->add_option("--output", mine_flags.output, "Report format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  mine_cmd->add_option("--max-antecedent", mine_flags.max_antecedent, "Largest rule antecedent");
  mine_cmd->add_option("--max-itemset-size", mine_flags.max_itemset_size, "Largest itemset mined");
  mine_cmd->add_flag("--show-itemsets", mine_flags.show_itemsets, "Also list frequent itemsets");

  GeneratorFlags gen_flags;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic basket file");
  add_generator_flags(*gen_cmd, gen_flags);
  gen_cmd->add_option("--out", gen_out, "Destination file (default: standard output)");

  BenchFlags bench_flags;
  auto* bench_cmd = app.add_subcommand("bench", "Time the engines phase by phase");
  add_input_flags(*bench_cmd, bench_flags.input, false);
  add_generator_flags(*bench_cmd, bench_flags.generator);
  bench_cmd->add_option("--thresholds", bench_flags.thresholds, "Comma-separated min supports")
      ->capture_default_str();
  bench_cmd->add_option("--algorithms", bench_flags.algorithms, "Comma-separated engines")
      ->capture_default_str();
  bench_cmd->add_option("--repeat", bench_flags.repeat, "Runs per cell; the minimum is reported")
      ->capture_default_str();
  bench_cmd->add_option("--output", bench_flags.output, "Report format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();

  std::vector<const char*> argv{"basket"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*mine_cmd) return cmd_mine(mine_flags, out);
    if (*gen_cmd) return cmd_gen(gen_flags, gen_out, out, err);
    if (*bench_cmd) return cmd_bench(bench_flags, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const IngestError& e) {
    err << "error: " << e.what() << '\n';
    return kIngestError;
  } catch (const GuardError& e) {
    err << "error: " << e.what() << '\n';
    return kGuardError;
  } catch (const EngineDisagreement& e) {
    err << "error: " << e.what() << '\n';
    return kEnginesDisagree;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kUsageError;
}

}  // namespace basket::cli
