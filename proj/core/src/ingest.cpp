#include "basket/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "basket/errors.hpp"

namespace basket {

namespace {

bool valid_utf8(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size()) {
    const auto c = static_cast<unsigned char>(text[i]);
    std::size_t extra = 0;
    std::uint32_t min_code = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      extra = 1;
      min_code = 0x80;
    } else if ((c & 0xF0) == 0xE0) {
      extra = 2;
      min_code = 0x800;
    } else if ((c & 0xF8) == 0xF0) {
      extra = 3;
      min_code = 0x10000;
    } else {
      return false;
    }
    if (i + extra >= text.size()) return false;
    std::uint32_t code = c & (0x3F >> extra);
    for (std::size_t k = 1; k <= extra; ++k) {
      const auto cc = static_cast<unsigned char>(text[i + k]);
      if ((cc & 0xC0) != 0x80) return false;
      code = (code << 6) | (cc & 0x3F);
    }
    if (code < min_code || code > 0x10FFFF || (code >= 0xD800 && code <= 0xDFFF)) return false;
    i += extra + 1;
  }
  return true;
}

// Reads lines, strips a leading BOM and a trailing '\r', and rejects invalid
// UTF-8. Calls `fn(line_view, line_number)` for every non-blank, non-comment
// line.
template <typename Fn>
void for_each_record(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view view = line;
    if (number == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
    if (!valid_utf8(view)) throw IngestError("invalid UTF-8", number);
    const std::string_view body = trim(view);
    if (body.empty() || body.front() == '#') continue;
    fn(body, number);
  }
  if (in.bad()) throw IngestError("read failure");
}

std::vector<std::string_view> split_fields(std::string_view text) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    fields.push_back(trim(text.substr(start, comma == std::string_view::npos ? text.npos
                                                                               : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::size_t distinct_count(std::vector<std::string_view> labels) {
  std::sort(labels.begin(), labels.end());
  return static_cast<std::size_t>(std::unique(labels.begin(), labels.end()) - labels.begin());
}

}  // namespace

InputFormat parse_input_format(std::string_view name) {
  if (name == "basket") return InputFormat::basket;
  if (name == "tidpairs") return InputFormat::tid_pairs;
  throw ConfigError("unknown input format '" + std::string(name) + "'");
}

TransactionDb ingest_basket(std::istream& in, const IngestOptions& options) {
  TransactionDbBuilder builder;
  for_each_record(in, [&](std::string_view body, std::size_t line) {
    const auto labels = split_fields(body);
    for (std::string_view label : labels)
      if (label.empty()) throw IngestError("empty item between commas", line);
    if (distinct_count(labels) < options.min_items) return;
    builder.add(labels, line);
  });
  if (builder.size() == 0) throw EmptyInputError("input contains no transactions");
  return std::move(builder).finish();
}

TransactionDb ingest_tid_pairs(std::istream& in, const IngestOptions& options) {
  struct Row {
    std::size_t group;
    std::string label;
    std::size_t line;
  };
  std::vector<Row> rows;
  std::vector<std::vector<std::string_view>> groups;
  std::unordered_map<std::string, std::size_t> group_of;
  bool header_pending = options.skip_header;

  for_each_record(in, [&](std::string_view body, std::size_t line) {
    if (header_pending) {
      header_pending = false;
      return;
    }
    const auto fields = split_fields(body);
    if (fields.size() != 2)
      throw IngestError("expected 2 fields 'tid,item', got " + std::to_string(fields.size()), line);
    if (fields[0].empty()) throw IngestError("empty transaction id", line);
    if (fields[1].empty()) throw IngestError("empty item label", line);
    auto [it, inserted] = group_of.try_emplace(std::string(fields[0]), groups.size());
    if (inserted) groups.emplace_back();
    rows.push_back({it->second, std::string(fields[1]), line});
  });

  for (const Row& row : rows) groups[row.group].push_back(row.label);
  std::vector<bool> keep(groups.size());
  for (std::size_t g = 0; g < groups.size(); ++g)
    keep[g] = distinct_count(groups[g]) >= options.min_items;

  ItemDictionary dictionary;
  std::vector<std::vector<ItemId>> members(groups.size());
  for (const Row& row : rows)
    if (keep[row.group]) members[row.group].push_back(dictionary.intern(row.label, row.line));

  std::vector<ItemSet> transactions;
  for (std::size_t g = 0; g < groups.size(); ++g)
    if (keep[g]) transactions.emplace_back(std::move(members[g]));
  if (transactions.empty()) throw EmptyInputError("input contains no transactions");
  return TransactionDb(std::move(transactions), std::move(dictionary));
}

TransactionDb load_transactions(const std::filesystem::path& path, InputFormat format,
                                const IngestOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError("cannot open '" + path.string() + "'");
  return format == InputFormat::basket ? ingest_basket(in, options)
                                       : ingest_tid_pairs(in, options);
}

}  // namespace basket
