#include "hoinfo/samples.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>

namespace hoinfo {

namespace {

std::optional<long long> as_integer(std::string_view s) {
  long long value = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) return std::nullopt;
  return value;
}

std::vector<std::string> sorted_alphabet(const std::vector<SampleRow>& rows, std::size_t column) {
  std::vector<std::string> symbols;
  symbols.reserve(rows.size());
  for (const auto& row : rows) symbols.push_back(row[column]);
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());

  const bool numeric =
      std::all_of(symbols.begin(), symbols.end(), [](const std::string& s) { return as_integer(s).has_value(); });
  if (numeric) {
    std::stable_sort(symbols.begin(), symbols.end(), [](const std::string& a, const std::string& b) {
      return *as_integer(a) < *as_integer(b);
    });
  }
  return symbols;
}

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field.push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
      was_quoted = true;
    } else if (c == ',') {
      fields.push_back(was_quoted ? field : std::string(trim(field)));
      field.clear();
      was_quoted = false;
    } else {
      field.push_back(c);
    }
  }
  if (quoted) throw Error(ErrorCode::ParseError, "unterminated quoted field");
  fields.push_back(was_quoted ? field : std::string(trim(field)));
  return fields;
}

}  // namespace

SampleEstimate estimate_from_samples(const std::vector<SampleRow>& rows, const EstimatorConfig& config) {
  if (rows.empty()) throw Error(ErrorCode::EmptyInput, "no observations");
  const std::size_t n = rows.front().size();
  if (n == 0) throw Error(ErrorCode::EmptyInput, "observations have no variables");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != n) {
      throw Error(ErrorCode::RaggedRows, "row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                                             " fields, expected " + std::to_string(n));
    }
  }

  std::vector<std::vector<std::string>> alphabets;
  std::vector<std::map<std::string, Symbol>> index_of(n);
  std::vector<Symbol> cardinalities;
  for (std::size_t v = 0; v < n; ++v) {
    alphabets.push_back(sorted_alphabet(rows, v));
    for (std::size_t s = 0; s < alphabets[v].size(); ++s) index_of[v][alphabets[v][s]] = static_cast<Symbol>(s);
    cardinalities.push_back(static_cast<Symbol>(alphabets[v].size()));
  }

  std::map<State, std::size_t> counts;
  State state(n);
  for (const auto& row : rows) {
    for (std::size_t v = 0; v < n; ++v) state[v] = index_of[v].at(row[v]);
    ++counts[state];
  }

  const double total = static_cast<double>(rows.size());
  std::vector<Entry> entries;
  entries.reserve(counts.size());
  for (const auto& [s, c] : counts) entries.push_back({s, static_cast<double>(c) / total});

  return {build_distribution(std::move(cardinalities), entries, config), std::move(alphabets)};
}

SampleEstimate estimate_from_samples(const std::vector<std::vector<long long>>& rows, const EstimatorConfig& config) {
  std::vector<SampleRow> text;
  text.reserve(rows.size());
  for (const auto& row : rows) {
    SampleRow r;
    r.reserve(row.size());
    for (long long v : row) r.push_back(std::to_string(v));
    text.push_back(std::move(r));
  }
  return estimate_from_samples(text, config);
}

SampleTable parse_samples_csv(std::string_view text) {
  SampleTable table;
  bool have_header = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    const std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_no;
    if (trim(line).empty()) continue;

    auto fields = split_csv_line(line);
    if (!have_header) {
      table.names = std::move(fields);
      have_header = true;
      continue;
    }
    if (fields.size() != table.names.size()) {
      throw Error(ErrorCode::RaggedRows, "line " + std::to_string(line_no) + " has " +
                                             std::to_string(fields.size()) + " fields, header has " +
                                             std::to_string(table.names.size()));
    }
    table.rows.push_back(std::move(fields));
  }
  if (table.rows.empty()) throw Error(ErrorCode::EmptyInput, "CSV contains no observations");
  return table;
}

}  // namespace hoinfo
