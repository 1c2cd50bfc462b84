#include "facetmine/fimi.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "facetmine/row012e.hpp"

namespace facetmine {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)); }

}  // namespace

TransactionDb parse_transactions(std::string_view text, int universe_override) {
  if (universe_override < 0) throw std::invalid_argument("universe override must be positive");

  std::vector<std::vector<int>> lines;
  int max_item = 0;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::vector<int> items;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_space(line[i])) ++i;
      if (i >= line.size()) break;
      const int column = static_cast<int>(i) + 1;
      std::size_t start = i;
      while (i < line.size() && !is_space(line[i])) ++i;
      const std::string_view token = line.substr(start, i - start);

      long value = 0;
      for (char c : token) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw ParseError(line_no, column, "expected a positive integer, got '" +
                                                std::string(token) + "'");
        value = value * 10 + (c - '0');
        if (value > 1 << 20)
          throw ParseError(line_no, column, "item id out of range: '" + std::string(token) + "'");
      }
      if (value < 1)
        throw ParseError(line_no, column, "item ids start at 1, got '" + std::string(token) + "'");
      items.push_back(static_cast<int>(value));
      if (value > max_item) max_item = static_cast<int>(value);
    }
    if (!items.empty()) lines.push_back(std::move(items));

    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }

  if (lines.empty()) throw ParseError(1, 1, "input contains no transactions");
  if (universe_override != 0 && universe_override < max_item)
    throw std::invalid_argument("universe override " + std::to_string(universe_override) +
                                " is smaller than item id " + std::to_string(max_item));

  const Universe universe(universe_override != 0 ? universe_override : max_item);
  std::vector<ItemSet> transactions;
  transactions.reserve(lines.size());
  for (const auto& items : lines) transactions.emplace_back(universe, items);
  return TransactionDb(universe, std::move(transactions));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace facetmine
