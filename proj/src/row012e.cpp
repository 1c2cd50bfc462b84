#include "facetmine/row012e.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace facetmine {

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

Row012e::Row012e(Universe universe, ItemSet ones, ItemSet zeros, ItemSet dontcares,
                 std::vector<ItemSet> egroups)
    : universe_(universe),
      ones_(std::move(ones)),
      zeros_(std::move(zeros)),
      dontcares_(std::move(dontcares)),
      egroups_(std::move(egroups)) {
  const auto check = [&](const ItemSet& s) {
    if (s.universe() != universe_)
      throw std::invalid_argument("row parts belong to different universes");
  };
  check(ones_);
  check(zeros_);
  check(dontcares_);
  for (const auto& g : egroups_) {
    check(g);
    if (g.empty()) throw std::invalid_argument("empty e-group");
  }

  // Positions must partition [w]: pairwise disjoint with full union.
  ItemSet seen = ones_;
  int total = seen.count();
  const auto absorb = [&](const ItemSet& s) {
    if (seen.intersects(s)) throw std::invalid_argument("row parts overlap");
    seen |= s;
    total += s.count();
  };
  absorb(zeros_);
  absorb(dontcares_);
  for (const auto& g : egroups_) absorb(g);
  if (total != universe_.size())
    throw std::invalid_argument("row parts do not cover the universe");

  // Canonical form: size-one groups are fixed ones; groups ordered by
  // smallest member (groups are disjoint, so minima are distinct).
  std::vector<ItemSet> kept;
  kept.reserve(egroups_.size());
  for (auto& g : egroups_) {
    if (g.count() == 1)
      ones_.insert(g.min_item());
    else
      kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end(),
            [](const ItemSet& a, const ItemSet& b) { return a.min_item() < b.min_item(); });
  egroups_ = std::move(kept);
}

bool Row012e::contains(const ItemSet& x) const {
  if (x.universe() != universe_)
    throw std::invalid_argument("itemset universe does not match the row universe");
  if (!ones_.is_subset_of(x)) return false;
  if (x.intersects(zeros_)) return false;
  for (const auto& g : egroups_)
    if (!x.intersects(g)) return false;
  return true;
}

BigCount Row012e::cardinality() const {
  BigCount n = pow2(dontcares_.count());
  for (const auto& g : egroups_) n *= pow2(g.count()) - 1;
  return n;
}

std::string Row012e::to_text() const {
  std::vector<std::string> tokens(universe_.size());
  for (int item : ones_.items()) tokens[item - 1] = "1";
  for (int item : zeros_.items()) tokens[item - 1] = "0";
  for (int item : dontcares_.items()) tokens[item - 1] = "2";
  for (std::size_t k = 0; k < egroups_.size(); ++k) {
    const std::string label = egroups_.size() == 1 ? "e" : "e" + std::to_string(k + 1);
    for (int item : egroups_[k].items()) tokens[item - 1] = label;
  }
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += ' ';
    out += tokens[i];
  }
  return out;
}

Row012e Row012e::from_text(std::string_view text, Universe universe) {
  ItemSet ones(universe), zeros(universe), dontcares(universe);
  std::map<int, ItemSet> groups;

  int position = 0;  // 1-based token ordinal, doubles as the item index
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::string_view token = text.substr(start, i - start);
    ++position;
    if (position > universe.size())
      throw ParseError(1, position, "expected " + std::to_string(universe.size()) + " tokens");

    if (token == "0") {
      zeros.insert(position);
    } else if (token == "1") {
      ones.insert(position);
    } else if (token == "2") {
      dontcares.insert(position);
    } else if (token.size() >= 1 && token[0] == 'e') {
      int k = 1;
      if (token.size() > 1) {
        k = 0;
        for (char c : token.substr(1)) {
          if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError(1, position, "bad token '" + std::string(token) + "'");
          k = k * 10 + (c - '0');
          if (k > universe.size()) break;
        }
        if (k < 1) throw ParseError(1, position, "e-group labels start at e1");
      }
      auto [it, inserted] = groups.try_emplace(k, universe);
      it->second.insert(position);
    } else {
      throw ParseError(1, position, "bad token '" + std::string(token) + "'");
    }
  }
  if (position != universe.size())
    throw ParseError(1, position + 1,
                     "expected " + std::to_string(universe.size()) + " tokens, got " +
                         std::to_string(position));

  // Group labels must be contiguous from e1 (plain `e` counts as e1).
  std::vector<ItemSet> egroups;
  int expected = 1;
  for (const auto& [k, members] : groups) {
    if (k != expected)
      throw ParseError(1, universe.size(), "e-group labels must be e1..e" +
                                               std::to_string(groups.size()) + " without gaps");
    ++expected;
    egroups.push_back(members);
  }

  return Row012e(universe, std::move(ones), std::move(zeros), std::move(dontcares),
                 std::move(egroups));
}

bool Row012e::operator==(const Row012e& other) const {
  return universe_ == other.universe_ && ones_ == other.ones_ && zeros_ == other.zeros_ &&
         dontcares_ == other.dontcares_ && egroups_ == other.egroups_;
}

}  // namespace facetmine
