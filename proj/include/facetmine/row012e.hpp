#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "facetmine/bigcount.hpp"
#include "facetmine/itemset.hpp"

namespace facetmine {

/// Thrown by the text parsers; `line` and `column` are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// One compressed row over the positions 1..w. Each position is exactly one
/// of: fixed one, fixed zero, don't-care, or part of an e-group. A row denotes
/// the family { X : ones ⊆ X, X ∩ zeros = ∅, X meets every e-group }.
///
/// Canonical form, established at construction: e-groups of size one are
/// folded into `ones`, and the remaining groups are ordered by smallest
/// member, so equal rows compare equal structurally.
class Row012e {
 public:
  Row012e(Universe universe, ItemSet ones, ItemSet zeros, ItemSet dontcares,
          std::vector<ItemSet> egroups);

  /// Parses the w-token text form (see to_text). Throws ParseError.
  static Row012e from_text(std::string_view text, Universe universe);

  const Universe& universe() const { return universe_; }
  const ItemSet& ones() const { return ones_; }
  const ItemSet& zeros() const { return zeros_; }
  const ItemSet& dontcares() const { return dontcares_; }
  const std::vector<ItemSet>& egroups() const { return egroups_; }

  /// Is X one of the itemsets this row denotes?
  bool contains(const ItemSet& x) const;

  /// Number of itemsets denoted: 2^|dontcares| * prod_g (2^|g| - 1).
  BigCount cardinality() const;

  /// w whitespace-separated tokens: `0`, `1`, `2`, and `e` for the sole
  /// e-group or `e1`, `e2`, ... when there are several.
  std::string to_text() const;

  bool operator==(const Row012e& other) const;

 private:
  Universe universe_;
  ItemSet ones_;
  ItemSet zeros_;
  ItemSet dontcares_;
  std::vector<ItemSet> egroups_;
};

}  // namespace facetmine
