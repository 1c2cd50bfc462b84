#pragma once

#include <string>
#include <string_view>

#include "facetmine/transactions.hpp"

namespace facetmine {

/// Parses the flat transaction format: one transaction per nonempty line,
/// whitespace-separated positive integer item ids, duplicates within a line
/// collapsing. The universe is the largest id seen unless a larger override
/// is given (0 = none); an override smaller than some id is an error. Input
/// with no transactions at all is a ParseError. The same reader serves plain
/// set-family files (a family is a transaction list).
TransactionDb parse_transactions(std::string_view text, int universe_override = 0);

/// Whole-file read; throws std::runtime_error when the file cannot be read.
std::string read_file(const std::string& path);

}  // namespace facetmine
