#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "facetmine/fimi.hpp"
#include "facetmine/itemset.hpp"
#include "facetmine/splitmix64.hpp"
#include "facetmine/transactions.hpp"

namespace testsupport {

inline std::string data_path(const std::string& name) {
  return std::string(FACETMINE_DATA_DIR) + "/" + name;
}

inline facetmine::TransactionDb load_fixture(const std::string& name) {
  return facetmine::parse_transactions(facetmine::read_file(data_path(name)));
}

/// Canonical sort, for order-insensitive family comparison.
inline std::vector<facetmine::ItemSet> canon(std::vector<facetmine::ItemSet> family) {
  std::sort(family.begin(), family.end());
  return family;
}

inline std::vector<facetmine::ItemSet> family_of(const facetmine::Universe& universe,
                                                 const std::vector<std::vector<int>>& lists) {
  std::vector<facetmine::ItemSet> family;
  family.reserve(lists.size());
  for (const auto& items : lists) family.emplace_back(universe, items);
  return family;
}

/// Random subset of [w]: each item kept with probability `density`.
inline facetmine::ItemSet random_set(facetmine::SplitMix64& rng,
                                     const facetmine::Universe& universe, double density) {
  facetmine::ItemSet x(universe);
  for (int i = 1; i <= universe.size(); ++i)
    if (rng.next_unit() < density) x.insert(i);
  return x;
}

}  // namespace testsupport
