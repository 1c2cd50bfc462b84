#pragma once

#include <vector>

#include "facetmine/itemset.hpp"

namespace facetmine {

/// Support threshold for a mining run.
struct MiningConfig {
  explicit MiningConfig(int alpha);
  int alpha;
};

/// An ordered list of transactions over a fixed universe, together with the
/// column view: for every item, the set of transaction ids holding it.
/// Transaction ids are 1-based. Immutable after construction.
class TransactionDb {
 public:
  TransactionDb(Universe universe, std::vector<ItemSet> transactions);

  const Universe& universe() const { return universe_; }
  int transaction_count() const { return static_cast<int>(transactions_.size()); }

  const ItemSet& transaction(int id) const;
  const std::vector<ItemSet>& transactions() const { return transactions_; }

  /// Tid-set of item i: { j : i in T_j }, as an ItemSet over [m].
  const ItemSet& transactions_with(int item) const;

 private:
  Universe universe_;
  std::vector<ItemSet> transactions_;
  std::vector<ItemSet> columns_;  // indexed by item - 1, universe [m]
};

}  // namespace facetmine
