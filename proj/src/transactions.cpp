#include "facetmine/transactions.hpp"

#include <stdexcept>

namespace facetmine {

MiningConfig::MiningConfig(int alpha_in) : alpha(alpha_in) {
  if (alpha < 1) throw std::invalid_argument("support threshold must be at least 1");
}

TransactionDb::TransactionDb(Universe universe, std::vector<ItemSet> transactions)
    : universe_(universe), transactions_(std::move(transactions)) {
  for (const auto& t : transactions_)
    if (t.universe() != universe_)
      throw std::invalid_argument("transaction universe does not match the database universe");

  const Universe tid_universe(transaction_count());
  columns_.assign(universe_.size(), ItemSet(tid_universe));
  for (int j = 1; j <= transaction_count(); ++j)
    for (int item : transactions_[j - 1].items()) columns_[item - 1].insert(j);
}

const ItemSet& TransactionDb::transaction(int id) const {
  if (id < 1 || id > transaction_count())
    throw std::out_of_range("transaction id out of range");
  return transactions_[id - 1];
}

const ItemSet& TransactionDb::transactions_with(int item) const {
  if (item < 1 || item > universe_.size())
    throw std::out_of_range("item outside the database universe");
  return columns_[item - 1];
}

}  // namespace facetmine
