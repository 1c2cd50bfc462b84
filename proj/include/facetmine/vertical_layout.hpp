#pragma once

#include <vector>

#include "facetmine/itemset.hpp"
#include "facetmine/transactions.hpp"

namespace facetmine {

/// Column view of a set family X_1..X_n: for every item i the set of member
/// indices whose set misses i. Member indices are 1-based and live in their
/// own universe [n], so index sets reuse the ItemSet machinery.
struct ZerosIndex {
  Universe universe;            // item space [w]
  Universe members;             // member-index space [n]
  std::vector<ItemSet> zeros;   // zeros[i-1] = { j : i not in X_j }, over [n]
};

/// Mutable bookkeeping of a sieve run. found is a subset of candidates
/// throughout; the run is complete exactly when the two have equal size.
struct SieveState {
  ItemSet candidates;                          // over [n]
  std::vector<int> found;                      // member indices, discovery order
  std::vector<std::vector<int>> card_buckets;  // bucket c = indices of size-c members
};

ZerosIndex build_zeros_index(const std::vector<ItemSet>& family, Universe universe);

/// { j : X_j is a subset of x }, as the intersection of zeros columns over
/// the complement of x (all member indices when x is the full set).
ItemSet subset_member_indices(const ZerosIndex& index, const ItemSet& x);

/// Indices of the inclusion-maximal members, ascending, one index per
/// distinct maximal set (the smallest). Buckets are walked from the largest
/// cardinality down; everything below a processed member leaves the
/// candidate pool without ever being compared itself.
std::vector<int> max_sieve(const std::vector<ItemSet>& family, Universe universe);

/// Dual of max_sieve: indices of the inclusion-minimal members, via a ones
/// index and superset queries, walking cardinalities from the smallest up.
std::vector<int> min_sieve(const std::vector<ItemSet>& family, Universe universe);

/// Number of transactions containing x, computed by intersecting the
/// per-item tid-sets over the members of x. support(empty) = all of them.
int support(const TransactionDb& db, const ItemSet& x);

bool is_frequent(const TransactionDb& db, const MiningConfig& cfg, const ItemSet& x);

/// Edge list over a universe; every edge must be nonempty.
class Hypergraph {
 public:
  Hypergraph(Universe universe, std::vector<ItemSet> edges);

  const Universe& universe() const { return universe_; }
  const std::vector<ItemSet>& edges() const { return edges_; }

 private:
  Universe universe_;
  std::vector<ItemSet> edges_;
};

/// All inclusion-minimal sets meeting every edge, in canonical order.
/// Incremental: extend the transversals of the first k edges by edge k+1
/// (keeping any that already meet it) and min-sieve after every step, which
/// keeps the intermediate families small. No edges -> { empty set }.
std::vector<ItemSet> minimal_transversals(const Hypergraph& h);

}  // namespace facetmine
