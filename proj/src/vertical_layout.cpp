#include "facetmine/vertical_layout.hpp"

#include <algorithm>
#include <stdexcept>

namespace facetmine {

namespace {

void check_family(const std::vector<ItemSet>& family, const Universe& universe) {
  if (family.empty()) throw std::invalid_argument("family must be nonempty");
  for (const auto& x : family)
    if (x.universe() != universe)
      throw std::invalid_argument("family member outside the given universe");
}

/// Shared core of both sieves. `column(i)` is the index column for item i and
/// `related(j)` the members that cannot be extreme once j is (subsets for the
/// max sieve, supersets for the min sieve); `descending` picks the bucket
/// walk direction.
template <typename RelatedFn>
std::vector<int> run_sieve(const std::vector<ItemSet>& family, const Universe& universe,
                           bool descending, RelatedFn related) {
  const int n = static_cast<int>(family.size());
  SieveState state;
  state.candidates = ItemSet::full(Universe(n));
  state.card_buckets.assign(universe.size() + 1, {});
  for (int j = 1; j <= n; ++j) state.card_buckets[family[j - 1].count()].push_back(j);

  const auto process_bucket = [&](const std::vector<int>& bucket) {
    for (int j : bucket) {
      if (!state.candidates.contains(j)) continue;  // dominated (or duplicate): skip
      ItemSet hits = related(j);
      hits.erase(j);
      state.candidates -= hits;
      state.found.push_back(j);
      if (static_cast<int>(state.found.size()) == state.candidates.count()) return true;
    }
    return false;
  };

  bool done = false;
  if (descending) {
    for (int c = universe.size(); c >= 0 && !done; --c) done = process_bucket(state.card_buckets[c]);
  } else {
    for (int c = 0; c <= universe.size() && !done; ++c) done = process_bucket(state.card_buckets[c]);
  }

  std::sort(state.found.begin(), state.found.end());
  return state.found;
}

}  // namespace

ZerosIndex build_zeros_index(const std::vector<ItemSet>& family, Universe universe) {
  check_family(family, universe);
  const int n = static_cast<int>(family.size());
  ZerosIndex index{universe, Universe(n), {}};
  index.zeros.assign(universe.size(), ItemSet(index.members));
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= universe.size(); ++i)
      if (!family[j - 1].contains(i)) index.zeros[i - 1].insert(j);
  return index;
}

ItemSet subset_member_indices(const ZerosIndex& index, const ItemSet& x) {
  if (x.universe() != index.universe)
    throw std::invalid_argument("query set outside the indexed universe");
  ItemSet result = ItemSet::full(index.members);
  for (int i : x.complement().items()) result &= index.zeros[i - 1];
  return result;
}

std::vector<int> max_sieve(const std::vector<ItemSet>& family, Universe universe) {
  check_family(family, universe);
  const ZerosIndex index = build_zeros_index(family, universe);
  return run_sieve(family, universe, /*descending=*/true,
                   [&](int j) { return subset_member_indices(index, family[j - 1]); });
}

std::vector<int> min_sieve(const std::vector<ItemSet>& family, Universe universe) {
  check_family(family, universe);
  const int n = static_cast<int>(family.size());
  const Universe members(n);
  // Ones index: ones[i-1] = { j : i in X_j }.
  std::vector<ItemSet> ones(universe.size(), ItemSet(members));
  for (int j = 1; j <= n; ++j)
    for (int i : family[j - 1].items()) ones[i - 1].insert(j);
  const auto superset_indices = [&](int j) {
    ItemSet result = ItemSet::full(members);
    for (int i : family[j - 1].items()) result &= ones[i - 1];
    return result;
  };
  return run_sieve(family, universe, /*descending=*/false, superset_indices);
}

int support(const TransactionDb& db, const ItemSet& x) {
  if (x.universe() != db.universe())
    throw std::invalid_argument("query set outside the database universe");
  if (x.empty()) return db.transaction_count();
  const auto items = x.items();
  ItemSet tids = db.transactions_with(items.front());
  for (std::size_t k = 1; k < items.size() && !tids.empty(); ++k)
    tids &= db.transactions_with(items[k]);
  return tids.count();
}

bool is_frequent(const TransactionDb& db, const MiningConfig& cfg, const ItemSet& x) {
  return support(db, x) >= cfg.alpha;
}

Hypergraph::Hypergraph(Universe universe, std::vector<ItemSet> edges)
    : universe_(universe), edges_(std::move(edges)) {
  for (const auto& e : edges_) {
    if (e.universe() != universe_)
      throw std::invalid_argument("edge outside the hypergraph universe");
    if (e.empty()) throw std::invalid_argument("hypergraph edges must be nonempty");
  }
}

std::vector<ItemSet> minimal_transversals(const Hypergraph& h) {
  std::vector<ItemSet> current{ItemSet(h.universe())};
  for (const auto& edge : h.edges()) {
    std::vector<ItemSet> extended;
    for (const auto& t : current) {
      if (t.intersects(edge)) {
        extended.push_back(t);  // already meets the new edge; extending would only grow it
      } else {
        for (int x : edge.items()) extended.push_back(t.with(x));
      }
    }
    std::vector<ItemSet> next;
    for (int j : min_sieve(extended, h.universe())) next.push_back(extended[j - 1]);
    current = std::move(next);
  }
  std::sort(current.begin(), current.end());
  return current;
}

}  // namespace facetmine
