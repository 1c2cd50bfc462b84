#include "facetmine/testkit.hpp"

#include <stdexcept>

#include "facetmine/splitmix64.hpp"

namespace facetmine {

namespace {

constexpr int kEnumerationLimit = 20;

void check_enumerable(const Universe& universe) {
  if (universe.size() > kEnumerationLimit)
    throw std::invalid_argument("universe too large for brute-force enumeration");
}

}  // namespace

RandomDbSpec::RandomDbSpec(std::uint64_t seed, int universe_size, int transaction_count,
                           double density)
    : seed(seed),
      universe_size(universe_size),
      transaction_count(transaction_count),
      density(density) {
  if (universe_size < 1 || universe_size > 16)
    throw std::invalid_argument("universe size must be in 1..16");
  if (transaction_count < 1 || transaction_count > 24)
    throw std::invalid_argument("transaction count must be in 1..24");
  if (!(density >= 0.0 && density <= 1.0))
    throw std::invalid_argument("density must be in [0, 1]");
}

std::vector<ItemSet> brute_force_frequent(const TransactionDb& db, int alpha) {
  check_enumerable(db.universe());
  const int w = db.universe().size();
  std::vector<ItemSet> frequent;
  for (std::uint64_t mask = 0; mask < (1ull << w); ++mask) {
    const ItemSet x = ItemSet::from_mask(db.universe(), mask);
    int hits = 0;
    for (const auto& t : db.transactions())
      if (x.is_subset_of(t)) ++hits;
    if (hits >= alpha) frequent.push_back(x);
  }
  return frequent;
}

std::vector<ItemSet> brute_force_maximal(const std::vector<ItemSet>& family) {
  std::vector<ItemSet> maximal;
  for (std::size_t a = 0; a < family.size(); ++a) {
    bool keep = true;
    for (std::size_t b = 0; b < family.size() && keep; ++b) {
      if (a == b) continue;
      if (family[a].is_subset_of(family[b]) &&
          (family[a] != family[b] || b < a))  // dominated, or a later duplicate
        keep = false;
    }
    if (keep) maximal.push_back(family[a]);
  }
  return maximal;
}

PartitionReport verify_partition(const CompressedComplex& c,
                                 const std::vector<ItemSet>& reference) {
  check_enumerable(c.universe);
  const int w = c.universe.size();
  std::vector<bool> in_reference(std::size_t(1) << w, false);
  for (const auto& x : reference) {
    if (x.universe() != c.universe)
      throw std::invalid_argument("reference member outside the compression universe");
    in_reference[x.to_mask()] = true;
  }

  PartitionReport report;
  for (std::uint64_t mask = 0; mask < (1ull << w); ++mask) {
    const ItemSet x = ItemSet::from_mask(c.universe, mask);
    int matches = 0;
    for (const auto& row : c.rows)
      if (row.contains(x)) ++matches;
    const int expected = in_reference[mask] ? 1 : 0;
    if (matches != expected) {
      report.ok = false;
      report.violation = x;
      report.reason = x.to_string() + " matches " + std::to_string(matches) +
                      (in_reference[mask] ? " rows, expected exactly 1 (reference member)"
                                          : " rows, expected none (not in reference)");
      return report;
    }
  }
  return report;
}

TransactionDb random_database(const RandomDbSpec& spec) {
  SplitMix64 rng(spec.seed);
  const Universe universe(spec.universe_size);
  std::vector<ItemSet> transactions;
  transactions.reserve(spec.transaction_count);
  for (int j = 0; j < spec.transaction_count; ++j) {
    ItemSet t(universe);
    for (int i = 1; i <= spec.universe_size; ++i)
      if (rng.next_unit() < spec.density) t.insert(i);
    transactions.push_back(std::move(t));
  }
  return TransactionDb(universe, std::move(transactions));
}

}  // namespace facetmine
