#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "facetmine/compressor.hpp"
#include "facetmine/itemset.hpp"
#include "facetmine/transactions.hpp"

namespace facetmine {

/// Deterministic recipe for a small random database. Bounds keep every
/// brute-force companion check affordable.
struct RandomDbSpec {
  RandomDbSpec(std::uint64_t seed, int universe_size, int transaction_count, double density);

  std::uint64_t seed;
  int universe_size;       // 1..16
  int transaction_count;   // 1..24
  double density;          // item-inclusion probability, 0..1
};

/// Outcome of verify_partition: ok, or the first itemset matched by the
/// wrong number of rows.
struct PartitionReport {
  bool ok = true;
  std::optional<ItemSet> violation;
  std::string reason;
};

/// Every frequent set by full powerset scan (per-transaction subset tests,
/// no tid-list machinery — this is the independent oracle), in ascending
/// bit-mask order. Guarded to w <= 20.
std::vector<ItemSet> brute_force_frequent(const TransactionDb& db, int alpha);

/// Inclusion-maximal members by pairwise comparison, deduplicated, keeping
/// the first occurrence of each distinct set in input order.
std::vector<ItemSet> brute_force_maximal(const std::vector<ItemSet>& family);

/// Checks the disjoint-cover contract of a compression against an explicit
/// reference family: every reference member must match exactly one row and
/// every other itemset no row. Guarded to w <= 20.
PartitionReport verify_partition(const CompressedComplex& c, const std::vector<ItemSet>& reference);

/// Seeded database: transaction by transaction, item by item (ascending), an
/// item is included when the next [0,1) draw is below density.
TransactionDb random_database(const RandomDbSpec& spec);

}  // namespace facetmine
