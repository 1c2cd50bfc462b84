#pragma once

#include <vector>

#include "facetmine/bigcount.hpp"
#include "facetmine/itemset.hpp"
#include "facetmine/row012e.hpp"
#include "facetmine/transactions.hpp"

namespace facetmine {

/// Disjoint row cover of the downward closure of source_facets: every subset
/// of a source facet matches exactly one row, everything else matches none.
/// Rows appear grouped by facet, in facet order.
struct CompressedComplex {
  Universe universe;
  std::vector<Row012e> rows;
  std::vector<ItemSet> source_facets;
};

/// Aggregate counts of a compressed complex. by_size has w+1 entries;
/// total = sum of by_size = sum of per_row.
struct CountReport {
  BigCount total;
  std::vector<BigCount> by_size;
  std::vector<BigCount> per_row;
};

/// Turns an ordered facet list (pairwise incomparable) into disjoint rows:
/// facet i contributes rows denoting exactly the subsets of F_i under none
/// of F_1..F_{i-1} — "contains at least one element of F_i minus F_j" for
/// every earlier j. The constraint family is min-sieved (hitting a subset
/// hits its supersets); pairwise-disjoint constraints become the e-groups of
/// a single row, overlapping ones are split recursively on a pivot item.
/// An empty facet list yields zero rows (the complex with no faces).
CompressedComplex facets_to_faces(const std::vector<ItemSet>& facets, Universe universe);

/// Coefficient k = number of size-k itemsets the row denotes: the generating
/// polynomial x^|ones| (1+x)^|dontcares| prod_g ((1+x)^|g| - 1), length w+1.
std::vector<BigCount> face_count_polynomial(const Row012e& row);

/// Number of size-k faces across the complex (0 <= k <= w).
BigCount count_faces_of_size(const CompressedComplex& c, int k);

/// Number of itemsets the row denotes that contain x: zero when x touches
/// the row's zeros; otherwise every unsatisfied e-group still needs a member
/// while don't-cares and the rest of satisfied e-groups are free.
BigCount count_supersets(const Row012e& row, const ItemSet& x);

/// Number of faces containing x, summed over rows (disjointness makes the
/// per-row counts additive).
BigCount count_supersets(const CompressedComplex& c, const ItemSet& x);

/// Total number of faces.
BigCount total_count(const CompressedComplex& c);

CountReport make_count_report(const CompressedComplex& c);

/// How many alpha-frequent sets are not (alpha+1)-frequent: the full
/// mine-and-compress pipeline runs at both thresholds and the totals are
/// subtracted.
BigCount threshold_delta(const TransactionDb& db, int alpha);

}  // namespace facetmine
