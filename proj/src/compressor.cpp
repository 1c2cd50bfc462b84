#include "facetmine/compressor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "facetmine/facet_miner.hpp"
#include "facetmine/vertical_layout.hpp"

namespace facetmine {

namespace {

bool pairwise_disjoint(const std::vector<ItemSet>& sets) {
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = a + 1; b < sets.size(); ++b)
      if (sets[a].intersects(sets[b])) return false;
  return true;
}

std::vector<ItemSet> min_sieved(std::vector<ItemSet> sets, const Universe& universe) {
  if (sets.size() <= 1) return sets;
  std::vector<ItemSet> kept;
  for (int j : min_sieve(sets, universe)) kept.push_back(std::move(sets[j - 1]));
  return kept;
}

/// Emits the rows for one facet. `ones`/`zeros` are the branch decisions so
/// far, `free` the undecided positions of the facet, `constraints` the
/// still-unsatisfied hitting requirements (min-sieved, subsets of `free`).
/// `base_zeros` is the facet's fixed complement.
void split_rows(const Universe& universe, const ItemSet& base_zeros, const ItemSet& ones,
                const ItemSet& zeros, const ItemSet& free, std::vector<ItemSet> constraints,
                std::vector<Row012e>& out) {
  if (pairwise_disjoint(constraints)) {
    ItemSet dontcares = free;
    for (const auto& c : constraints) dontcares -= c;
    out.emplace_back(universe, ones, base_zeros | zeros, dontcares, std::move(constraints));
    return;
  }

  // Pivot: the item shared by the most constraints (there is one in at least
  // two, or they would be disjoint); ties go to the smallest item.
  std::map<int, int> occurrences;
  for (const auto& c : constraints)
    for (int i : c.items()) ++occurrences[i];
  int pivot = 0, best = 0;
  for (const auto& [item, n] : occurrences) {
    if (n > best) {
      best = n;
      pivot = item;
    }
  }

  // Branch pivot = 1: constraints containing it are satisfied and drop out;
  // the rest were incomparable and stay so.
  {
    std::vector<ItemSet> remaining;
    for (const auto& c : constraints)
      if (!c.contains(pivot)) remaining.push_back(c);
    ItemSet f = free;
    f.erase(pivot);
    split_rows(universe, base_zeros, ones.with(pivot), zeros, f, std::move(remaining), out);
  }

  // Branch pivot = 0: the pivot leaves every constraint; one shrinking to
  // empty would be unsatisfiable (cannot happen after sieving, but kept as a
  // guard), and shrinking can create new containments, so re-sieve.
  {
    std::vector<ItemSet> shrunk;
    for (const auto& c : constraints) {
      ItemSet s = c;
      s.erase(pivot);
      if (s.empty()) return;
      shrunk.push_back(std::move(s));
    }
    ItemSet f = free;
    f.erase(pivot);
    ItemSet z = zeros;
    z.insert(pivot);
    split_rows(universe, base_zeros, ones, z, f, min_sieved(std::move(shrunk), universe), out);
  }
}

}  // namespace

CompressedComplex facets_to_faces(const std::vector<ItemSet>& facets, Universe universe) {
  for (std::size_t a = 0; a < facets.size(); ++a) {
    if (facets[a].universe() != universe)
      throw std::invalid_argument("facet outside the given universe");
    for (std::size_t b = 0; b < a; ++b)
      if (facets[a].is_subset_of(facets[b]) || facets[b].is_subset_of(facets[a]))
        throw std::invalid_argument("facets must be pairwise incomparable");
  }

  CompressedComplex result{universe, {}, facets};
  for (std::size_t i = 0; i < facets.size(); ++i) {
    std::vector<ItemSet> constraints;
    for (std::size_t j = 0; j < i; ++j) constraints.push_back(facets[i] - facets[j]);
    split_rows(universe, facets[i].complement(), ItemSet(universe), ItemSet(universe), facets[i],
               min_sieved(std::move(constraints), universe), result.rows);
  }
  return result;
}

std::vector<BigCount> face_count_polynomial(const Row012e& row) {
  const int w = row.universe().size();
  // p starts as x^|ones| and is multiplied by one factor per remaining part.
  std::vector<BigCount> p(w + 1, 0);
  p[row.ones().count()] = 1;

  const auto multiply = [&](const std::vector<BigCount>& factor) {
    std::vector<BigCount> product(w + 1, 0);
    for (int a = 0; a <= w; ++a) {
      if (p[a] == 0) continue;
      for (int b = 0; a + b <= w && b < static_cast<int>(factor.size()); ++b)
        if (factor[b] != 0) product[a + b] += p[a] * factor[b];
    }
    p = std::move(product);
  };
  const auto binomial_row = [](int n) {
    std::vector<BigCount> c(n + 1, 0);
    c[0] = 1;
    for (int i = 1; i <= n; ++i)
      for (int k = i; k >= 1; --k) c[k] += c[k - 1];
    return c;
  };

  if (row.dontcares().count() > 0) multiply(binomial_row(row.dontcares().count()));
  for (const auto& g : row.egroups()) {
    auto factor = binomial_row(g.count());
    factor[0] -= 1;  // (1+x)^|g| - 1: the all-zero assignment is forbidden
    multiply(factor);
  }
  return p;
}

BigCount count_faces_of_size(const CompressedComplex& c, int k) {
  if (k < 0 || k > c.universe.size()) throw std::out_of_range("size outside 0..w");
  BigCount total = 0;
  for (const auto& row : c.rows) total += face_count_polynomial(row)[k];
  return total;
}

BigCount count_supersets(const Row012e& row, const ItemSet& x) {
  if (x.universe() != row.universe())
    throw std::invalid_argument("query set outside the row universe");
  if (x.intersects(row.zeros())) return 0;
  int free = (row.dontcares() - x).count();
  BigCount result = 1;
  for (const auto& g : row.egroups()) {
    if (g.intersects(x))
      free += (g - x).count();  // already satisfied: the rest of the group is free
    else
      result *= pow2(g.count()) - 1;
  }
  return result * pow2(free);
}

BigCount count_supersets(const CompressedComplex& c, const ItemSet& x) {
  BigCount total = 0;
  for (const auto& row : c.rows) total += count_supersets(row, x);
  return total;
}

BigCount total_count(const CompressedComplex& c) {
  BigCount total = 0;
  for (const auto& row : c.rows) total += row.cardinality();
  return total;
}

CountReport make_count_report(const CompressedComplex& c) {
  CountReport report;
  report.total = 0;
  report.by_size.assign(c.universe.size() + 1, 0);
  for (const auto& row : c.rows) {
    report.per_row.push_back(row.cardinality());
    report.total += report.per_row.back();
    const auto poly = face_count_polynomial(row);
    for (int k = 0; k <= c.universe.size(); ++k) report.by_size[k] += poly[k];
  }
  return report;
}

BigCount threshold_delta(const TransactionDb& db, int alpha) {
  const auto family_size = [&](int a) {
    FrequencyOracle oracle(db, MiningConfig(a));
    return total_count(facets_to_faces(find_all_facets(oracle), db.universe()));
  };
  return family_size(alpha) - family_size(alpha + 1);
}

}  // namespace facetmine
