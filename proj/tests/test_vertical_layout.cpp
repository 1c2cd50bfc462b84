#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "facetmine/splitmix64.hpp"
#include "facetmine/testkit.hpp"
#include "facetmine/vertical_layout.hpp"
#include "support.hpp"

using namespace facetmine;
using testsupport::canon;
using testsupport::family_of;
using testsupport::load_fixture;

namespace {

std::vector<ItemSet> pick(const std::vector<ItemSet>& family, const std::vector<int>& indices) {
  std::vector<ItemSet> out;
  for (int j : indices) out.push_back(family[j - 1]);
  return out;
}

/// O(n^2) minimality filter, the dual of brute_force_maximal.
std::vector<ItemSet> naive_minimal(const std::vector<ItemSet>& family) {
  std::vector<ItemSet> minimal;
  for (std::size_t a = 0; a < family.size(); ++a) {
    bool keep = true;
    for (std::size_t b = 0; b < family.size() && keep; ++b) {
      if (a == b) continue;
      if (family[b].is_subset_of(family[a]) && (family[a] != family[b] || b < a)) keep = false;
    }
    if (keep) minimal.push_back(family[a]);
  }
  return minimal;
}

}  // namespace

TEST_CASE("zeros index records the missing items per member") {
  const auto db = load_fixture("table3.dat");
  const auto index = build_zeros_index(db.transactions(), db.universe());
  CHECK(index.zeros[0].items() == std::vector<int>{1, 3, 4, 5, 6, 9, 10, 11, 12, 13, 15});

  const Universe u(4);
  const auto empty_member = build_zeros_index({ItemSet(u)}, u);
  for (int i = 1; i <= 4; ++i) CHECK(empty_member.zeros[i - 1].items() == std::vector<int>{1});
  const auto full_member = build_zeros_index({ItemSet::full(u)}, u);
  for (int i = 1; i <= 4; ++i) CHECK(full_member.zeros[i - 1].empty());

  CHECK_THROWS_AS(build_zeros_index({}, u), std::invalid_argument);
  CHECK_THROWS_AS(build_zeros_index({ItemSet(Universe(5))}, u), std::invalid_argument);
}

TEST_CASE("subset queries intersect the zeros columns of the complement") {
  const auto db = load_fixture("table3.dat");
  const auto index = build_zeros_index(db.transactions(), db.universe());
  CHECK(subset_member_indices(index, db.transaction(3)).items() ==
        std::vector<int>{1, 3, 9, 11, 12, 15});
  CHECK(subset_member_indices(index, db.transaction(7)).items() ==
        std::vector<int>{1, 2, 7, 15});
  CHECK(subset_member_indices(index, ItemSet::full(db.universe())).count() == 15);
  CHECK(subset_member_indices(index, ItemSet(db.universe())).empty());  // no member is empty

  SplitMix64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const ItemSet x = testsupport::random_set(rng, db.universe(), rng.next_unit());
    std::vector<int> direct;
    for (int j = 1; j <= db.transaction_count(); ++j)
      if (db.transaction(j).is_subset_of(x)) direct.push_back(j);
    CHECK(subset_member_indices(index, x).items() == direct);
  }
}

TEST_CASE("max sieve finds the maximal members of the walkthrough family") {
  const auto db = load_fixture("table3.dat");
  CHECK(max_sieve(db.transactions(), db.universe()) == std::vector<int>{3, 5, 7, 13, 14});
}

TEST_CASE("max sieve keeps one index per distinct maximal set") {
  const Universe u(3);
  CHECK(max_sieve({ItemSet(u, {1, 3})}, u) == std::vector<int>{1});
  CHECK(max_sieve(family_of(u, {{1, 2}, {1, 2}, {1}}), u) == std::vector<int>{1});
  CHECK(max_sieve(family_of(u, {{1}, {1, 2}, {1, 2}}), u) == std::vector<int>{2});
}

TEST_CASE("min sieve on the generator-update walkthrough family") {
  const Universe u(9);
  const auto family = family_of(u, {{2, 4}, {2, 8}, {2, 9}, {4}, {4, 8}, {4, 9}, {5, 4},
                                    {5, 8}, {5, 9}, {8, 4}, {8}, {8, 9}});
  CHECK(min_sieve(family, u) == std::vector<int>{3, 4, 9, 11});
  CHECK(canon(pick(family, min_sieve(family, u))) ==
        canon(family_of(u, {{4}, {8}, {2, 9}, {5, 9}})));
}

TEST_CASE("min sieve basics") {
  const Universe u(9);
  const auto family = family_of(u, {{2, 5}, {1, 3, 6, 7}, {3, 6}, {9}});
  CHECK(min_sieve(family, u) == std::vector<int>{1, 3, 4});
  CHECK(min_sieve({ItemSet(u, {4, 5})}, u) == std::vector<int>{1});
}

TEST_CASE("sieves agree with pairwise-comparison oracles on random families") {
  SplitMix64 rng(32);
  for (int trial = 0; trial < 500; ++trial) {
    const Universe u(static_cast<int>(2 + rng.next_below(11)));
    const int n = static_cast<int>(1 + rng.next_below(30));
    std::vector<ItemSet> family;
    for (int j = 0; j < n; ++j) family.push_back(testsupport::random_set(rng, u, 0.4));

    CHECK(canon(pick(family, max_sieve(family, u))) == canon(brute_force_maximal(family)));
    CHECK(canon(pick(family, min_sieve(family, u))) == canon(naive_minimal(family)));
  }
}

TEST_CASE("support counts the covering transactions") {
  const auto table1 = load_fixture("table1.dat");
  const ItemSet f1(table1.universe(), {5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16});
  CHECK(support(table1, f1) == 2);
  CHECK(support(table1, ItemSet(table1.universe())) == 8);

  const auto table4 = load_fixture("table4.dat");
  CHECK(support(table4, ItemSet(table4.universe(), {2, 3, 9})) == 1);
}

TEST_CASE("frequency threshold") {
  const auto table4 = load_fixture("table4.dat");
  CHECK(is_frequent(table4, MiningConfig(2), ItemSet(table4.universe(), {1, 3, 6, 7, 9})));
  CHECK_FALSE(is_frequent(table4, MiningConfig(2), ItemSet(table4.universe(), {2, 3, 9})));
  CHECK_FALSE(is_frequent(table4, MiningConfig(7), ItemSet(table4.universe())));
}

TEST_CASE("support is anti-monotone and matches a row scan") {
  SplitMix64 rng(33);
  for (int trial = 0; trial < 500; ++trial) {
    const RandomDbSpec spec(900 + trial, static_cast<int>(2 + rng.next_below(11)),
                            static_cast<int>(1 + rng.next_below(16)),
                            0.2 + 0.6 * rng.next_unit());
    const auto db = random_database(spec);
    const ItemSet x = testsupport::random_set(rng, db.universe(), 0.3);
    ItemSet y = x;
    for (int i = 1; i <= db.universe().size(); ++i)
      if (rng.next_unit() < 0.2) y.insert(i);

    int scan = 0;
    for (const auto& t : db.transactions())
      if (x.is_subset_of(t)) ++scan;
    CHECK(support(db, x) == scan);
    CHECK(support(db, x) >= support(db, y));
  }
}

TEST_CASE("hypergraph rejects empty edges") {
  const Universe u(4);
  CHECK_THROWS_AS(Hypergraph(u, {ItemSet(u, {1}), ItemSet(u)}), std::invalid_argument);
}

TEST_CASE("minimal transversals of small hypergraphs") {
  const Universe u(3);
  CHECK(minimal_transversals(Hypergraph(u, family_of(u, {{1, 2}}))) ==
        family_of(u, {{1}, {2}}));
  CHECK(canon(minimal_transversals(Hypergraph(u, family_of(u, {{1, 2}, {2, 3}})))) ==
        canon(family_of(u, {{2}, {1, 3}})));
  // no edges: the empty set is the one minimal transversal
  CHECK(minimal_transversals(Hypergraph(u, {})) == std::vector<ItemSet>{ItemSet(u)});
}

TEST_CASE("transversals of four disjoint blocks pick one item per block") {
  const Universe u(16);
  std::vector<ItemSet> edges;
  for (int b = 0; b < 4; ++b)
    edges.push_back(ItemSet(u, {4 * b + 1, 4 * b + 2, 4 * b + 3, 4 * b + 4}));
  const auto transversals = minimal_transversals(Hypergraph(u, edges));
  CHECK(transversals.size() == 256);
  for (const auto& t : transversals) {
    CHECK(t.count() == 4);
    for (const auto& e : edges) CHECK((t & e).count() == 1);
  }
}

TEST_CASE("minimal transversals match brute force on random hypergraphs") {
  SplitMix64 rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    const Universe u(static_cast<int>(2 + rng.next_below(9)));  // w <= 10
    const int edge_count = static_cast<int>(1 + rng.next_below(5));
    std::vector<ItemSet> edges;
    while (static_cast<int>(edges.size()) < edge_count) {
      const ItemSet e = testsupport::random_set(rng, u, 0.4);
      if (!e.empty()) edges.push_back(e);
    }
    const Hypergraph h(u, edges);
    const auto result = minimal_transversals(h);

    // Brute force: minimal members of { X : X meets every edge }.
    std::vector<ItemSet> hitting;
    for (std::uint64_t mask = 0; mask < (1ull << u.size()); ++mask) {
      const ItemSet x = ItemSet::from_mask(u, mask);
      bool hits_all = true;
      for (const auto& e : edges)
        if (!x.intersects(e)) hits_all = false;
      if (hits_all) hitting.push_back(x);
    }
    CHECK(canon(result) == canon(naive_minimal(hitting)));

    // Structural: each output meets every edge and is minimal with that.
    for (const auto& t : result) {
      for (const auto& e : edges) CHECK(t.intersects(e));
      for (int i : t.items()) {
        ItemSet smaller = t;
        smaller.erase(i);
        bool still_hits_all = true;
        for (const auto& e : edges)
          if (!smaller.intersects(e)) still_hits_all = false;
        CHECK_FALSE(still_hits_all);
      }
    }
  }
}
