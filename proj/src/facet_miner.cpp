#include "facetmine/facet_miner.hpp"

#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include "facetmine/splitmix64.hpp"
#include "facetmine/vertical_layout.hpp"

namespace facetmine {

FrequencyOracle::FrequencyOracle(const TransactionDb& db, MiningConfig cfg)
    : MembershipOracle(db.universe()), db_(&db), cfg_(cfg) {}

bool FrequencyOracle::decide(const ItemSet& x) const { return is_frequent(*db_, cfg_, x); }

ItemSet extend_to_facet(MembershipOracle& oracle, const ItemSet& seed,
                        const std::vector<int>& item_order) {
  if (seed.universe() != oracle.universe())
    throw std::invalid_argument("seed outside the oracle universe");
  if (!oracle.is_face(seed)) throw std::invalid_argument("seed is not a face");
  ItemSet face = seed;
  for (int i : item_order) {
    if (face.contains(i)) continue;
    if (oracle.is_face(face.with(i))) face.insert(i);
  }
  return face;
}

ItemSet extend_to_facet(MembershipOracle& oracle, const ItemSet& seed) {
  std::vector<int> ascending(oracle.universe().size());
  std::iota(ascending.begin(), ascending.end(), 1);
  return extend_to_facet(oracle, seed, ascending);
}

GeneratorState update_generators(GeneratorState state, const ItemSet& new_facet,
                                 MembershipOracle& oracle, bool sieve) {
  const ItemSet complement = new_facet.complement();

  // Expand into the H-list, deduplicated but in first-appearance order.
  std::vector<ItemSet> expanded;
  std::set<ItemSet> seen;
  const auto push = [&](ItemSet h) {
    if (seen.insert(h).second) expanded.push_back(std::move(h));
  };
  for (const auto& g : state.generators) {
    if (g.intersects(complement)) {
      push(g);
    } else {
      for (int x : complement.items()) push(g.with(x));
    }
  }

  // Non-faces go first — no superset of a non-face can come back later.
  std::vector<ItemSet> faces;
  for (auto& h : expanded)
    if (oracle.is_face(h)) faces.push_back(std::move(h));

  state.generators.clear();
  if (!faces.empty()) {
    if (sieve) {
      for (int j : min_sieve(faces, oracle.universe()))
        state.generators.push_back(faces[j - 1]);
    } else {
      state.generators = std::move(faces);
    }
  }
  state.facets_found.push_back(new_facet);
  return state;
}

std::vector<ItemSet> resume_mining(GeneratorState& state, MembershipOracle& oracle,
                                   const MinerOptions& options) {
  std::optional<SplitMix64> rng;
  if (options.shuffle_seed) rng.emplace(*options.shuffle_seed);

  const auto extension_order = [&] {
    std::vector<int> order(oracle.universe().size());
    std::iota(order.begin(), order.end(), 1);
    if (rng)
      for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[rng->next_below(i)]);
    return order;
  };

  while (true) {
    const ItemSet* seed = nullptr;
    for (const auto& g : state.generators) {
      if (oracle.is_face(g)) {
        seed = &g;
        break;
      }
    }
    if (seed == nullptr) break;  // no generator is a face: every facet is found
    const ItemSet facet = extend_to_facet(oracle, *seed, extension_order());
    state = update_generators(std::move(state), facet, oracle, options.sieve_generators);
  }
  return state.facets_found;
}

std::vector<ItemSet> find_all_facets(MembershipOracle& oracle, const MinerOptions& options) {
  GeneratorState state;
  state.generators.push_back(ItemSet(oracle.universe()));
  return resume_mining(state, oracle, options);
}

GeneratorState seed_from_facets(const std::vector<ItemSet>& known_facets, Universe universe) {
  std::vector<ItemSet> complements;
  complements.reserve(known_facets.size());
  for (std::size_t a = 0; a < known_facets.size(); ++a) {
    const ItemSet& facet = known_facets[a];
    if (facet.universe() != universe)
      throw std::invalid_argument("facet outside the given universe");
    for (std::size_t b = 0; b < a; ++b)
      if (facet.is_subset_of(known_facets[b]) || known_facets[b].is_subset_of(facet))
        throw std::invalid_argument("known facets must be pairwise incomparable");
    complements.push_back(facet.complement());
  }

  GeneratorState state;
  state.facets_found = known_facets;
  // A full-universe facet means the complex is the whole powerset: done.
  for (const auto& c : complements)
    if (c.empty()) return state;
  state.generators = minimal_transversals(Hypergraph(universe, std::move(complements)));
  return state;
}

}  // namespace facetmine
