#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "facetmine/itemset.hpp"
#include "facetmine/transactions.hpp"

namespace facetmine {

/// Total membership predicate of a hereditary set family ("is X a face?").
/// Hereditary consistency (X below a face is itself a face) is assumed, not
/// checked. Every query goes through is_face so implementations can be
/// ranked by how many decisions a mining strategy needs; the counter is
/// atomic because batch face filtering may query concurrently.
class MembershipOracle {
 public:
  explicit MembershipOracle(Universe universe) : universe_(universe) {}
  virtual ~MembershipOracle() = default;

  const Universe& universe() const { return universe_; }

  bool is_face(const ItemSet& x) {
    calls_.fetch_add(1, std::memory_order_relaxed);
    return decide(x);
  }

  std::uint64_t calls() const { return calls_.load(std::memory_order_relaxed); }
  void reset_calls() { calls_.store(0, std::memory_order_relaxed); }

 protected:
  virtual bool decide(const ItemSet& x) const = 0;

 private:
  Universe universe_;
  std::atomic<std::uint64_t> calls_{0};
};

/// The frequent-set instance: X is a face iff its support reaches alpha.
class FrequencyOracle : public MembershipOracle {
 public:
  FrequencyOracle(const TransactionDb& db, MiningConfig cfg);

 protected:
  bool decide(const ItemSet& x) const override;

 private:
  const TransactionDb* db_;
  MiningConfig cfg_;
};

/// Arbitrary predicate, for tests and non-frequency complexes.
class PredicateOracle : public MembershipOracle {
 public:
  PredicateOracle(Universe universe, std::function<bool(const ItemSet&)> predicate)
      : MembershipOracle(universe), predicate_(std::move(predicate)) {}

 protected:
  bool decide(const ItemSet& x) const override { return predicate_(x); }

 private:
  std::function<bool(const ItemSet&)> predicate_;
};

/// The evolving bookkeeping of a mining run: the facets found so far and the
/// set-filter generators G_1..G_s. Invariant after every update: generators
/// are pairwise incomparable, and every face lies under exactly one of
/// "below some found facet" / "above some generator".
struct GeneratorState {
  std::vector<ItemSet> generators;
  std::vector<ItemSet> facets_found;
};

struct MinerOptions {
  /// When set, each facet extension tries items in a freshly shuffled order
  /// instead of ascending — the result set must not change, only the
  /// discovery sequence. Exists so order-independence is testable.
  std::optional<std::uint64_t> shuffle_seed;
  /// Min-sieve the surviving generators after every update. Turning this off
  /// yields the naive baseline used to measure what the sieve saves; it
  /// never changes the mined facets.
  bool sieve_generators = true;
};

/// Grows seed into a facet: one pass over the items in ascending order (or
/// in `item_order`), keeping every extension that stays a face. One pass
/// suffices in a hereditary family. Throws if seed is not a face.
ItemSet extend_to_facet(MembershipOracle& oracle, const ItemSet& seed);
ItemSet extend_to_facet(MembershipOracle& oracle, const ItemSet& seed,
                        const std::vector<int>& item_order);

/// One round of generator maintenance for a newly found facet: every
/// generator already meeting the facet's complement is kept as-is (its
/// expansions would all contain it), every other one is expanded by each
/// complement item; non-faces among the results are deleted first, then the
/// survivors are min-sieved (unless `sieve` is off). Appends new_facet to
/// facets_found.
GeneratorState update_generators(GeneratorState state, const ItemSet& new_facet,
                                 MembershipOracle& oracle, bool sieve = true);

/// Runs the mining loop from an existing state until no generator is a face:
/// extend the first face among the generators to a facet, update, repeat.
/// Mutates state in place and returns state.facets_found.
std::vector<ItemSet> resume_mining(GeneratorState& state, MembershipOracle& oracle,
                                   const MinerOptions& options = {});

/// All facets of the complex, in discovery order; empty when even the empty
/// set is not a face. Starts from the single generator {} — the first round
/// then finds the facet above {} and seeds the singleton generators of its
/// complement, exactly the hand-run opening move.
std::vector<ItemSet> find_all_facets(MembershipOracle& oracle, const MinerOptions& options = {});

/// Warm start: reconstructs the generator state equivalent to having already
/// found known_facets, as the minimal transversals of their complements (a
/// face escapes every known facet iff it meets every complement). Facets
/// must be pairwise incomparable. A facet equal to the whole universe makes
/// the state final (no generators).
GeneratorState seed_from_facets(const std::vector<ItemSet>& known_facets, Universe universe);

}  // namespace facetmine
