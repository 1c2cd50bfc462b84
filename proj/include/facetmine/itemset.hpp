#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace facetmine {

/// The ground set [w] = {1, 2, ..., w}. Items are 1-based.
class Universe {
 public:
  Universe() = default;
  explicit Universe(int size);

  int size() const { return size_; }
  bool operator==(const Universe&) const = default;

 private:
  int size_ = 0;
};

/// Subset of a Universe, stored as a packed bit vector (one bit per item).
/// All set algebra is word-parallel; binary operations require both operands
/// to share a universe and throw std::invalid_argument otherwise.
class ItemSet {
 public:
  ItemSet() = default;
  explicit ItemSet(Universe universe);
  ItemSet(Universe universe, std::initializer_list<int> items);
  ItemSet(Universe universe, const std::vector<int>& items);

  /// The full set {1..w}.
  static ItemSet full(Universe universe);
  /// Items are bits of `mask`: item i present iff bit i-1 is set.
  /// Only valid for universes with w <= 64.
  static ItemSet from_mask(Universe universe, std::uint64_t mask);

  const Universe& universe() const { return universe_; }
  int universe_size() const { return universe_.size(); }

  bool contains(int item) const;
  void insert(int item);
  void erase(int item);

  int count() const;
  bool empty() const;
  /// Smallest member; throws std::logic_error on the empty set.
  int min_item() const;

  bool is_subset_of(const ItemSet& other) const;
  bool intersects(const ItemSet& other) const;

  ItemSet& operator&=(const ItemSet& other);
  ItemSet& operator|=(const ItemSet& other);
  ItemSet& operator-=(const ItemSet& other);
  friend ItemSet operator&(ItemSet a, const ItemSet& b) { return a &= b; }
  friend ItemSet operator|(ItemSet a, const ItemSet& b) { return a |= b; }
  friend ItemSet operator-(ItemSet a, const ItemSet& b) { return a -= b; }

  /// Complement within the universe.
  ItemSet complement() const;
  /// Copy with one extra item.
  ItemSet with(int item) const;

  /// Members in ascending order.
  std::vector<int> items() const;
  /// As a bit mask (requires w <= 64).
  std::uint64_t to_mask() const;

  bool operator==(const ItemSet& other) const;
  /// Canonical order: lexicographic on the ascending member sequence,
  /// e.g. {1} < {1,2} < {1,3} < {2}.
  bool operator<(const ItemSet& other) const;

  /// "{1,3,7}"; "{}" for the empty set.
  std::string to_string() const;

  friend int compare_lex(const ItemSet& a, const ItemSet& b);

 private:
  void check_item(int item) const;
  void check_universe(const ItemSet& other) const;
  bool has_member_above(int position) const;

  Universe universe_;
  std::vector<std::uint64_t> words_;
};

/// Three-way canonical comparison (see ItemSet::operator<).
int compare_lex(const ItemSet& a, const ItemSet& b);

}  // namespace facetmine
