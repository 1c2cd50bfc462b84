#include "facetmine/itemset.hpp"

#include <bit>
#include <stdexcept>

namespace facetmine {

namespace {

constexpr int kWordBits = 64;

int word_count(int universe_size) { return (universe_size + kWordBits - 1) / kWordBits; }

// Mask of the valid bits in the last word.
std::uint64_t tail_mask(int universe_size) {
  const int used = universe_size % kWordBits;
  if (used == 0) return ~std::uint64_t{0};
  return (std::uint64_t{1} << used) - 1;
}

}  // namespace

Universe::Universe(int size) : size_(size) {
  if (size < 0) throw std::invalid_argument("universe size must be nonnegative");
}

ItemSet::ItemSet(Universe universe)
    : universe_(universe), words_(word_count(universe.size()), 0) {}

ItemSet::ItemSet(Universe universe, std::initializer_list<int> items) : ItemSet(universe) {
  for (int item : items) insert(item);
}

ItemSet::ItemSet(Universe universe, const std::vector<int>& items) : ItemSet(universe) {
  for (int item : items) insert(item);
}

ItemSet ItemSet::full(Universe universe) {
  ItemSet s(universe);
  if (universe.size() == 0) return s;
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.words_.back() &= tail_mask(universe.size());
  return s;
}

ItemSet ItemSet::from_mask(Universe universe, std::uint64_t mask) {
  if (universe.size() > kWordBits)
    throw std::invalid_argument("from_mask requires a universe of at most 64 items");
  ItemSet s(universe);
  if (universe.size() == 0) {
    if (mask != 0) throw std::invalid_argument("mask has bits outside the universe");
    return s;
  }
  if ((mask & ~tail_mask(universe.size())) != 0)
    throw std::invalid_argument("mask has bits outside the universe");
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

void ItemSet::check_item(int item) const {
  if (item < 1 || item > universe_.size())
    throw std::out_of_range("item " + std::to_string(item) + " outside universe [1.." +
                            std::to_string(universe_.size()) + "]");
}

void ItemSet::check_universe(const ItemSet& other) const {
  if (universe_ != other.universe_)
    throw std::invalid_argument("itemsets belong to different universes");
}

bool ItemSet::contains(int item) const {
  if (item < 1 || item > universe_.size()) return false;
  const int bit = item - 1;
  return (words_[bit / kWordBits] >> (bit % kWordBits)) & 1;
}

void ItemSet::insert(int item) {
  check_item(item);
  const int bit = item - 1;
  words_[bit / kWordBits] |= std::uint64_t{1} << (bit % kWordBits);
}

void ItemSet::erase(int item) {
  check_item(item);
  const int bit = item - 1;
  words_[bit / kWordBits] &= ~(std::uint64_t{1} << (bit % kWordBits));
}

int ItemSet::count() const {
  int n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

bool ItemSet::empty() const {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

int ItemSet::min_item() const {
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k] != 0) return static_cast<int>(k) * kWordBits + std::countr_zero(words_[k]) + 1;
  throw std::logic_error("min_item on empty set");
}

bool ItemSet::is_subset_of(const ItemSet& other) const {
  check_universe(other);
  for (std::size_t k = 0; k < words_.size(); ++k)
    if ((words_[k] & ~other.words_[k]) != 0) return false;
  return true;
}

bool ItemSet::intersects(const ItemSet& other) const {
  check_universe(other);
  for (std::size_t k = 0; k < words_.size(); ++k)
    if ((words_[k] & other.words_[k]) != 0) return true;
  return false;
}

ItemSet& ItemSet::operator&=(const ItemSet& other) {
  check_universe(other);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  return *this;
}

ItemSet& ItemSet::operator|=(const ItemSet& other) {
  check_universe(other);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
  return *this;
}

ItemSet& ItemSet::operator-=(const ItemSet& other) {
  check_universe(other);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
  return *this;
}

ItemSet ItemSet::complement() const {
  ItemSet s(universe_);
  for (std::size_t k = 0; k < words_.size(); ++k) s.words_[k] = ~words_[k];
  if (!s.words_.empty()) s.words_.back() &= tail_mask(universe_.size());
  return s;
}

ItemSet ItemSet::with(int item) const {
  ItemSet s(*this);
  s.insert(item);
  return s;
}

std::vector<int> ItemSet::items() const {
  std::vector<int> out;
  out.reserve(count());
  for (std::size_t k = 0; k < words_.size(); ++k) {
    std::uint64_t w = words_[k];
    while (w != 0) {
      out.push_back(static_cast<int>(k) * kWordBits + std::countr_zero(w) + 1);
      w &= w - 1;
    }
  }
  return out;
}

std::uint64_t ItemSet::to_mask() const {
  if (universe_.size() > kWordBits)
    throw std::invalid_argument("to_mask requires a universe of at most 64 items");
  return words_.empty() ? 0 : words_[0];
}

bool ItemSet::operator==(const ItemSet& other) const {
  return universe_ == other.universe_ && words_ == other.words_;
}

bool ItemSet::has_member_above(int position) const {
  // position is a 0-based bit index; true iff some member has bit index > position.
  const int k = position / kWordBits;
  const int b = position % kWordBits;
  if (b < kWordBits - 1 && (words_[k] >> (b + 1)) != 0) return true;
  for (std::size_t j = k + 1; j < words_.size(); ++j)
    if (words_[j] != 0) return true;
  return false;
}

int compare_lex(const ItemSet& a, const ItemSet& b) {
  if (a.universe() != b.universe())
    throw std::invalid_argument("itemsets belong to different universes");
  const int words = (a.universe_size() + 63) / 64;
  for (int k = 0; k < words; ++k) {
    const std::uint64_t wa = a.words_[k];
    const std::uint64_t wb = b.words_[k];
    if (wa == wb) continue;
    const int bit = std::countr_zero(wa ^ wb);
    const int position = k * 64 + bit;
    if ((wa >> bit) & 1) {
      // a owns the first differing item; a precedes b unless b has nothing
      // left, in which case b is a proper prefix of a.
      return b.has_member_above(position) ? -1 : 1;
    }
    return a.has_member_above(position) ? 1 : -1;
  }
  return 0;
}

bool ItemSet::operator<(const ItemSet& other) const { return compare_lex(*this, other) < 0; }

std::string ItemSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int item : items()) {
    if (!first) out += ',';
    out += std::to_string(item);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace facetmine
