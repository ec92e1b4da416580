#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gwp {

using Index = std::size_t;

/// Subset of a poset's index set, as a bitmask. Posets are limited to 64
/// elements, far beyond anything enumerable.
class IndexSet {
public:
  static constexpr std::size_t kMaxSize = 64;

  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}

  static IndexSet of(std::initializer_list<Index> members);
  static IndexSet range(std::size_t n);

  bool contains(Index i) const { return (bits_ >> i) & 1U; }
  void insert(Index i) { bits_ |= std::uint64_t{1} << i; }
  void erase(Index i) { bits_ &= ~(std::uint64_t{1} << i); }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const { return bits_ == 0; }
  std::uint64_t bits() const { return bits_; }

  bool is_subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }
  IndexSet operator|(IndexSet o) const { return IndexSet{bits_ | o.bits_}; }
  IndexSet operator&(IndexSet o) const { return IndexSet{bits_ & o.bits_}; }
  IndexSet without(Index i) const { IndexSet r = *this; r.erase(i); return r; }

  /// Members in increasing index order.
  std::vector<Index> members() const;

  friend bool operator==(IndexSet, IndexSet) = default;

private:
  std::uint64_t bits_ = 0;
};

enum class SmallShape { Chain, Antichain, Triangle, Pyramid, Wrdi, NotSmall };

std::string_view to_string(SmallShape shape);

/// Result of classifying a poset with two or three elements. `roles` maps the
/// role names "i", "j", "k" of the canonical representative to indices:
///   Chain     i < j (< k)
///   Antichain i, j (, k) pairwise incomparable
///   Triangle  i < j, i < k, j incomparable to k
///   Pyramid   i < k, j < k, i incomparable to j
///   Wrdi      i < k, j incomparable to both
struct SmallClassification {
  SmallShape shape = SmallShape::NotSmall;
  std::map<std::string, Index> roles;
};

/// Finite strict partial order over string labels. Indices follow the
/// lexicographic order of the labels and are used for all downstream
/// iteration. Immutable after construction.
class Poset {
public:
  Poset() = default;

  /// Builds the order from covering pairs (lower, upper) and takes the
  /// transitive closure. Throws InputError on duplicate or unknown labels
  /// and on cycles.
  static Poset from_covers(std::vector<std::string> labels,
                           const std::vector<std::pair<std::string, std::string>>& covers);

  static Poset chain(const std::vector<std::string>& bottom_to_top);
  static Poset antichain(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Index i) const { return labels_.at(i); }
  std::optional<Index> find(std::string_view label) const;
  /// Throws InputError for unknown labels.
  Index index_of(std::string_view label) const;

  bool less(Index a, Index b) const { return above_.at(a).contains(b); }
  IndexSet all() const { return IndexSet::range(size()); }

  /// A(i): every element strictly above i.
  IndexSet up_set(Index i) const;
  IndexSet down_set(Index i) const;
  bool is_ancestral(IndexSet s) const;
  std::vector<Index> minimal_elements() const;
  std::vector<Index> maximal_elements() const;
  /// Throws InputError when a == b.
  bool incomparable(Index a, Index b) const;
  bool is_chain() const;
  bool is_antichain() const;

  /// Indices of a chain from bottom to top; empty when not a chain.
  std::vector<Index> chain_order() const;

  /// Induced order on a subset; indices are renumbered in label order.
  Poset induced(IndexSet subset) const;

  /// All pairs (a, b) with a < b.
  std::vector<std::pair<Index, Index>> relations() const;
  /// Hasse diagram edges (a, b) with a covered by b.
  std::vector<std::pair<Index, Index>> covers() const;

  SmallClassification classify_small() const;

  friend bool operator==(const Poset&, const Poset&) = default;

private:
  std::vector<std::string> labels_;
  std::vector<IndexSet> above_; // above_[i] = A(i)
};

} // namespace gwp
