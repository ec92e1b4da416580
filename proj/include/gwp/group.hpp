#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "gwp/perm_group.hpp"
#include "gwp/permutation.hpp"
#include "gwp/poset.hpp"

namespace gwp {

/// Bounds that stop enumerating operations from running unbounded.
struct DeskGuards {
  std::size_t max_delta = 5'000;  // points of the product domain
  std::size_t max_enum = 10'000;  // group elements
};

/// A point of the product domain, one coordinate per index of the owning
/// group (coordinate i lies in 0 .. |domain i| - 1).
struct Point {
  std::vector<std::uint32_t> coords;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// The generalised wreath product of permutation groups (G_i, Delta_i) over
/// a finite poset. Cheap to copy; immutable.
class GwpGroup {
public:
  /// Symmetric factors Sym(Delta_i).
  GwpGroup(Poset poset, std::vector<std::size_t> domain_sizes);
  /// Explicit factors; factor i must act on domain_sizes[i] points.
  GwpGroup(Poset poset, std::vector<std::size_t> domain_sizes, std::vector<PermGroup> factors);

  const Poset& poset() const;
  std::size_t index_count() const { return poset().size(); }
  std::size_t domain_size(Index i) const;
  const std::vector<std::size_t>& domain_sizes() const;
  const PermGroup& factor(Index i) const;
  bool factor_is_symmetric(Index i) const;
  bool all_symmetric() const;
  bool all_transitive() const;

  /// Members of A(i) in canonical (label) order; tuples over the up-set are
  /// ranked lexicographically in this order.
  const std::vector<Index>& upset(Index i) const;
  /// |Delta_{A(i)}|; 1 when A(i) is empty.
  std::size_t upset_size(Index i) const;
  /// Rank of the restriction of `coords` (indexed by poset index) to A(i).
  std::size_t upset_rank(Index i, std::span<const std::uint32_t> coords) const;
  /// Coordinates of the tuple with the given rank, in upset(i) order.
  std::vector<std::uint32_t> upset_tuple(Index i, std::size_t rank) const;

  /// prod_i |G_i|^{|Delta_{A(i)}|}
  BigInt theoretical_order() const;
  /// |Delta|
  BigInt point_count() const;

  /// F_J for an ancestral subset J. Throws InputError otherwise.
  GwpGroup restrict(IndexSet ancestral) const;
  /// Indices of this group's labels inside `ambient` (whose labels must
  /// contain them).
  IndexSet labels_in(const GwpGroup& ambient) const;

  friend bool operator==(const GwpGroup& a, const GwpGroup& b);

  struct Impl;

private:
  explicit GwpGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

/// Element f = (f_i): for each index i a table from Delta_{A(i)} (by rank) to
/// permutations of Delta_i.
class GwpElement {
public:
  /// Validates table shapes, degrees and factor membership.
  GwpElement(GwpGroup group, std::vector<std::vector<Permutation>> tables);

  static GwpElement identity(const GwpGroup& group);
  /// The element equal to the identity except at (i, rank).
  static GwpElement planted(const GwpGroup& group, Index i, std::size_t rank, const Permutation& p);

  const GwpGroup& group() const { return group_; }
  const std::vector<std::vector<Permutation>>& tables() const { return tables_; }
  const std::vector<Permutation>& table(Index i) const { return tables_.at(i); }
  const Permutation& entry(Index i, std::size_t rank) const { return tables_.at(i).at(rank); }

  bool is_identity() const;
  /// f_i = z_i
  bool is_trivial_at(Index i) const;

  friend bool operator==(const GwpElement& a, const GwpElement& b);

private:
  struct Unchecked {};
  GwpElement(GwpGroup group, std::vector<std::vector<Permutation>> tables, Unchecked)
      : group_(std::move(group)), tables_(std::move(tables)) {}

  friend GwpElement multiply(const GwpElement&, const GwpElement&);
  friend GwpElement invert(const GwpElement&);
  friend GwpElement project_element(const GwpElement&, IndexSet);
  friend GwpElement embed(const GwpElement&, const GwpGroup&);
  friend GwpElement random_element(const GwpGroup&, Rng&);
  friend std::vector<GwpElement> enumerate_elements(const GwpGroup&, std::size_t);

  GwpGroup group_;
  std::vector<std::vector<Permutation>> tables_;
};

struct GwpElementHash {
  std::size_t operator()(const GwpElement& f) const noexcept;
};

/// t = fh with t_i(w) = f_i(w) * h_i(w . f_{A(i)}). Throws InputError when
/// the groups differ.
GwpElement multiply(const GwpElement& f, const GwpElement& h);
inline GwpElement operator*(const GwpElement& f, const GwpElement& h) { return multiply(f, h); }

GwpElement invert(const GwpElement& f);
/// h^f = f^{-1} h f
GwpElement conjugate(const GwpElement& h, const GwpElement& f);

/// delta . f, coordinate i being delta_i under f_i(delta restricted to A(i)).
Point act(const Point& delta, const GwpElement& f);
/// The permutation of Delta_{A(i)} (by rank) induced by f.
std::vector<std::uint32_t> upset_action(const GwpElement& f, Index i);

/// f restricted to an ancestral J, as an element of F_J.
GwpElement project_element(const GwpElement& f, IndexSet ancestral);
/// The element of F-bar_J in `ambient` that agrees with fJ on J and is the
/// identity elsewhere.
GwpElement embed(const GwpElement& fJ, const GwpGroup& ambient);

/// Coordinates of J in index order (a point of F_J's domain).
Point project_point(const GwpGroup& group, const Point& delta, IndexSet subset);
/// gamma ~_J delta
bool equiv(const GwpGroup& group, const Point& gamma, const Point& delta, IndexSet ancestral);

/// Lexicographic enumeration of Delta, index 0 most significant.
std::size_t point_rank(const GwpGroup& group, const Point& delta);
Point point_at(const GwpGroup& group, std::size_t rank);
/// Throws GuardError when |Delta| exceeds max_delta.
std::size_t checked_point_count(const GwpGroup& group, std::size_t max_delta);

/// The faithful permutation of Delta induced by f.
Permutation as_permutation(const GwpElement& f, std::size_t max_delta = DeskGuards{}.max_delta);
/// The permutation group on Delta generated by the images of `gens`.
PermGroup image_group(const GwpGroup& group, const std::vector<GwpElement>& gens,
                      std::size_t max_delta = DeskGuards{}.max_delta);

/// Every element, in mixed-radix order over the table entries. Throws
/// GuardError above `limit`.
std::vector<GwpElement> enumerate_elements(const GwpGroup& group, std::size_t limit);
GwpElement random_element(const GwpGroup& group, Rng& rng);

/// Membership in N_K^J = { f in F_J : f_k = z_k for k in K } for ancestral
/// K within ancestral J.
class ProjectionKernel {
public:
  ProjectionKernel(const GwpGroup& group, IndexSet j, IndexSet k);

  const GwpGroup& domain() const { return domain_; }
  bool contains(const GwpElement& fJ) const;

private:
  GwpGroup domain_;
  std::vector<Index> trivial_indices_; // K inside F_J
};

} // namespace gwp
