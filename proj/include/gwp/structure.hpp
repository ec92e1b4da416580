#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gwp/group.hpp"
#include "json.hpp"

namespace gwp {

enum class SubgroupKind { L, H, HJ, Dbar, D, DJ };

std::string to_string(SubgroupKind kind);

/// Names one of the structural subgroups. `index` is j for L and i for the
/// others; `subset` is the ancestral J for HJ, Dbar and DJ. For the D kinds
/// `anchor` is the rank of epsilon_i in Delta_{A(i)} (default 0, the
/// lexicographically least tuple).
struct SubgroupSpec {
  SubgroupKind kind = SubgroupKind::H;
  Index index = 0;
  IndexSet subset;
  std::size_t anchor = 0;

  static SubgroupSpec L(Index j) { return {SubgroupKind::L, j, {}, 0}; }
  static SubgroupSpec H(Index i) { return {SubgroupKind::H, i, {}, 0}; }
  static SubgroupSpec HJ(Index i, IndexSet j) { return {SubgroupKind::HJ, i, j, 0}; }
  static SubgroupSpec Dbar(IndexSet j) { return {SubgroupKind::Dbar, 0, j, 0}; }
  static SubgroupSpec D(Index i, std::size_t anchor = 0) { return {SubgroupKind::D, i, {}, anchor}; }
  static SubgroupSpec DJ(Index i, IndexSet j, std::size_t anchor = 0) { return {SubgroupKind::DJ, i, j, anchor}; }
};

/// A subgroup of `ambient` (F, or F_J for the J kinds) given by its defining
/// predicate and a generating list.
struct Subgroup {
  GwpGroup ambient;
  std::function<bool(const GwpElement&)> contains;
  std::vector<GwpElement> generators;
};

/// Throws InputError on invalid parameters.
Subgroup members(const SubgroupSpec& spec, const GwpGroup& group);

/// Closure of `gens` inside their group by breadth-first multiplication.
/// Throws GuardError past `limit` elements.
std::vector<GwpElement> close_elements(const GwpGroup& group, const std::vector<GwpElement>& gens,
                                       std::size_t limit);

/// Index of the label of `from`'s index `i` inside `to`.
Index translate_index(const GwpGroup& from, Index i, const GwpGroup& to);
IndexSet translate_set(const GwpGroup& from, IndexSet s, const GwpGroup& to);

/// An element of G_i^{Delta_{A(i)}}, entries by rank of Delta_{A(i)}.
struct FactorTuple {
  Index index = 0;
  std::vector<Permutation> entries;

  friend bool operator==(const FactorTuple&, const FactorTuple&) = default;
};

/// f theta_i = (delta f_i)_delta for f in H_i of its own group.
FactorTuple theta(Index i, const GwpElement& f);
GwpElement theta_inverse(const GwpGroup& group, const FactorTuple& t);
/// Pointwise product in G_i^{Delta_{A(i)}}.
FactorTuple tuple_multiply(const FactorTuple& a, const FactorTuple& b);

/// (t^f)_delta = t_{delta . (f^{-1} projected to A(i))}, where t belongs to
/// `owner` and f to a group whose labels contain A(i).
FactorTuple conj_action(const GwpGroup& owner, const FactorTuple& t, const GwpElement& f);

/// How hard the witnesses look: exhaustively up to the limit, by sampling
/// above it.
struct WitnessOptions {
  std::size_t exhaustive_limit = 256;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  std::size_t max_delta = DeskGuards{}.max_delta;
};

struct SemidirectReport {
  Index index = 0;
  BigInt h_order;
  BigInt fbar_order;
  BigInt group_order;
  bool exhaustive = false;
  bool intersection_trivial = false;
  bool normal = false;
  bool factorization_ok = false;
  bool order_product_ok = false;
  bool ok() const { return intersection_trivial && normal && factorization_ok && order_product_ok; }
};

/// f = h fbar with fbar = embed(f projected to I \ {i}) and h in H_i.
std::pair<GwpElement, GwpElement> semidirect_factor(const GwpElement& f, Index i);
/// Throws InputError unless i is minimal.
SemidirectReport semidirect_witness(const GwpGroup& group, Index i, const WitnessOptions& opt = {});

/// Elements of H_i and H_j commute, meet trivially, and generate a subgroup
/// of order |H_i| |H_j|. Both must be minimal and distinct.
bool hi_hj_direct_product(const GwpGroup& group, Index i, Index j, const WitnessOptions& opt = {});

struct IsomorphismCheck {
  BigInt model_order;
  BigInt group_order;
  bool exhaustive = false;
  bool bijective = false;   // exhaustive: injective and onto; else orders agree
  bool homomorphism = false;
  bool ok() const { return bijective && homomorphism && model_order == group_order; }
};

struct WreathReport {
  Index index = 0;
  std::size_t x_size = 0;
  IsomorphismCheck check;
  bool unique_minimal = false;
  bool faithful_top = false;  // F_J acts faithfully on Delta_{A(i)}
  bool direct_factor = false; // A(i) empty: F = G_i x F_J
  bool ok() const;
};

/// Compares F with G_i wr_{Delta_{A(i)}} F_J through (h, f) -> (h theta_i)(f phi_J).
WreathReport wreath_witness(const GwpGroup& group, Index i, const WitnessOptions& opt = {});

/// Iterated wreath product from the bottom of a chain.
IsomorphismCheck chain_decompose(const GwpGroup& group, const WitnessOptions& opt = {});
/// Direct product of the factors of an antichain.
IsomorphismCheck antichain_decompose(const GwpGroup& group, const WitnessOptions& opt = {});

struct DecompositionNode {
  std::string kind; // factor, product, wreath
  std::vector<std::string> labels;
  std::string description;
  BigInt order;
  std::vector<std::pair<std::string, bool>> checks;
  std::vector<std::string> notes;
  std::vector<DecompositionNode> children;

  bool ok() const;
};

DecompositionNode decompose(const GwpGroup& group, const WitnessOptions& opt = {});
nlohmann::json to_json(const DecompositionNode& node);
std::string to_text(const DecompositionNode& node);

/// Concatenated H_i generators over all i.
std::vector<GwpElement> generating_set_H(const GwpGroup& group);
/// Concatenated D_i generators; throws InputError for an intransitive factor.
std::vector<GwpElement> generating_set_D(const GwpGroup& group);
/// The F-bar_J conjugates of D_i generate H_i (i minimal, J = I \ {i}).
bool conjugate_generation_check(const GwpGroup& group, Index i);

} // namespace gwp
