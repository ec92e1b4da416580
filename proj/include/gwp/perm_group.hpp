#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gwp/permutation.hpp"

namespace gwp {

using BigInt = boost::multiprecision::cpp_int;
using Rng = std::mt19937_64;

BigInt factorial(std::size_t n);

/// One layer of a stabilizer chain. Every generator fixes the base points of
/// all earlier layers; `transversal[k]` maps `base` to `orbit[k]`.
struct ChainLevel {
  Permutation::point_type base = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation::point_type> orbit;
  std::vector<std::int32_t> slot; // point -> position in orbit, or -1
  std::vector<Permutation> transversal;
  std::vector<Permutation> transversal_inverse;
};

/// Deterministic Schreier-Sims (Knuth's incremental formulation) with
/// first-moved-point base selection.
class StabilizerChain {
public:
  explicit StabilizerChain(std::size_t degree) : degree_(degree) {}

  void add_generator(const Permutation& g);

  std::size_t degree() const { return degree_; }
  const std::vector<ChainLevel>& levels() const { return levels_; }
  std::vector<Permutation::point_type> base() const;

  BigInt order() const;
  bool contains(const Permutation& g) const;
  /// Uniformly distributed element of the group.
  Permutation random_element(Rng& rng) const;

private:
  void extend(std::size_t level, const Permutation& g);
  void close_orbit(std::size_t level, const Permutation& t);
  /// Sifts `g` from `level` down. Returns the level where sifting stopped
  /// (levels_.size() when it passed every level) and the residue.
  std::pair<std::size_t, Permutation> sift(std::size_t level, Permutation g) const;

  std::size_t degree_;
  std::vector<ChainLevel> levels_;
};

/// Breadth-first closure of the generators under right multiplication,
/// starting from the identity. Throws GuardError once more than `limit`
/// elements are found.
std::vector<Permutation> naive_closure(std::size_t degree, const std::vector<Permutation>& generators,
                                       std::size_t limit);

/// A permutation group given by generators. The stabilizer chain is built on
/// first use; copies share it.
class PermGroup {
public:
  PermGroup() : PermGroup(1) {}
  /// Throws InputError if a generator's degree differs from `degree`.
  explicit PermGroup(std::size_t degree, std::vector<Permutation> generators = {});

  /// Sym(n) generated by (0 1) and (0 1 ... n-1); no generators for n = 1.
  static PermGroup symmetric(std::size_t n);
  static PermGroup alternating(std::size_t n);
  static PermGroup trivial(std::size_t n) { return PermGroup(n); }

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const StabilizerChain& chain() const;

  BigInt order() const { return chain().order(); }
  bool contains(const Permutation& g) const;
  std::vector<Permutation::point_type> orbit(Permutation::point_type p) const;
  bool is_transitive() const;
  bool is_symmetric() const { return order() == factorial(degree_); }
  Permutation random_element(Rng& rng) const { return chain().random_element(rng); }
  /// All elements, from the chain. Throws GuardError above `limit`.
  std::vector<Permutation> elements(std::size_t limit = 100000) const;

private:
  struct Lazy {
    std::once_flag once;
    std::unique_ptr<StabilizerChain> chain;
  };

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<Lazy> lazy_;
};

/// Same order and every generator of `a` lies in `b`. Throws InputError on a
/// degree mismatch.
bool equals_group(const PermGroup& a, const PermGroup& b);

/// Settings for the minimal-generator oracle. Orders up to
/// `exhaustive_limit` get an exact answer by exhaustive search over the
/// subgroups generated by k-tuples; orders up to `randomized_limit` only get
/// the smallest k for which a random k-tuple was found to generate.
struct MinGenOptions {
  std::size_t exhaustive_limit = 10'000;
  std::size_t randomized_limit = 1'000'000;
  std::size_t random_attempts = 2'000; // per k in randomized mode
  std::uint64_t seed = 1;
};

struct MinGenResult {
  std::optional<std::size_t> d; // nullopt: no k <= max_k worked
  bool exhaustive = false;
  BigInt order;
};

/// Smallest k <= max_k such that some k-tuple of elements generates `g`.
/// Within `exhaustive_limit` the answer is proven: either d(G/G') is found
/// by search on the abelianization and a tuple of that length is sampled,
/// or every tuple is searched level by level. Between the limits only
/// random tuples are tried. Throws GuardError above `randomized_limit`.
MinGenResult min_generators_exact(const PermGroup& g, std::size_t max_k,
                                  const MinGenOptions& options = {});

} // namespace gwp
