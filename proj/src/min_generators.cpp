#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>

#include "gwp/error.hpp"
#include "gwp/perm_group.hpp"

namespace gwp {
namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept {
    std::size_t seed = b.size();
    for (auto w : b) seed ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    return seed;
  }
};

bool test(const Bits& b, std::uint32_t i) { return (b[i >> 6] >> (i & 63)) & 1U; }
void set(Bits& b, std::uint32_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

/// The materialized group with index-based multiplication.
class ElementTable {
public:
  explicit ElementTable(std::vector<Permutation> elems) : elems_(std::move(elems)) {
    index_.reserve(elems_.size() * 2);
    for (std::uint32_t k = 0; k < elems_.size(); ++k) index_.emplace(elems_[k], k);
    identity_ = index_.at(Permutation::identity(elems_.front().size()));
  }

  std::size_t size() const { return elems_.size(); }
  std::uint32_t identity() const { return identity_; }
  const Permutation& at(std::uint32_t k) const { return elems_[k]; }
  std::uint32_t index(const Permutation& p) const { return index_.at(p); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return index_.at(elems_[a] * elems_[b]); }
  std::uint32_t conj(std::uint32_t g, std::uint32_t x) const {
    return index_.at(elems_[x].inverse() * elems_[g] * elems_[x]);
  }

  /// Subgroup generated by `gens` as a bitset; `count` receives its order.
  Bits closure(const std::vector<std::uint32_t>& gens, std::size_t& count) const {
    Bits bits((size() + 63) / 64, 0);
    std::vector<std::uint32_t> queue{identity_};
    set(bits, identity_);
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (auto g : gens) {
        auto y = mul(queue[k], g);
        if (!test(bits, y)) {
          set(bits, y);
          queue.push_back(y);
        }
      }
    count = queue.size();
    return bits;
  }

private:
  std::vector<Permutation> elems_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
  std::uint32_t identity_ = 0;
};

struct Candidate {
  std::vector<std::uint32_t> gens;
  Bits bits;
};

/// Normal closure of `seeds` under conjugation by `gens`, as a bitset.
Bits normal_closure(const ElementTable& table, std::vector<std::uint32_t> seeds, const std::vector<std::uint32_t>& gens) {
  std::size_t count = 0;
  Bits bits = table.closure(seeds, count);
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t a = 0; a < seeds.size(); ++a)
      for (auto s : gens) {
        const auto c = table.conj(seeds[a], s);
        if (!test(bits, c)) {
          seeds.push_back(c);
          bits = table.closure(seeds, count);
          grew = true;
        }
      }
  }
  return bits;
}

/// G / G' in its right regular representation, one permutation per coset.
PermGroup abelianization(const ElementTable& table, const std::vector<std::uint32_t>& gens) {
  std::vector<std::uint32_t> commutators;
  for (auto a : gens)
    for (auto b : gens) {
      const auto c = table.index(table.at(a).inverse() * table.at(b).inverse() * table.at(a) * table.at(b));
      if (c != table.identity()) commutators.push_back(c);
    }
  const Bits derived = normal_closure(table, commutators, gens);
  std::vector<std::uint32_t> members;
  for (std::uint32_t x = 0; x < table.size(); ++x)
    if (test(derived, x)) members.push_back(x);

  constexpr std::uint32_t none = UINT32_MAX;
  std::vector<std::uint32_t> coset(table.size(), none);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t x = 0; x < table.size(); ++x) {
    if (coset[x] != none) continue;
    for (auto m : members) coset[table.mul(x, m)] = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
  }
  std::vector<Permutation> images;
  for (auto s : gens) {
    std::vector<std::uint32_t> img(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) img[c] = coset[table.mul(reps[c], s)];
    images.push_back(Permutation::from_images(std::move(img)));
  }
  return PermGroup(reps.size(), std::move(images));
}

MinGenResult levelwise(const ElementTable& table, std::size_t max_k, const MinGenOptions& opt);

MinGenResult exhaustive(const PermGroup& g, std::size_t max_k, const MinGenOptions& opt) {
  ElementTable table(g.elements(opt.exhaustive_limit));
  std::vector<std::uint32_t> gens;
  for (const auto& s : g.generators()) gens.push_back(table.index(s));

  // d(G) >= d(G/G'); a generating tuple of that length settles it.
  const PermGroup ab = abelianization(table, gens);
  if (ab.order() > 1 && ab.order() < g.order()) {
    const auto bound = levelwise(ElementTable(ab.elements(opt.exhaustive_limit)), max_k, opt);
    if (!bound.d) {
      MinGenResult r;
      r.exhaustive = true;
      r.order = g.order();
      return r;
    }
    Rng rng(opt.seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(table.size() - 1));
    for (std::size_t attempt = 0; attempt < opt.random_attempts; ++attempt) {
      std::vector<std::uint32_t> tuple(*bound.d);
      for (auto& t : tuple) t = pick(rng);
      std::size_t count = 0;
      table.closure(tuple, count);
      if (count == table.size()) {
        MinGenResult r;
        r.exhaustive = true;
        r.order = g.order();
        r.d = *bound.d;
        return r;
      }
    }
  }
  return levelwise(table, max_k, opt);
}

MinGenResult levelwise(const ElementTable& table, std::size_t max_k, const MinGenOptions& opt) {
  MinGenResult result;
  result.exhaustive = true;
  const std::size_t n = table.size();
  result.order = n;
  if (n == 1) {
    result.d = 0;
    return result;
  }

  Rng rng(opt.seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));

  Bits trivial((n + 63) / 64, 0);
  set(trivial, table.identity());
  std::vector<Candidate> level{{{}, trivial}};

  for (std::size_t k = 1; k <= max_k; ++k) {
    // Every tuple shorter than k is already excluded, so any generating
    // k-tuple found by sampling settles the answer.
    for (std::size_t attempt = 0; attempt < 200; ++attempt) {
      std::vector<std::uint32_t> tuple(k);
      for (auto& t : tuple) t = pick(rng);
      std::size_t count = 0;
      table.closure(tuple, count);
      if (count == n) {
        result.d = k;
        return result;
      }
    }

    std::vector<Candidate> next;
    std::unordered_set<Bits, BitsHash> seen;
    for (const auto& h : level) {
      Bits covered = h.bits;
      for (std::uint32_t x = 0; x < n; ++x) {
        if (test(covered, x)) continue;
        auto gens = h.gens;
        gens.push_back(x);
        std::size_t count = 0;
        Bits sub = table.closure(gens, count);
        if (count == n) {
          result.d = k;
          return result;
        }
        for (std::size_t w = 0; w < covered.size(); ++w) covered[w] |= sub[w];
        if (k == 1) {
          // Generation is invariant under simultaneous conjugation, so the
          // first entry only needs one representative per class.
          for (std::uint32_t y = 0; y < n; ++y) set(covered, table.conj(x, y));
        }
        if (k < max_k && seen.insert(sub).second) next.push_back({std::move(gens), std::move(sub)});
      }
    }
    level = std::move(next);
  }
  return result;
}

MinGenResult randomized(const PermGroup& g, std::size_t max_k, const MinGenOptions& opt) {
  MinGenResult result;
  result.order = g.order();
  if (result.order == 1) {
    result.d = 0;
    return result;
  }
  Rng rng(opt.seed);
  for (std::size_t k = 1; k <= max_k; ++k) {
    for (std::size_t attempt = 0; attempt < opt.random_attempts; ++attempt) {
      std::vector<Permutation> tuple;
      for (std::size_t s = 0; s < k; ++s) tuple.push_back(g.random_element(rng));
      if (PermGroup(g.degree(), std::move(tuple)).order() == result.order) {
        result.d = k;
        return result;
      }
    }
  }
  return result;
}

} // namespace

MinGenResult min_generators_exact(const PermGroup& g, std::size_t max_k, const MinGenOptions& options) {
  const BigInt order = g.order();
  if (order <= options.exhaustive_limit) return exhaustive(g, max_k, options);
  if (order <= options.randomized_limit) return randomized(g, max_k, options);
  throw GuardError("group of order " + order.str() + " is too large for the generator oracle");
}

} // namespace gwp
