#include "gwp/perm_group.hpp"

#include <deque>
#include <unordered_set>

#include "gwp/error.hpp"

namespace gwp {

BigInt factorial(std::size_t n) {
  BigInt r = 1;
  for (std::size_t k = 2; k <= n; ++k) r *= k;
  return r;
}

// ---------------------------------------------------------------------------
// StabilizerChain

std::vector<Permutation::point_type> StabilizerChain::base() const {
  std::vector<Permutation::point_type> b;
  for (const auto& l : levels_) b.push_back(l.base);
  return b;
}

void StabilizerChain::add_generator(const Permutation& g) {
  if (g.size() != degree_) throw InputError("generator degree does not match the chain");
  extend(0, g);
}

std::pair<std::size_t, Permutation> StabilizerChain::sift(std::size_t level, Permutation g) const {
  for (std::size_t k = level; k < levels_.size(); ++k) {
    const ChainLevel& l = levels_[k];
    const std::int32_t s = l.slot[g[l.base]];
    if (s < 0) return {k, std::move(g)};
    g = g * l.transversal_inverse[static_cast<std::size_t>(s)];
  }
  return {levels_.size(), std::move(g)};
}

void StabilizerChain::extend(std::size_t level, const Permutation& g) {
  if (level == levels_.size()) {
    auto moved = g.first_moved_point();
    if (!moved) return;
    ChainLevel l;
    l.base = *moved;
    l.slot.assign(degree_, -1);
    l.slot[l.base] = 0;
    l.orbit.push_back(l.base);
    l.transversal.push_back(Permutation::identity(degree_));
    l.transversal_inverse.push_back(Permutation::identity(degree_));
    levels_.push_back(std::move(l));
  } else {
    auto [stop, residue] = sift(level, g);
    if (stop == levels_.size() && residue.is_identity()) return;
  }
  levels_[level].generators.push_back(g);
  const std::size_t known = levels_[level].orbit.size();
  for (std::size_t k = 0; k < known; ++k) {
    Permutation t = levels_[level].transversal[k] * g;
    close_orbit(level, t);
  }
}

void StabilizerChain::close_orbit(std::size_t level, const Permutation& t) {
  const auto p = t[levels_[level].base];
  const std::int32_t s = levels_[level].slot[p];
  if (s < 0) {
    ChainLevel& l = levels_[level];
    l.slot[p] = static_cast<std::int32_t>(l.orbit.size());
    l.orbit.push_back(p);
    l.transversal.push_back(t);
    l.transversal_inverse.push_back(t.inverse());
    // The generator list can grow during recursion; index by position.
    for (std::size_t k = 0; k < levels_[level].generators.size(); ++k) {
      Permutation next = t * levels_[level].generators[k];
      close_orbit(level, next);
    }
  } else {
    Permutation schreier = t * levels_[level].transversal_inverse[static_cast<std::size_t>(s)];
    extend(level + 1, schreier);
  }
}

BigInt StabilizerChain::order() const {
  BigInt o = 1;
  for (const auto& l : levels_) o *= l.orbit.size();
  return o;
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.size() != degree_) throw InputError("permutation degree does not match the group");
  auto [stop, residue] = sift(0, g);
  return stop == levels_.size() && residue.is_identity();
}

Permutation StabilizerChain::random_element(Rng& rng) const {
  Permutation r = Permutation::identity(degree_);
  for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
    std::uniform_int_distribution<std::size_t> pick(0, it->orbit.size() - 1);
    r = r * it->transversal[pick(rng)];
  }
  return r;
}

// ---------------------------------------------------------------------------

std::vector<Permutation> naive_closure(std::size_t degree, const std::vector<Permutation>& generators,
                                       std::size_t limit) {
  std::vector<Permutation> elems{Permutation::identity(degree)};
  std::unordered_set<Permutation, PermutationHash> seen{elems.front()};
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (const auto& g : generators) {
      Permutation x = elems[k] * g;
      if (seen.insert(x).second) {
        if (elems.size() >= limit)
          throw GuardError("closure exceeds the enumeration limit of " + std::to_string(limit));
        elems.push_back(std::move(x));
      }
    }
  }
  return elems;
}

// ---------------------------------------------------------------------------
// PermGroup

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), lazy_(std::make_shared<Lazy>()) {
  if (degree_ == 0) throw InputError("permutation groups need a non-empty domain");
  for (const auto& g : generators_)
    if (g.size() != degree_)
      throw InputError("generator " + g.to_string() + " has degree " + std::to_string(g.size()) +
                       ", expected " + std::to_string(degree_));
}

PermGroup PermGroup::symmetric(std::size_t n) {
  if (n == 0) throw InputError("symmetric group on zero points");
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(Permutation::transposition(n, 0, 1));
    if (n > 2) {
      std::vector<Permutation::point_type> all(n);
      for (std::size_t p = 0; p < n; ++p) all[p] = static_cast<Permutation::point_type>(p);
      gens.push_back(Permutation::cycle(n, all));
    }
  }
  return PermGroup(n, std::move(gens));
}

PermGroup PermGroup::alternating(std::size_t n) {
  if (n == 0) throw InputError("alternating group on zero points");
  std::vector<Permutation> gens;
  for (Permutation::point_type k = 2; k < n; ++k) {
    const Permutation::point_type pts[] = {0, 1, k};
    gens.push_back(Permutation::cycle(n, pts));
  }
  return PermGroup(n, std::move(gens));
}

const StabilizerChain& PermGroup::chain() const {
  std::call_once(lazy_->once, [this] {
    auto c = std::make_unique<StabilizerChain>(degree_);
    for (const auto& g : generators_) c->add_generator(g);
    lazy_->chain = std::move(c);
  });
  return *lazy_->chain;
}

bool PermGroup::contains(const Permutation& g) const { return chain().contains(g); }

std::vector<Permutation::point_type> PermGroup::orbit(Permutation::point_type p) const {
  if (p >= degree_) throw InputError("point out of range");
  std::vector<bool> seen(degree_, false);
  std::vector<Permutation::point_type> out{p};
  seen[p] = true;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : generators_) {
      auto q = g[out[k]];
      if (!seen[q]) {
        seen[q] = true;
        out.push_back(q);
      }
    }
  return out;
}

bool PermGroup::is_transitive() const { return orbit(0).size() == degree_; }

std::vector<Permutation> PermGroup::elements(std::size_t limit) const {
  const auto& levels = chain().levels();
  if (order() > limit)
    throw GuardError("group of order " + order().str() + " exceeds the enumeration limit of " +
                     std::to_string(limit));
  std::vector<Permutation> out{Permutation::identity(degree_)};
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    std::vector<Permutation> next;
    next.reserve(out.size() * it->orbit.size());
    for (const auto& x : out)
      for (const auto& u : it->transversal) next.push_back(x * u);
    out = std::move(next);
  }
  return out;
}

bool equals_group(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) throw InputError("cannot compare groups of different degrees");
  if (a.order() != b.order()) return false;
  for (const auto& g : a.generators())
    if (!b.contains(g)) return false;
  return true;
}

} // namespace gwp
