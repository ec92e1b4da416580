#include "gwp/group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "gwp/error.hpp"

namespace gwp {

struct GwpGroup::Impl {
  Poset poset;
  std::vector<std::size_t> sizes;
  std::vector<PermGroup> factors;
  std::vector<bool> symmetric;
  std::vector<std::vector<Index>> upsets;
  std::vector<std::vector<std::size_t>> strides; // parallel to upsets
  std::vector<std::size_t> upset_sizes;

  mutable std::mutex cache_mutex;
  mutable std::map<std::uint64_t, std::shared_ptr<const Impl>> restrictions;
};

namespace {

std::shared_ptr<GwpGroup::Impl> make_impl(Poset poset, std::vector<std::size_t> sizes,
                                          std::vector<PermGroup> factors) {
  if (sizes.size() != poset.size())
    throw InputError("expected " + std::to_string(poset.size()) + " domain sizes, got " +
                     std::to_string(sizes.size()));
  if (factors.size() != poset.size()) throw InputError("one factor group per index is required");
  auto impl = std::make_shared<GwpGroup::Impl>();
  const std::size_t n = poset.size();
  for (Index i = 0; i < n; ++i) {
    if (sizes[i] == 0) throw InputError("domain of '" + poset.label(i) + "' is empty");
    if (factors[i].degree() != sizes[i])
      throw InputError("factor of '" + poset.label(i) + "' acts on " +
                       std::to_string(factors[i].degree()) + " points, domain has " +
                       std::to_string(sizes[i]));
  }
  impl->upsets.resize(n);
  impl->strides.resize(n);
  impl->upset_sizes.resize(n);
  for (Index i = 0; i < n; ++i) {
    impl->upsets[i] = poset.up_set(i).members();
    const auto& up = impl->upsets[i];
    std::vector<std::size_t> stride(up.size());
    std::size_t s = 1;
    for (std::size_t t = up.size(); t-- > 0;) {
      stride[t] = s;
      s *= sizes[up[t]];
      if (s > (std::size_t{1} << 40))
        throw GuardError("up-set domain of '" + poset.label(i) + "' is too large to tabulate");
    }
    impl->strides[i] = std::move(stride);
    impl->upset_sizes[i] = s;
  }
  for (Index i = 0; i < n; ++i) impl->symmetric.push_back(factors[i].is_symmetric());
  impl->poset = std::move(poset);
  impl->sizes = std::move(sizes);
  impl->factors = std::move(factors);
  return impl;
}

std::vector<PermGroup> symmetric_factors(const std::vector<std::size_t>& sizes) {
  std::vector<PermGroup> out;
  for (auto n : sizes) {
    if (n == 0) throw InputError("empty domain");
    out.push_back(PermGroup::symmetric(n));
  }
  return out;
}

/// Applies `tables` (an element of `g`) to the tuple of A(i) with rank `rank`
/// and returns the rank of the image.
std::size_t act_on_upset(const GwpGroup& g, const std::vector<std::vector<Permutation>>& tables,
                         Index i, std::size_t rank, std::vector<std::uint32_t>& scratch) {
  const auto& up = g.upset(i);
  if (up.empty()) return 0;
  const auto tuple = g.upset_tuple(i, rank);
  for (std::size_t t = 0; t < up.size(); ++t) scratch[up[t]] = tuple[t];
  std::size_t out = 0;
  std::size_t stride = 1;
  for (std::size_t t = up.size(); t-- > 0;) {
    const Index j = up[t];
    const auto image = tables[j][g.upset_rank(j, scratch)][scratch[j]];
    out += image * stride;
    stride *= g.domain_size(j);
  }
  return out;
}

void require_same_group(const GwpGroup& a, const GwpGroup& b) {
  if (!(a == b)) throw InputError("elements belong to different generalised wreath products");
}

} // namespace

// ---------------------------------------------------------------------------
// GwpGroup

GwpGroup::GwpGroup(Poset poset, std::vector<std::size_t> domain_sizes)
    : impl_(make_impl(std::move(poset), domain_sizes, symmetric_factors(domain_sizes))) {}

GwpGroup::GwpGroup(Poset poset, std::vector<std::size_t> domain_sizes, std::vector<PermGroup> factors)
    : impl_(make_impl(std::move(poset), std::move(domain_sizes), std::move(factors))) {}

const Poset& GwpGroup::poset() const { return impl_->poset; }
std::size_t GwpGroup::domain_size(Index i) const { return impl_->sizes.at(i); }
const std::vector<std::size_t>& GwpGroup::domain_sizes() const { return impl_->sizes; }
const PermGroup& GwpGroup::factor(Index i) const { return impl_->factors.at(i); }
bool GwpGroup::factor_is_symmetric(Index i) const { return impl_->symmetric.at(i); }

bool GwpGroup::all_symmetric() const {
  return std::all_of(impl_->symmetric.begin(), impl_->symmetric.end(), [](bool b) { return b; });
}

bool GwpGroup::all_transitive() const {
  return std::all_of(impl_->factors.begin(), impl_->factors.end(),
                     [](const PermGroup& g) { return g.is_transitive(); });
}

const std::vector<Index>& GwpGroup::upset(Index i) const { return impl_->upsets.at(i); }
std::size_t GwpGroup::upset_size(Index i) const { return impl_->upset_sizes.at(i); }

std::size_t GwpGroup::upset_rank(Index i, std::span<const std::uint32_t> coords) const {
  const auto& up = impl_->upsets[i];
  const auto& stride = impl_->strides[i];
  std::size_t r = 0;
  for (std::size_t t = 0; t < up.size(); ++t) r += coords[up[t]] * stride[t];
  return r;
}

std::vector<std::uint32_t> GwpGroup::upset_tuple(Index i, std::size_t rank) const {
  const auto& up = impl_->upsets[i];
  const auto& stride = impl_->strides[i];
  std::vector<std::uint32_t> out(up.size());
  for (std::size_t t = 0; t < up.size(); ++t) {
    out[t] = static_cast<std::uint32_t>(rank / stride[t]);
    rank %= stride[t];
  }
  return out;
}

BigInt GwpGroup::theoretical_order() const {
  BigInt o = 1;
  for (Index i = 0; i < index_count(); ++i) {
    const BigInt g = factor(i).order();
    for (std::size_t k = 0; k < upset_size(i); ++k) o *= g;
  }
  return o;
}

BigInt GwpGroup::point_count() const {
  BigInt c = 1;
  for (auto n : impl_->sizes) c *= n;
  return c;
}

GwpGroup GwpGroup::restrict(IndexSet ancestral) const {
  if (!poset().is_ancestral(ancestral)) throw InputError("projection target is not ancestral");
  if (ancestral == poset().all()) return *this;
  std::lock_guard lock(impl_->cache_mutex);
  auto& slot = impl_->restrictions[ancestral.bits()];
  if (!slot) {
    std::vector<std::size_t> sizes;
    std::vector<PermGroup> factors;
    for (Index i : ancestral.members()) {
      sizes.push_back(impl_->sizes[i]);
      factors.push_back(impl_->factors[i]);
    }
    slot = make_impl(poset().induced(ancestral), std::move(sizes), std::move(factors));
  }
  return GwpGroup(slot);
}

IndexSet GwpGroup::labels_in(const GwpGroup& ambient) const {
  IndexSet s;
  for (const auto& l : poset().labels()) s.insert(ambient.poset().index_of(l));
  return s;
}

bool operator==(const GwpGroup& a, const GwpGroup& b) {
  if (a.impl_ == b.impl_) return true;
  if (!(a.poset() == b.poset()) || a.domain_sizes() != b.domain_sizes()) return false;
  for (Index i = 0; i < a.index_count(); ++i)
    if (a.factor(i).generators() != b.factor(i).generators()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// GwpElement

GwpElement::GwpElement(GwpGroup group, std::vector<std::vector<Permutation>> tables)
    : group_(std::move(group)), tables_(std::move(tables)) {
  const std::size_t n = group_.index_count();
  if (tables_.size() != n)
    throw InputError("element needs " + std::to_string(n) + " tables, got " +
                     std::to_string(tables_.size()));
  for (Index i = 0; i < n; ++i) {
    const auto& label = group_.poset().label(i);
    if (tables_[i].size() != group_.upset_size(i))
      throw InputError("table for '" + label + "' needs " + std::to_string(group_.upset_size(i)) +
                       " entries, got " + std::to_string(tables_[i].size()));
    for (const auto& p : tables_[i]) {
      if (p.size() != group_.domain_size(i))
        throw InputError("table for '" + label + "' holds a permutation of the wrong degree");
      if (!group_.factor_is_symmetric(i) && !group_.factor(i).contains(p))
        throw InputError("table for '" + label + "' holds " + p.to_string() +
                         ", which is not in the factor group");
    }
  }
}

GwpElement GwpElement::identity(const GwpGroup& group) {
  std::vector<std::vector<Permutation>> tables(group.index_count());
  for (Index i = 0; i < group.index_count(); ++i)
    tables[i].assign(group.upset_size(i), Permutation::identity(group.domain_size(i)));
  return GwpElement(group, std::move(tables), Unchecked{});
}

GwpElement GwpElement::planted(const GwpGroup& group, Index i, std::size_t rank, const Permutation& p) {
  GwpElement e = identity(group);
  if (i >= group.index_count() || rank >= group.upset_size(i))
    throw InputError("planting position out of range");
  auto tables = e.tables_;
  tables[i][rank] = p;
  return GwpElement(group, std::move(tables));
}

bool GwpElement::is_identity() const {
  for (Index i = 0; i < tables_.size(); ++i)
    if (!is_trivial_at(i)) return false;
  return true;
}

bool GwpElement::is_trivial_at(Index i) const {
  const auto& t = tables_.at(i);
  return std::all_of(t.begin(), t.end(), [](const Permutation& p) { return p.is_identity(); });
}

bool operator==(const GwpElement& a, const GwpElement& b) {
  return a.tables_ == b.tables_ && a.group_ == b.group_;
}

std::size_t GwpElementHash::operator()(const GwpElement& f) const noexcept {
  std::size_t seed = 0;
  PermutationHash h;
  for (const auto& t : f.tables())
    for (const auto& p : t) seed ^= h(p) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}

// ---------------------------------------------------------------------------
// Operations

GwpElement multiply(const GwpElement& f, const GwpElement& h) {
  require_same_group(f.group(), h.group());
  const GwpGroup& g = f.group();
  std::vector<std::uint32_t> scratch(g.index_count(), 0);
  std::vector<std::vector<Permutation>> t(g.index_count());
  for (Index i = 0; i < g.index_count(); ++i) {
    const std::size_t m = g.upset_size(i);
    t[i].reserve(m);
    for (std::size_t w = 0; w < m; ++w) {
      const std::size_t moved = act_on_upset(g, f.tables_, i, w, scratch);
      t[i].push_back(f.tables_[i][w] * h.tables_[i][moved]);
    }
  }
  return GwpElement(g, std::move(t), GwpElement::Unchecked{});
}

GwpElement invert(const GwpElement& f) {
  const GwpGroup& g = f.group();
  const std::size_t n = g.index_count();
  // j > i implies A(j) is a proper subset of A(i): small up-sets first.
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return g.upset(a).size() < g.upset(b).size(); });

  std::vector<std::vector<Permutation>> d(n);
  std::vector<std::uint32_t> scratch(n, 0);
  for (Index i : order) {
    const std::size_t m = g.upset_size(i);
    d[i].reserve(m);
    // d_i(gamma) = f_i(gamma . d_{A(i)})^{-1}; d is complete on A(i).
    for (std::size_t gamma = 0; gamma < m; ++gamma) {
      const std::size_t source = act_on_upset(g, d, i, gamma, scratch);
      d[i].push_back(f.tables_[i][source].inverse());
    }
  }
  return GwpElement(g, std::move(d), GwpElement::Unchecked{});
}

GwpElement conjugate(const GwpElement& h, const GwpElement& f) { return invert(f) * h * f; }

Point act(const Point& delta, const GwpElement& f) {
  const GwpGroup& g = f.group();
  if (delta.coords.size() != g.index_count()) throw InputError("point has the wrong number of coordinates");
  Point out;
  out.coords.resize(delta.coords.size());
  for (Index i = 0; i < g.index_count(); ++i) {
    if (delta.coords[i] >= g.domain_size(i)) throw InputError("point coordinate out of range");
    out.coords[i] = f.entry(i, g.upset_rank(i, delta.coords))[delta.coords[i]];
  }
  return out;
}

std::vector<std::uint32_t> upset_action(const GwpElement& f, Index i) {
  const GwpGroup& g = f.group();
  std::vector<std::uint32_t> scratch(g.index_count(), 0);
  std::vector<std::uint32_t> out(g.upset_size(i));
  for (std::size_t w = 0; w < out.size(); ++w)
    out[w] = static_cast<std::uint32_t>(act_on_upset(g, f.tables(), i, w, scratch));
  return out;
}

GwpElement project_element(const GwpElement& f, IndexSet ancestral) {
  GwpGroup sub = f.group().restrict(ancestral);
  std::vector<std::vector<Permutation>> tables;
  for (Index i : ancestral.members()) tables.push_back(f.tables_[i]);
  return GwpElement(std::move(sub), std::move(tables), GwpElement::Unchecked{});
}

GwpElement embed(const GwpElement& fJ, const GwpGroup& ambient) {
  const IndexSet j = fJ.group().labels_in(ambient);
  require_same_group(fJ.group(), ambient.restrict(j));
  GwpElement out = GwpElement::identity(ambient);
  const auto members = j.members();
  for (std::size_t t = 0; t < members.size(); ++t) out.tables_[members[t]] = fJ.tables_[t];
  return out;
}

Point project_point(const GwpGroup& group, const Point& delta, IndexSet subset) {
  if (!subset.is_subset_of(group.poset().all())) throw InputError("subset is not contained in the poset");
  Point out;
  for (Index i : subset.members()) out.coords.push_back(delta.coords.at(i));
  return out;
}

bool equiv(const GwpGroup& group, const Point& gamma, const Point& delta, IndexSet ancestral) {
  if (!group.poset().is_ancestral(ancestral)) throw InputError("equivalence needs an ancestral subset");
  return project_point(group, gamma, ancestral) == project_point(group, delta, ancestral);
}

std::size_t checked_point_count(const GwpGroup& group, std::size_t max_delta) {
  const BigInt c = group.point_count();
  if (c > max_delta)
    throw GuardError("product domain has " + c.str() + " points, above the limit of " +
                     std::to_string(max_delta));
  return static_cast<std::size_t>(c);
}

std::size_t point_rank(const GwpGroup& group, const Point& delta) {
  std::size_t r = 0;
  for (Index i = 0; i < group.index_count(); ++i) r = r * group.domain_size(i) + delta.coords.at(i);
  return r;
}

Point point_at(const GwpGroup& group, std::size_t rank) {
  Point p;
  p.coords.resize(group.index_count());
  for (Index i = group.index_count(); i-- > 0;) {
    p.coords[i] = static_cast<std::uint32_t>(rank % group.domain_size(i));
    rank /= group.domain_size(i);
  }
  return p;
}

Permutation as_permutation(const GwpElement& f, std::size_t max_delta) {
  const GwpGroup& g = f.group();
  const std::size_t count = checked_point_count(g, max_delta);
  std::vector<Permutation::point_type> images(count);
  Point delta;
  delta.coords.assign(g.index_count(), 0);
  for (std::size_t r = 0; r < count; ++r) {
    images[r] = static_cast<Permutation::point_type>(point_rank(g, act(delta, f)));
    // Advance delta lexicographically.
    for (Index i = g.index_count(); i-- > 0;) {
      if (++delta.coords[i] < g.domain_size(i)) break;
      delta.coords[i] = 0;
    }
  }
  return Permutation::from_images(std::move(images));
}

PermGroup image_group(const GwpGroup& group, const std::vector<GwpElement>& gens, std::size_t max_delta) {
  const std::size_t count = checked_point_count(group, max_delta);
  std::vector<Permutation> perms;
  for (const auto& f : gens) {
    require_same_group(f.group(), group);
    perms.push_back(as_permutation(f, max_delta));
  }
  return PermGroup(count, std::move(perms));
}

std::vector<GwpElement> enumerate_elements(const GwpGroup& group, std::size_t limit) {
  const BigInt order = group.theoretical_order();
  if (order > limit)
    throw GuardError("group of order " + order.str() + " exceeds the enumeration limit of " +
                     std::to_string(limit));
  // One digit per table entry, each ranging over the factor's elements.
  std::vector<std::vector<Permutation>> factor_elems;
  std::vector<std::pair<Index, std::size_t>> slots;
  for (Index i = 0; i < group.index_count(); ++i) {
    factor_elems.push_back(group.factor(i).elements(limit));
    for (std::size_t w = 0; w < group.upset_size(i); ++w) slots.emplace_back(i, w);
  }
  std::vector<std::size_t> digit(slots.size(), 0);
  std::vector<GwpElement> out;
  out.reserve(static_cast<std::size_t>(order));
  GwpElement current = GwpElement::identity(group);
  for (std::size_t s = 0; s < slots.size(); ++s)
    current.tables_[slots[s].first][slots[s].second] = factor_elems[slots[s].first][0];
  while (true) {
    out.push_back(current);
    std::size_t s = slots.size();
    while (s-- > 0) {
      const auto [i, w] = slots[s];
      if (++digit[s] < factor_elems[i].size()) {
        current.tables_[i][w] = factor_elems[i][digit[s]];
        break;
      }
      digit[s] = 0;
      current.tables_[i][w] = factor_elems[i][0];
    }
    if (s == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

GwpElement random_element(const GwpGroup& group, Rng& rng) {
  GwpElement f = GwpElement::identity(group);
  for (Index i = 0; i < group.index_count(); ++i)
    for (auto& p : f.tables_[i]) p = group.factor(i).random_element(rng);
  return f;
}

// ---------------------------------------------------------------------------

ProjectionKernel::ProjectionKernel(const GwpGroup& group, IndexSet j, IndexSet k)
    : domain_(group.restrict(j)) {
  if (!group.poset().is_ancestral(k)) throw InputError("kernel index set K is not ancestral");
  if (!k.is_subset_of(j)) throw InputError("kernel index set K is not contained in J");
  for (Index x : k.members())
    trivial_indices_.push_back(domain_.poset().index_of(group.poset().label(x)));
}

bool ProjectionKernel::contains(const GwpElement& fJ) const {
  require_same_group(fJ.group(), domain_);
  return std::all_of(trivial_indices_.begin(), trivial_indices_.end(),
                     [&](Index x) { return fJ.is_trivial_at(x); });
}

} // namespace gwp
