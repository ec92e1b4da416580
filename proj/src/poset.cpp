#include "gwp/poset.hpp"

#include <algorithm>
#include <set>

#include "gwp/error.hpp"

namespace gwp {

IndexSet IndexSet::of(std::initializer_list<Index> members) {
  IndexSet s;
  for (Index i : members) s.insert(i);
  return s;
}

IndexSet IndexSet::range(std::size_t n) {
  if (n >= kMaxSize) return IndexSet{~std::uint64_t{0}};
  return IndexSet{(std::uint64_t{1} << n) - 1};
}

std::vector<Index> IndexSet::members() const {
  std::vector<Index> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1)
    out.push_back(static_cast<Index>(std::countr_zero(b)));
  return out;
}

std::string_view to_string(SmallShape shape) {
  switch (shape) {
  case SmallShape::Chain: return "chain";
  case SmallShape::Antichain: return "antichain";
  case SmallShape::Triangle: return "triangle";
  case SmallShape::Pyramid: return "pyramid";
  case SmallShape::Wrdi: return "wrdi";
  case SmallShape::NotSmall: break;
  }
  return "not-small";
}

Poset Poset::from_covers(std::vector<std::string> labels,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
  if (labels.empty()) throw InputError("poset needs at least one element");
  if (labels.size() >= IndexSet::kMaxSize)
    throw InputError("poset has too many elements (limit 63)");
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw InputError("duplicate element label");
  for (const auto& l : labels)
    if (l.empty()) throw InputError("empty element label");

  Poset p;
  p.labels_ = std::move(labels);
  p.above_.assign(p.size(), IndexSet{});
  for (const auto& [lo, hi] : covers) {
    Index a = p.index_of(lo);
    Index b = p.index_of(hi);
    if (a == b) throw InputError("cover relation '" + lo + " < " + hi + "' is reflexive");
    p.above_[a].insert(b);
  }
  // Warshall closure.
  const std::size_t n = p.size();
  for (Index k = 0; k < n; ++k)
    for (Index i = 0; i < n; ++i)
      if (p.above_[i].contains(k)) p.above_[i] = p.above_[i] | p.above_[k];
  for (Index i = 0; i < n; ++i)
    if (p.above_[i].contains(i))
      throw InputError("cover relations contain a cycle through '" + p.labels_[i] + "'");
  return p;
}

Poset Poset::chain(const std::vector<std::string>& bottom_to_top) {
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i + 1 < bottom_to_top.size(); ++i)
    covers.emplace_back(bottom_to_top[i], bottom_to_top[i + 1]);
  return from_covers(bottom_to_top, covers);
}

Poset Poset::antichain(std::vector<std::string> labels) {
  return from_covers(std::move(labels), {});
}

std::optional<Index> Poset::find(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<Index>(it - labels_.begin());
}

Index Poset::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw InputError("unknown element label '" + std::string(label) + "'");
}

IndexSet Poset::up_set(Index i) const {
  if (i >= size()) throw InputError("index out of range");
  return above_[i];
}

IndexSet Poset::down_set(Index i) const {
  IndexSet s;
  for (Index j = 0; j < size(); ++j)
    if (above_[j].contains(i)) s.insert(j);
  return s;
}

bool Poset::is_ancestral(IndexSet s) const {
  if (!s.is_subset_of(all())) throw InputError("subset is not contained in the poset");
  for (Index j : s.members())
    if (!above_[j].is_subset_of(s)) return false;
  return true;
}

std::vector<Index> Poset::minimal_elements() const {
  std::vector<Index> out;
  for (Index i = 0; i < size(); ++i)
    if (down_set(i).empty()) out.push_back(i);
  return out;
}

std::vector<Index> Poset::maximal_elements() const {
  std::vector<Index> out;
  for (Index i = 0; i < size(); ++i)
    if (above_[i].empty()) out.push_back(i);
  return out;
}

bool Poset::incomparable(Index a, Index b) const {
  if (a == b) throw InputError("incomparability needs two distinct elements");
  return !less(a, b) && !less(b, a);
}

bool Poset::is_chain() const {
  for (Index a = 0; a < size(); ++a)
    for (Index b = a + 1; b < size(); ++b)
      if (incomparable(a, b)) return false;
  return true;
}

bool Poset::is_antichain() const {
  return std::all_of(above_.begin(), above_.end(), [](IndexSet s) { return s.empty(); });
}

std::vector<Index> Poset::chain_order() const {
  if (!is_chain()) return {};
  std::vector<Index> order(size());
  for (Index i = 0; i < size(); ++i) order[i] = i;
  // In a chain the bottom element has the largest up-set.
  std::sort(order.begin(), order.end(),
            [&](Index a, Index b) { return above_[a].size() > above_[b].size(); });
  return order;
}

Poset Poset::induced(IndexSet subset) const {
  if (!subset.is_subset_of(all())) throw InputError("subset is not contained in the poset");
  Poset p;
  std::vector<Index> keep = subset.members();
  std::vector<std::optional<Index>> remap(size());
  for (Index n = 0; n < keep.size(); ++n) {
    remap[keep[n]] = n;
    p.labels_.push_back(labels_[keep[n]]);
  }
  p.above_.assign(keep.size(), IndexSet{});
  for (Index n = 0; n < keep.size(); ++n)
    for (Index j : above_[keep[n]].members())
      if (remap[j]) p.above_[n].insert(*remap[j]);
  return p;
}

std::vector<std::pair<Index, Index>> Poset::relations() const {
  std::vector<std::pair<Index, Index>> out;
  for (Index a = 0; a < size(); ++a)
    for (Index b : above_[a].members()) out.emplace_back(a, b);
  return out;
}

std::vector<std::pair<Index, Index>> Poset::covers() const {
  std::vector<std::pair<Index, Index>> out;
  for (auto [a, b] : relations()) {
    bool covered = true;
    for (Index c : above_[a].members())
      if (above_[c].contains(b)) { covered = false; break; }
    if (covered) out.emplace_back(a, b);
  }
  return out;
}

SmallClassification Poset::classify_small() const {
  SmallClassification r;
  const std::size_t n = size();
  if (n != 2 && n != 3) return r;

  const auto rel = relations();
  if (rel.empty()) {
    r.shape = SmallShape::Antichain;
    const char* names[] = {"i", "j", "k"};
    for (Index x = 0; x < n; ++x) r.roles[names[x]] = x;
    return r;
  }
  if (is_chain()) {
    r.shape = SmallShape::Chain;
    const auto order = chain_order();
    const char* names[] = {"i", "j", "k"};
    for (Index x = 0; x < n; ++x) r.roles[names[x]] = order[x];
    return r;
  }
  // n == 3 with one or two relations.
  if (rel.size() == 1) {
    r.shape = SmallShape::Wrdi;
    auto [lo, hi] = rel.front();
    r.roles["i"] = lo;
    r.roles["k"] = hi;
    r.roles["j"] = 3 - lo - hi;
    return r;
  }
  // Two relations share either their lower or their upper end.
  const auto& [a0, b0] = rel[0];
  const auto& [a1, b1] = rel[1];
  if (a0 == a1) {
    r.shape = SmallShape::Triangle;
    r.roles["i"] = a0;
    r.roles["j"] = std::min(b0, b1);
    r.roles["k"] = std::max(b0, b1);
  } else {
    r.shape = SmallShape::Pyramid;
    r.roles["i"] = std::min(a0, a1);
    r.roles["j"] = std::max(a0, a1);
    r.roles["k"] = b0;
  }
  return r;
}

} // namespace gwp
