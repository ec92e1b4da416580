#include "gwp/structure.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "gwp/error.hpp"
#include "gwp/wreath.hpp"

namespace gwp {

std::string to_string(SubgroupKind kind) {
  switch (kind) {
  case SubgroupKind::L: return "L";
  case SubgroupKind::H: return "H";
  case SubgroupKind::HJ: return "HJ";
  case SubgroupKind::Dbar: return "Dbar";
  case SubgroupKind::D: return "D";
  case SubgroupKind::DJ: return "DJ";
  }
  return "?";
}

Index translate_index(const GwpGroup& from, Index i, const GwpGroup& to) {
  return to.poset().index_of(from.poset().label(i));
}

IndexSet translate_set(const GwpGroup& from, IndexSet s, const GwpGroup& to) {
  IndexSet out;
  for (Index i : s.members()) out.insert(translate_index(from, i, to));
  return out;
}

namespace {

void require_index(const GwpGroup& g, Index i) {
  if (i >= g.index_count()) throw InputError("index " + std::to_string(i) + " is out of range");
}

void require_minimal(const GwpGroup& g, Index i) {
  require_index(g, i);
  const auto mins = g.poset().minimal_elements();
  if (std::find(mins.begin(), mins.end(), i) == mins.end())
    throw InputError("'" + g.poset().label(i) + "' is not minimal");
}

std::vector<GwpElement> planted_generators(const GwpGroup& g, Index i, std::optional<std::size_t> only_rank) {
  std::vector<GwpElement> out;
  for (std::size_t w = 0; w < g.upset_size(i); ++w) {
    if (only_rank && w != *only_rank) continue;
    for (const auto& s : g.factor(i).generators()) out.push_back(GwpElement::planted(g, i, w, s));
  }
  return out;
}

bool trivial_outside(const GwpElement& f, IndexSet keep) {
  for (Index j = 0; j < f.group().index_count(); ++j)
    if (!keep.contains(j) && !f.is_trivial_at(j)) return false;
  return true;
}

bool trivial_off_anchor(const GwpElement& f, Index i, std::size_t anchor) {
  const auto& t = f.table(i);
  for (std::size_t w = 0; w < t.size(); ++w)
    if (w != anchor && !t[w].is_identity()) return false;
  return true;
}

BigInt power(const BigInt& base, std::size_t e) {
  BigInt out = 1;
  for (std::size_t k = 0; k < e; ++k) out *= base;
  return out;
}

} // namespace

Subgroup members(const SubgroupSpec& spec, const GwpGroup& group) {
  switch (spec.kind) {
  case SubgroupKind::L: {
    require_index(group, spec.index);
    const Index j = spec.index;
    std::vector<GwpElement> gens;
    for (Index i = 0; i < group.index_count(); ++i)
      if (i != j)
        for (auto& g : planted_generators(group, i, std::nullopt)) gens.push_back(std::move(g));
    return {group, [j](const GwpElement& f) { return f.is_trivial_at(j); }, std::move(gens)};
  }
  case SubgroupKind::H: {
    require_index(group, spec.index);
    const IndexSet keep = IndexSet::of({spec.index});
    return {group, [keep](const GwpElement& f) { return trivial_outside(f, keep); },
            planted_generators(group, spec.index, std::nullopt)};
  }
  case SubgroupKind::Dbar: {
    if (!group.poset().is_ancestral(spec.subset)) throw InputError("subset is not ancestral");
    std::vector<GwpElement> gens;
    for (Index i : spec.subset.members())
      for (auto& g : planted_generators(group, i, std::nullopt)) gens.push_back(std::move(g));
    const IndexSet keep = spec.subset;
    return {group, [keep](const GwpElement& f) { return trivial_outside(f, keep); }, std::move(gens)};
  }
  case SubgroupKind::D: {
    require_index(group, spec.index);
    const Index i = spec.index;
    const std::size_t anchor = spec.anchor;
    if (anchor >= group.upset_size(i)) throw InputError("anchor is outside Delta_{A(i)}");
    const IndexSet keep = IndexSet::of({i});
    return {group,
            [keep, i, anchor](const GwpElement& f) { return trivial_outside(f, keep) && trivial_off_anchor(f, i, anchor); },
            planted_generators(group, i, anchor)};
  }
  case SubgroupKind::HJ:
  case SubgroupKind::DJ: {
    require_index(group, spec.index);
    if (!spec.subset.contains(spec.index)) throw InputError("index must lie in the subset");
    const GwpGroup sub = group.restrict(spec.subset);
    const Index i = translate_index(group, spec.index, sub);
    const IndexSet keep = IndexSet::of({i});
    if (spec.kind == SubgroupKind::HJ)
      return {sub, [keep](const GwpElement& f) { return trivial_outside(f, keep); },
              planted_generators(sub, i, std::nullopt)};
    const std::size_t anchor = spec.anchor;
    if (anchor >= sub.upset_size(i)) throw InputError("anchor is outside Delta_{A(i)}");
    return {sub,
            [keep, i, anchor](const GwpElement& f) { return trivial_outside(f, keep) && trivial_off_anchor(f, i, anchor); },
            planted_generators(sub, i, anchor)};
  }
  }
  throw InputError("unknown subgroup kind");
}

std::vector<GwpElement> close_elements(const GwpGroup& group, const std::vector<GwpElement>& gens,
                                       std::size_t limit) {
  std::unordered_set<GwpElement, GwpElementHash> seen;
  std::vector<GwpElement> out{GwpElement::identity(group)};
  seen.insert(out.front());
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : gens) {
      auto y = out[k] * g;
      if (seen.insert(y).second) {
        if (out.size() >= limit) throw GuardError("subgroup has more than " + std::to_string(limit) + " elements");
        out.push_back(std::move(y));
      }
    }
  return out;
}

FactorTuple theta(Index i, const GwpElement& f) {
  require_index(f.group(), i);
  if (!trivial_outside(f, IndexSet::of({i}))) throw InputError("element is not in H_i");
  return {i, f.table(i)};
}

GwpElement theta_inverse(const GwpGroup& group, const FactorTuple& t) {
  require_index(group, t.index);
  if (t.entries.size() != group.upset_size(t.index)) throw InputError("tuple has the wrong length");
  auto tables = GwpElement::identity(group).tables();
  tables[t.index] = t.entries;
  return GwpElement(group, std::move(tables));
}

FactorTuple tuple_multiply(const FactorTuple& a, const FactorTuple& b) {
  if (a.index != b.index || a.entries.size() != b.entries.size()) throw InputError("tuples do not match");
  FactorTuple out{a.index, {}};
  for (std::size_t w = 0; w < a.entries.size(); ++w) out.entries.push_back(a.entries[w] * b.entries[w]);
  return out;
}

FactorTuple conj_action(const GwpGroup& owner, const FactorTuple& t, const GwpElement& f) {
  require_index(owner, t.index);
  if (t.entries.size() != owner.upset_size(t.index)) throw InputError("tuple has the wrong length");
  IndexSet up;
  for (Index j : owner.upset(t.index)) {
    const auto k = f.group().poset().find(owner.poset().label(j));
    if (!k) throw InputError("acting group does not contain A(i)");
    up.insert(*k);
  }
  const auto g = project_element(invert(f), up);
  FactorTuple out{t.index, {}};
  out.entries.reserve(t.entries.size());
  for (std::size_t w = 0; w < t.entries.size(); ++w)
    out.entries.push_back(t.entries[point_rank(g.group(), act(point_at(g.group(), w), g))]);
  return out;
}

std::pair<GwpElement, GwpElement> semidirect_factor(const GwpElement& f, Index i) {
  const GwpGroup& g = f.group();
  require_minimal(g, i);
  auto fbar = embed(project_element(f, g.poset().all().without(i)), g);
  auto h = f * invert(fbar);
  return {std::move(h), std::move(fbar)};
}

SemidirectReport semidirect_witness(const GwpGroup& group, Index i, const WitnessOptions& opt) {
  require_minimal(group, i);
  const IndexSet j = group.poset().all().without(i);
  const Subgroup h = members(SubgroupSpec::H(i), group);
  const Subgroup fbar = members(SubgroupSpec::Dbar(j), group);
  const auto all_gens = generating_set_H(group);

  SemidirectReport r;
  r.index = i;
  r.h_order = image_group(group, h.generators, opt.max_delta).order();
  r.fbar_order = image_group(group, fbar.generators, opt.max_delta).order();
  r.group_order = group.theoretical_order();
  r.order_product_ok = r.h_order * r.fbar_order == r.group_order;
  r.factorization_ok = r.normal = r.intersection_trivial = true;

  auto check_factor = [&](const GwpElement& f) {
    auto [hf, bf] = semidirect_factor(f, i);
    if (!h.contains(hf) || !fbar.contains(bf) || !(hf * bf == f)) r.factorization_ok = false;
    return std::pair{std::move(hf), std::move(bf)};
  };

  if (r.group_order <= opt.exhaustive_limit) {
    r.exhaustive = true;
    std::size_t in_h = 0, in_fbar = 0, in_both = 0;
    std::unordered_set<GwpElement, GwpElementHash> factors_seen;
    for (const auto& f : enumerate_elements(group, opt.exhaustive_limit)) {
      const bool a = h.contains(f), b = fbar.contains(f);
      in_h += a;
      in_fbar += b;
      in_both += a && b;
      if (a)
        for (const auto& s : all_gens)
          if (!h.contains(conjugate(f, s))) r.normal = false;
      auto [hf, bf] = check_factor(f);
      factors_seen.insert(hf);
    }
    r.intersection_trivial = in_both == 1;
    if (in_h != r.h_order || in_fbar != r.fbar_order || factors_seen.size() != in_h) r.factorization_ok = false;
  } else {
    Rng rng(opt.seed);
    for (std::size_t s = 0; s < opt.samples; ++s) {
      const auto f = random_element(group, rng);
      auto [hf, bf] = check_factor(f);
      if (fbar.contains(hf) && !hf.is_identity()) r.intersection_trivial = false;
      if (!h.contains(conjugate(hf, random_element(group, rng)))) r.normal = false;
    }
  }
  return r;
}

bool hi_hj_direct_product(const GwpGroup& group, Index i, Index j, const WitnessOptions& opt) {
  require_minimal(group, i);
  require_minimal(group, j);
  if (i == j) throw InputError("the two minimal elements must differ");
  const Subgroup hi = members(SubgroupSpec::H(i), group);
  const Subgroup hj = members(SubgroupSpec::H(j), group);
  for (const auto& a : hi.generators)
    for (const auto& b : hj.generators)
      if (!(a * b == b * a)) return false;

  const BigInt oi = image_group(group, hi.generators, opt.max_delta).order();
  if (oi <= opt.exhaustive_limit) {
    for (const auto& a : close_elements(group, hi.generators, opt.exhaustive_limit))
      if (hj.contains(a) && !a.is_identity()) return false;
  } else {
    Rng rng(opt.seed);
    for (std::size_t s = 0; s < opt.samples; ++s) {
      const auto a = semidirect_factor(random_element(group, rng), i).first;
      if (hj.contains(a) && !a.is_identity()) return false;
    }
  }
  auto both = hi.generators;
  both.insert(both.end(), hj.generators.begin(), hj.generators.end());
  return image_group(group, both, opt.max_delta).order() ==
         oi * image_group(group, hj.generators, opt.max_delta).order();
}

namespace {

struct PermVecHash {
  std::size_t operator()(const std::vector<Permutation>& v) const noexcept {
    std::size_t seed = v.size();
    for (const auto& p : v) seed ^= PermutationHash{}(p) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    return seed;
  }
};

/// Compares `group` with a model through `psi`, which must send F into the
/// model (`inside`) bijectively and multiplicatively. Model elements are
/// hashed through `key`, a vector of permutations.
template <class Model, class Psi, class Mul, class Inside, class Key>
IsomorphismCheck check_isomorphism(const GwpGroup& group, BigInt model_order, Psi psi, Mul mul, Inside inside,
                                   Key key, const WitnessOptions& opt) {
  IsomorphismCheck c;
  c.model_order = std::move(model_order);
  c.group_order = group.theoretical_order();
  c.homomorphism = true;
  if (c.group_order <= opt.exhaustive_limit) {
    c.exhaustive = true;
    const auto elems = enumerate_elements(group, opt.exhaustive_limit);
    std::unordered_map<GwpElement, std::size_t, GwpElementHash> index;
    std::vector<Model> images;
    std::unordered_set<std::vector<Permutation>, PermVecHash> distinct;
    bool all_inside = true;
    for (std::size_t k = 0; k < elems.size(); ++k) {
      index.emplace(elems[k], k);
      images.push_back(psi(elems[k]));
      all_inside = all_inside && inside(images.back());
      distinct.insert(key(images.back()));
    }
    c.bijective = all_inside && distinct.size() == elems.size() && c.model_order == elems.size();
    for (std::size_t a = 0; a < elems.size() && c.homomorphism; ++a)
      for (std::size_t b = 0; b < elems.size(); ++b)
        if (!(images[index.at(elems[a] * elems[b])] == mul(images[a], images[b]))) {
          c.homomorphism = false;
          break;
        }
  } else {
    Rng rng(opt.seed);
    bool all_inside = true;
    for (std::size_t s = 0; s < opt.samples; ++s) {
      const auto a = random_element(group, rng);
      const auto b = random_element(group, rng);
      const auto pa = psi(a);
      all_inside = all_inside && inside(pa);
      if (!(psi(a * b) == mul(pa, psi(b)))) c.homomorphism = false;
    }
    c.bijective = all_inside && c.model_order == c.group_order;
  }
  return c;
}

using WElem = StandaloneWreath::Element;

std::vector<Permutation> wreath_key(const WElem& e) {
  auto k = e.base;
  k.push_back(e.top);
  return k;
}

/// Coordinates of `group` from a point of one of its restrictions.
std::vector<std::uint32_t> lift_coords(const GwpGroup& sub, const Point& p, const GwpGroup& group) {
  std::vector<std::uint32_t> coords(group.index_count(), 0);
  for (Index t = 0; t < sub.index_count(); ++t) coords[translate_index(sub, t, group)] = p.coords[t];
  return coords;
}

} // namespace

bool WreathReport::ok() const { return check.ok() && (!unique_minimal || faithful_top); }

WreathReport wreath_witness(const GwpGroup& group, Index i, const WitnessOptions& opt) {
  require_minimal(group, i);
  const IndexSet j = group.poset().all().without(i);
  const GwpGroup fj = group.restrict(j);
  const std::size_t ny = checked_point_count(fj, opt.max_delta);
  std::vector<std::uint32_t> projection(ny);
  for (std::size_t y = 0; y < ny; ++y)
    projection[y] = static_cast<std::uint32_t>(group.upset_rank(i, lift_coords(fj, point_at(fj, y), group)));

  const StandaloneWreath w(group.factor(i), image_group(fj, generating_set_H(fj), opt.max_delta),
                           std::move(projection), group.upset_size(i));
  auto psi = [&](const GwpElement& g) { return WElem{g.table(i), as_permutation(project_element(g, j), opt.max_delta)}; };

  WreathReport r;
  r.index = i;
  r.x_size = w.x_size();
  r.check = check_isomorphism<WElem>(
      group, w.order(), psi, [&](const WElem& a, const WElem& b) { return w.multiply(a, b); },
      [&](const WElem& e) { return w.contains(e); }, wreath_key, opt);
  r.unique_minimal = group.poset().minimal_elements().size() == 1;
  std::vector<Permutation> on_x;
  for (const auto& t : w.top_group().generators()) {
    const auto img = w.induced(t);
    on_x.push_back(Permutation::from_images(std::vector<Permutation::point_type>(img.begin(), img.end())));
  }
  r.faithful_top = PermGroup(w.x_size(), on_x).order() == w.top_group().order();
  r.direct_factor = group.upset(i).empty();
  return r;
}

IsomorphismCheck chain_decompose(const GwpGroup& group, const WitnessOptions& opt) {
  if (!group.poset().is_chain()) throw InputError("poset is not a chain");
  const auto order = group.poset().chain_order(); // bottom first
  const std::size_t n = order.size();
  const auto gens = generating_set_H(group);

  // levels[k] is the wreath product for the chain order[k..n-1]; its natural
  // domain is Delta_{order[k]} x Y_k.
  std::vector<std::unique_ptr<StandaloneWreath>> levels(n);
  std::vector<std::size_t> y_sizes(n);

  std::function<WElem(const GwpElement&, std::size_t)> psi = [&](const GwpElement& g, std::size_t k) {
    if (k + 1 == n) return WElem{g.table(order[k]), Permutation::identity(1)};
    return WElem{g.table(order[k]), levels[k + 1]->natural_action(psi(g, k + 1))};
  };

  bool tops_faithful = true;
  for (std::size_t k = n; k-- > 0;) {
    const Index c = order[k];
    if (k + 1 == n) {
      y_sizes[k] = 1;
      levels[k] = std::make_unique<StandaloneWreath>(group.factor(c), PermGroup(1), std::vector<std::uint32_t>{0}, 1);
      continue;
    }
    y_sizes[k] = group.domain_size(order[k + 1]) * y_sizes[k + 1];
    std::vector<std::uint32_t> projection(y_sizes[k]);
    for (std::size_t y = 0; y < y_sizes[k]; ++y) {
      std::vector<std::uint32_t> coords(group.index_count(), 0);
      std::size_t rest = y;
      for (std::size_t t = k + 1; t < n; ++t) {
        coords[order[t]] = static_cast<std::uint32_t>(rest / y_sizes[t]);
        rest %= y_sizes[t];
      }
      projection[y] = static_cast<std::uint32_t>(group.upset_rank(c, coords));
    }
    std::vector<Permutation> top_gens;
    for (const auto& g : gens) top_gens.push_back(levels[k + 1]->natural_action(psi(g, k + 1)));
    PermGroup top(y_sizes[k], top_gens);
    tops_faithful = tops_faithful && top.order() == levels[k + 1]->order();
    levels[k] = std::make_unique<StandaloneWreath>(group.factor(c), std::move(top), std::move(projection),
                                                   group.upset_size(c));
  }

  const auto& w = *levels[0];
  auto c = check_isomorphism<WElem>(
      group, w.order(), [&](const GwpElement& g) { return psi(g, 0); },
      [&](const WElem& a, const WElem& b) { return w.multiply(a, b); }, [&](const WElem& e) { return w.contains(e); },
      wreath_key, opt);
  c.bijective = c.bijective && tops_faithful;
  return c;
}

IsomorphismCheck antichain_decompose(const GwpGroup& group, const WitnessOptions& opt) {
  if (!group.poset().is_antichain()) throw InputError("poset is not an antichain");
  const std::size_t n = group.index_count();
  BigInt order = 1;
  for (Index i = 0; i < n; ++i) order *= group.factor(i).order();
  using Tuple = std::vector<Permutation>;
  return check_isomorphism<Tuple>(
      group, order,
      [&](const GwpElement& g) {
        Tuple t;
        for (Index i = 0; i < n; ++i) t.push_back(g.entry(i, 0));
        return t;
      },
      [&](const Tuple& a, const Tuple& b) {
        Tuple t;
        for (Index i = 0; i < n; ++i) t.push_back(a[i] * b[i]);
        return t;
      },
      [&](const Tuple& t) {
        for (Index i = 0; i < n; ++i)
          if (!group.factor(i).contains(t[i])) return false;
        return true;
      },
      [](const Tuple& t) { return t; }, opt);
}

namespace {

/// The pyramid i < k > j as (G_i x G_j) wr_{Delta_k} G_k.
IsomorphismCheck pyramid_check(const GwpGroup& group, Index i, Index j, Index k, const WitnessOptions& opt) {
  const std::size_t l = group.domain_size(i);
  const std::size_t m = group.domain_size(j);
  const std::size_t n = group.domain_size(k);
  auto shift = [&](const Permutation& a, const Permutation& b) {
    std::vector<Permutation::point_type> img(l + m);
    for (std::uint32_t p = 0; p < l; ++p) img[p] = a[p];
    for (std::uint32_t p = 0; p < m; ++p) img[l + p] = static_cast<Permutation::point_type>(l + b[p]);
    return Permutation::from_images(std::move(img));
  };
  std::vector<Permutation> base_gens;
  for (const auto& a : group.factor(i).generators()) base_gens.push_back(shift(a, Permutation::identity(m)));
  for (const auto& b : group.factor(j).generators()) base_gens.push_back(shift(Permutation::identity(l), b));
  std::vector<std::uint32_t> projection(n);
  for (std::uint32_t y = 0; y < n; ++y) projection[y] = y;
  const StandaloneWreath w(PermGroup(l + m, base_gens), group.factor(k), std::move(projection), n);
  return check_isomorphism<WElem>(
      group, w.order(),
      [&](const GwpElement& g) {
        WElem e{{}, g.entry(k, 0)};
        for (std::size_t y = 0; y < n; ++y) e.base.push_back(shift(g.entry(i, y), g.entry(j, y)));
        return e;
      },
      [&](const WElem& a, const WElem& b) { return w.multiply(a, b); }, [&](const WElem& e) { return w.contains(e); },
      wreath_key, opt);
}

std::string factor_name(const GwpGroup& g, Index i) {
  std::ostringstream os;
  if (g.factor_is_symmetric(i))
    os << "Sym(" << g.domain_size(i) << ")";
  else
    os << "G_" << g.poset().label(i) << " (order " << g.factor(i).order() << " on " << g.domain_size(i) << " points)";
  return os.str();
}

std::string set_name(const GwpGroup& g) {
  std::string s = "F_{";
  for (Index i = 0; i < g.index_count(); ++i) s += (i ? "," : "") + g.poset().label(i);
  return s + "}";
}

DecompositionNode factor_node(const GwpGroup& g, Index i) {
  DecompositionNode node;
  node.kind = "factor";
  node.labels = {g.poset().label(i)};
  node.description = factor_name(g, i);
  node.order = g.factor(i).order();
  return node;
}

} // namespace

bool DecompositionNode::ok() const {
  for (const auto& [name, passed] : checks)
    if (!passed) return false;
  for (const auto& c : children)
    if (!c.ok()) return false;
  return true;
}

DecompositionNode decompose(const GwpGroup& group, const WitnessOptions& opt) {
  const Poset& p = group.poset();
  if (group.index_count() == 1) return factor_node(group, 0);

  DecompositionNode node;
  node.labels = p.labels();
  node.order = group.theoretical_order();

  if (p.is_antichain()) {
    node.kind = "product";
    node.description = set_name(group) + " = direct product of the factors";
    for (Index i = 0; i < group.index_count(); ++i) node.children.push_back(factor_node(group, i));
    node.checks.emplace_back("direct product isomorphism", antichain_decompose(group, opt).ok());
    return node;
  }

  const Index i = p.minimal_elements().front();
  const IndexSet j = p.all().without(i);
  const GwpGroup fj = group.restrict(j);
  const auto report = wreath_witness(group, i, opt);
  node.children.push_back(factor_node(group, i));
  node.children.push_back(decompose(fj, opt));

  if (report.direct_factor) {
    node.kind = "product";
    node.description = set_name(group) + " = " + factor_name(group, i) + " x " + set_name(fj);
    node.checks.emplace_back("direct factor isomorphism", report.ok());
  } else {
    node.kind = "wreath";
    std::ostringstream os;
    os << set_name(group) << " = " << factor_name(group, i) << " wr_{Delta_A(" << p.label(i) << "), " << report.x_size
       << " points} " << set_name(fj);
    node.description = os.str();
    node.checks.emplace_back("wreath isomorphism", report.ok());
    if (report.unique_minimal) node.checks.emplace_back("faithful top action", report.faithful_top);
  }
  if (p.is_chain()) node.checks.emplace_back("iterated wreath isomorphism", chain_decompose(group, opt).ok());

  const auto shape = p.classify_small();
  auto role = [&](const char* r) { return shape.roles.at(r); };
  auto sym = [&](const char* r) { return "Sym(" + std::to_string(group.domain_size(role(r))) + ")"; };
  if (group.all_symmetric()) {
    switch (shape.shape) {
    case SmallShape::Pyramid:
      node.notes.push_back("F = (" + sym("i") + " x " + sym("j") + ") wr " + sym("k"));
      node.checks.emplace_back("pyramid as (G_i x G_j) wr G_k", pyramid_check(group, role("i"), role("j"), role("k"), opt).ok());
      break;
    case SmallShape::Triangle:
      node.notes.push_back("F = " + sym("i") + " wr_{Delta_j x Delta_k} (" + sym("j") + " x " + sym("k") + ")");
      break;
    case SmallShape::Wrdi:
      node.notes.push_back("F = " + sym("j") + " x (" + sym("i") + " wr " + sym("k") + ")");
      break;
    default: break;
    }
  }
  return node;
}

nlohmann::json to_json(const DecompositionNode& node) {
  nlohmann::json j;
  j["kind"] = node.kind;
  j["labels"] = node.labels;
  j["description"] = node.description;
  j["order"] = node.order.str();
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& [name, passed] : node.checks) checks.push_back({{"name", name}, {"passed", passed}});
  j["checks"] = checks;
  j["notes"] = node.notes;
  nlohmann::json children = nlohmann::json::array();
  for (const auto& c : node.children) children.push_back(to_json(c));
  j["children"] = children;
  return j;
}

namespace {

void write_text(std::ostream& os, const DecompositionNode& node, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  os << pad << node.description << "  [order " << node.order << "]\n";
  for (const auto& n : node.notes) os << pad << "  note: " << n << '\n';
  for (const auto& [name, passed] : node.checks) os << pad << "  check " << name << ": " << (passed ? "ok" : "FAILED") << '\n';
  for (const auto& c : node.children) write_text(os, c, depth + 1);
}

} // namespace

std::string to_text(const DecompositionNode& node) {
  std::ostringstream os;
  write_text(os, node, 0);
  return os.str();
}

std::vector<GwpElement> generating_set_H(const GwpGroup& group) {
  std::vector<GwpElement> out;
  for (Index i = 0; i < group.index_count(); ++i)
    for (auto& g : planted_generators(group, i, std::nullopt)) out.push_back(std::move(g));
  return out;
}

std::vector<GwpElement> generating_set_D(const GwpGroup& group) {
  if (!group.all_transitive()) throw InputError("generation by D_i needs every factor to be transitive");
  std::vector<GwpElement> out;
  for (Index i = 0; i < group.index_count(); ++i)
    for (auto& g : planted_generators(group, i, 0)) out.push_back(std::move(g));
  return out;
}

bool conjugate_generation_check(const GwpGroup& group, Index i) {
  require_minimal(group, i);
  for (Index j : group.upset(i))
    if (!group.factor(j).is_transitive())
      throw InputError("factor of '" + group.poset().label(j) + "' is not transitive");
  const Subgroup h = members(SubgroupSpec::H(i), group);
  const auto fbar = members(SubgroupSpec::Dbar(group.poset().all().without(i)), group).generators;

  // Orbit of the D_i generators under conjugation by F-bar_J.
  std::unordered_set<GwpElement, GwpElementHash> seen;
  std::deque<GwpElement> queue;
  for (auto& d : members(SubgroupSpec::D(i), group).generators)
    if (seen.insert(d).second) queue.push_back(d);
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (const auto& f : fbar) {
      auto y = conjugate(x, f);
      if (!h.contains(y)) return false;
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  const std::vector<GwpElement> conjugates(seen.begin(), seen.end());
  return image_group(group, conjugates).order() == power(group.factor(i).order(), group.upset_size(i));
}

} // namespace gwp
