#include "gwp/verify.hpp"

#include <deque>
#include <map>
#include <set>
#include <unordered_set>

#include "gwp/structure.hpp"

namespace gwp {

namespace {

using ElementSet = std::unordered_set<GwpElement, GwpElementHash>;

class Recorder {
public:
  explicit Recorder(std::string instance) : instance_(std::move(instance)) {}

  CheckOutcome& start(std::string name, bool exhaustive) {
    out_.push_back({instance_, std::move(name), true, 0, exhaustive, {}});
    return out_.back();
  }
  std::vector<CheckOutcome> take() { return {out_.begin(), out_.end()}; }

private:
  std::string instance_;
  std::deque<CheckOutcome> out_;
};

void expect(CheckOutcome& c, bool ok, const std::string& what = {}) {
  ++c.cases;
  if (!ok && c.passed) {
    c.passed = false;
    c.detail = what;
  }
}

std::vector<IndexSet> ancestral_sets(const Poset& p) {
  std::vector<IndexSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << p.size()); ++m)
    if (p.is_ancestral(IndexSet{m})) out.push_back(IndexSet{m});
  return out;
}

std::vector<Point> all_points(const GwpGroup& g) {
  const auto n = checked_point_count(g, DeskGuards{}.max_delta);
  std::vector<Point> out;
  for (std::size_t r = 0; r < n; ++r) out.push_back(point_at(g, r));
  return out;
}

std::string set_label(const GwpGroup& g, IndexSet s) {
  std::string out = "{";
  bool first = true;
  for (Index i : s.members()) {
    out += (first ? "" : ",") + g.poset().label(i);
    first = false;
  }
  return out + "}";
}

BigInt power(const BigInt& b, std::size_t e) {
  BigInt r = 1;
  for (std::size_t k = 0; k < e; ++k) r *= b;
  return r;
}

} // namespace

std::vector<CheckOutcome> lemma_suite(const NamedInstance& inst, const SuiteOptions& opt) {
  const GwpGroup& g = inst.group;
  const Poset& p = g.poset();
  Recorder rec(inst.name);
  Rng rng(opt.seed);
  const WitnessOptions wopt{opt.exhaustive_limit, opt.samples, opt.seed, DeskGuards{}.max_delta};

  const bool exhaustive = g.theoretical_order() <= opt.exhaustive_limit;
  std::vector<GwpElement> sample;
  if (exhaustive) {
    sample = enumerate_elements(g, opt.exhaustive_limit);
  } else {
    for (std::size_t s = 0; s < opt.samples; ++s) sample.push_back(random_element(g, rng));
  }
  const auto points = all_points(g);
  const auto ancestral = ancestral_sets(p);
  const auto mins = p.minimal_elements();

  {
    auto& c = rec.start("equivalence preservation", exhaustive);
    for (auto j : ancestral)
      for (const auto& f : sample) {
        std::map<Point, Point> image;
        for (const auto& d : points) {
          const auto [it, fresh] = image.emplace(project_point(g, d, j), project_point(g, act(d, f), j));
          expect(c, fresh || it->second == project_point(g, act(d, f), j), "J = " + set_label(g, j));
        }
      }
  }
  {
    auto& c = rec.start("projection compatibility", exhaustive);
    for (auto j : ancestral)
      for (std::size_t s = 0; s < sample.size(); ++s) {
        const auto& f = sample[s];
        const auto& h = sample[(s + 1) % sample.size()];
        const auto fj = project_element(f, j);
        for (const auto& d : points)
          expect(c, act(project_point(g, d, j), fj) == project_point(g, act(d, f), j), "J = " + set_label(g, j));
        expect(c, project_element(f * h, j) == fj * project_element(h, j), "homomorphism, J = " + set_label(g, j));
      }
  }
  {
    auto& c = rec.start("nested projection compatibility", exhaustive);
    for (auto j : ancestral) {
      const GwpGroup fj = g.restrict(j);
      for (auto k : ancestral) {
        if (!k.is_subset_of(j)) continue;
        const IndexSet k_in_j = translate_set(g, k, fj);
        for (const auto& f : sample) {
          const auto pj = project_element(f, j);
          expect(c, project_element(pj, k_in_j) == project_element(f, k),
                 "J = " + set_label(g, j) + ", K = " + set_label(g, k));
          const auto& d = points[c.cases % points.size()];
          expect(c, project_point(fj, project_point(g, d, j), k_in_j) == project_point(g, d, k));
        }
      }
    }
  }
  {
    auto& c = rec.start("projection kernel", exhaustive);
    for (auto j : ancestral) {
      const GwpGroup fj = g.restrict(j);
      for (auto k : ancestral) {
        if (!k.is_subset_of(j)) continue;
        const ProjectionKernel kernel(g, j, k);
        const IndexSet k_in_j = translate_set(g, k, fj);
        if (exhaustive) {
          std::size_t in_kernel = 0;
          const auto elems = enumerate_elements(fj, opt.exhaustive_limit);
          for (const auto& x : elems) {
            const bool trivial = project_element(x, k_in_j).is_identity();
            expect(c, kernel.contains(x) == trivial, "J = " + set_label(g, j) + ", K = " + set_label(g, k));
            in_kernel += trivial;
          }
          expect(c, fj.restrict(k_in_j).theoretical_order() * in_kernel == elems.size(), "kernel index");
        } else {
          for (const auto& f : sample) {
            const auto x = project_element(f, j);
            expect(c, kernel.contains(x) == project_element(x, k_in_j).is_identity());
          }
        }
      }
    }
  }
  {
    auto& c = rec.start("identity", exhaustive);
    const auto z = GwpElement::identity(g);
    for (Index i = 0; i < g.index_count(); ++i)
      for (const auto& e : z.table(i)) expect(c, e.is_identity(), "identity table");
    for (const auto& d : points) expect(c, act(d, z) == d, "identity action");
    for (const auto& f : sample) {
      expect(c, z * f == f && f * z == f, "two-sided identity");
    }
    expect(c, invert(z) == z, "identity inverse");
  }
  {
    auto& c = rec.start("projection of F-bar_J", exhaustive);
    for (auto j : ancestral) {
      const GwpGroup fj = g.restrict(j);
      const auto fbar = members(SubgroupSpec::Dbar(j), g);
      std::vector<GwpElement> projected;
      for (const auto& x : fbar.generators) projected.push_back(project_element(x, j));
      const BigInt target = fj.theoretical_order();
      expect(c, image_group(fj, projected).order() == target, "onto F_J, J = " + set_label(g, j));
      expect(c, image_group(g, fbar.generators).order() == target, "injective, J = " + set_label(g, j));
      for (Index i : j.members()) {
        const auto hj = members(SubgroupSpec::HJ(i, j), g);
        ElementSet ha, hb;
        for (const auto& x : members(SubgroupSpec::H(i), g).generators) ha.insert(project_element(x, j));
        for (const auto& x : hj.generators) hb.insert(x);
        expect(c, ha == hb, "H_i onto H_i^J");
        for (const auto& f : sample) expect(c, hj.contains(project_element(theta_inverse(g, {i, f.table(i)}), j)));
      }
    }
  }
  {
    auto& c = rec.start("theta isomorphism", exhaustive);
    for (Index i = 0; i < g.index_count(); ++i) {
      const BigInt order = power(g.factor(i).order(), g.upset_size(i));
      std::vector<GwpElement> hs;
      if (order <= opt.exhaustive_limit) {
        hs = close_elements(g, members(SubgroupSpec::H(i), g).generators, opt.exhaustive_limit);
        std::set<std::vector<Permutation>> tuples;
        for (const auto& h : hs) tuples.insert(theta(i, h).entries);
        expect(c, tuples.size() == hs.size() && order == hs.size(), "bijective at " + p.label(i));
      } else {
        for (std::size_t s = 0; s < opt.samples; ++s) {
          FactorTuple t{i, {}};
          for (std::size_t w = 0; w < g.upset_size(i); ++w) t.entries.push_back(g.factor(i).random_element(rng));
          hs.push_back(theta_inverse(g, t));
        }
      }
      for (const auto& a : hs) {
        expect(c, theta_inverse(g, theta(i, a)) == a, "inverse at " + p.label(i));
        for (std::size_t s = 0; s < std::min<std::size_t>(hs.size(), 32); ++s)
          expect(c, theta(i, a * hs[s]) == tuple_multiply(theta(i, a), theta(i, hs[s])), "homomorphism at " + p.label(i));
      }
    }
  }
  for (Index i : mins) {
    const IndexSet j = p.all().without(i);
    const auto h_gens = members(SubgroupSpec::H(i), g).generators;
    const auto fbar_gens = members(SubgroupSpec::Dbar(j), g).generators;
    std::vector<GwpElement> hs, fs;
    const bool small = exhaustive;
    if (small) {
      hs = close_elements(g, h_gens, opt.exhaustive_limit);
      fs = close_elements(g, fbar_gens, opt.exhaustive_limit);
    } else {
      for (const auto& f : sample) {
        auto [h, fb] = semidirect_factor(f, i);
        hs.push_back(std::move(h));
        fs.push_back(std::move(fb));
      }
    }
    {
      auto& c = rec.start("theta equivariance", small);
      for (const auto& h : hs)
        for (const auto& f : fs) expect(c, theta(i, conjugate(h, f)) == conj_action(g, theta(i, h), f), "at " + p.label(i));
    }
    {
      auto& c = rec.start("H_i normality", small);
      const auto hpred = members(SubgroupSpec::H(i), g);
      for (const auto& h : hs)
        for (std::size_t s = 0; s < sample.size(); s += small ? 1 : 7) expect(c, hpred.contains(conjugate(h, sample[s])), "at " + p.label(i));
    }
    {
      auto& c = rec.start("semidirect factorization", small);
      expect(c, semidirect_witness(g, i, wopt).ok(), "at " + p.label(i));
    }
  }
  if (mins.size() >= 2) {
    auto& c = rec.start("H_i x H_j", exhaustive);
    for (std::size_t a = 0; a < mins.size(); ++a)
      for (std::size_t b = a + 1; b < mins.size(); ++b)
        expect(c, hi_hj_direct_product(g, mins[a], mins[b], wopt), p.label(mins[a]) + ", " + p.label(mins[b]));
  }
  {
    auto& c = rec.start("generation by H_i", true);
    expect(c, image_group(g, generating_set_H(g)).order() == g.theoretical_order());
  }
  if (g.all_transitive()) {
    auto& c = rec.start("generation by D_i", true);
    expect(c, image_group(g, generating_set_D(g)).order() == g.theoretical_order());
  }
  for (Index i : mins) {
    bool transitive_above = true;
    for (Index j : g.upset(i)) transitive_above = transitive_above && g.factor(j).is_transitive();
    if (!transitive_above) continue;
    auto& c = rec.start("conjugates of D_i generate H_i", true);
    expect(c, conjugate_generation_check(g, i), "at " + p.label(i));
  }
  {
    auto& c = rec.start("transitivity criterion", true);
    const bool transitive = image_group(g, generating_set_H(g)).is_transitive();
    expect(c, transitive == g.all_transitive());
    c.detail = transitive ? "transitive" : "intransitive";
  }
  return rec.take();
}

std::vector<CheckOutcome> axiom_suite(const NamedInstance& inst, const AxiomOptions& opt) {
  const GwpGroup& g = inst.group;
  Recorder rec(inst.name);
  const auto points = all_points(g);
  const auto z = GwpElement::identity(g);

  if (g.theoretical_order() <= opt.exhaustive_limit) {
    const auto elems = enumerate_elements(g, opt.exhaustive_limit);
    auto& assoc = rec.start("associativity", true);
    auto& ident = rec.start("identity", true);
    auto& inv = rec.start("inverse", true);
    auto& action = rec.start("action law", true);
    for (const auto& a : elems) {
      expect(ident, z * a == a && a * z == a);
      const auto ai = invert(a);
      expect(inv, (a * ai).is_identity() && (ai * a).is_identity());
      for (const auto& b : elems) {
        const auto ab = a * b;
        for (const auto& c : elems) expect(assoc, ab * c == a * (b * c));
        for (const auto& d : points) expect(action, act(d, ab) == act(act(d, a), b));
      }
    }
    return rec.take();
  }

  Rng rng(opt.seed);
  auto& assoc = rec.start("associativity", false);
  auto& ident = rec.start("identity", false);
  auto& inv = rec.start("inverse", false);
  auto& action = rec.start("action law", false);
  std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
  for (std::size_t t = 0; t < opt.random_triples; ++t) {
    const auto a = random_element(g, rng);
    const auto b = random_element(g, rng);
    const auto c = random_element(g, rng);
    const auto ab = a * b;
    expect(assoc, ab * c == a * (b * c));
    expect(ident, z * a == a && a * z == a);
    const auto ai = invert(a);
    expect(inv, (a * ai).is_identity() && (ai * a).is_identity());
    const auto& d = points[pick(rng)];
    expect(action, act(d, ab) == act(act(d, a), b));
  }
  return rec.take();
}

} // namespace gwp
