// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "gwp/mingen.hpp"
#include "gwp/structure.hpp"
#include "gwp/verify.hpp"

using namespace gwp;

namespace {

struct Line {
  bool ok = true;
  std::ostringstream note;
  std::vector<std::string> failures;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (failures.size() < 5) failures.push_back(what);
    }
  }
};

int failed = 0;

void run(const std::string& name, const std::function<void(Line&)>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Line line;
  try {
    body(line);
  } catch (const std::exception& e) {
    line.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  failed += !line.ok;
  std::printf("%s %s: %s [%.1fs]\n", line.ok ? "PASS" : "FAIL", name.c_str(), line.note.str().c_str(), secs);
  for (const auto& f : line.failures) std::printf("    %s\n", f.c_str());
  std::fflush(stdout);
}

std::vector<std::vector<std::size_t>> size_tuples(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> t;
    for (std::size_t b = 0; b < n; ++b) t.push_back((mask >> b) & 1 ? 3 : 2);
    out.push_back(t);
  }
  return out;
}

std::string sizes_name(const std::vector<std::size_t>& s) {
  std::string r;
  for (auto x : s) r += "-" + std::to_string(x);
  return r;
}

/// Every small shape with |I| in {2, 3} and every |Delta_i| in {2, 3}.
std::vector<NamedInstance> small_shape_grid() {
  std::vector<NamedInstance> out;
  const std::pair<SmallShape, std::vector<std::size_t>> shapes[] = {
      {SmallShape::Chain, {2, 3}},    {SmallShape::Antichain, {2, 3}}, {SmallShape::Triangle, {3}},
      {SmallShape::Pyramid, {3}},     {SmallShape::Wrdi, {3}}};
  for (const auto& [shape, ns] : shapes)
    for (auto n : ns)
      for (const auto& s : size_tuples(n))
        out.push_back({std::string(to_string(shape)) + sizes_name(s), shape_instance(shape, s)});
  return out;
}

std::vector<NamedInstance> merged(std::vector<NamedInstance> a, const std::vector<NamedInstance>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

} // namespace

int main() {
  const auto grid = small_shape_grid();
  const auto desk = desk_corpus();

  run("certification of every small shape with sizes 2 and 3", [&](Line& l) {
    std::size_t certified = 0, oracle_checked = 0;
    for (const auto& inst : grid) {
      const auto r = certify(inst.group);
      const std::size_t n = inst.group.index_count();
      l.require(r.certified() && r.witness_generators.size() == n, inst.name + " not certified");
      if (inst.group.theoretical_order() <= 10'000) {
        l.require(r.oracle_ran && r.oracle_exhaustive && r.oracle_d == n, inst.name + ": oracle disagrees");
        oracle_checked += r.oracle_ran && r.oracle_d == n;
      }
      certified += r.certified();
    }
    std::size_t four = 0;
    for (const auto& inst : desk) {
      if (inst.group.index_count() != 4) continue;
      const auto r = certify(inst.group);
      l.require(r.upper_ok && r.lower_ok && r.witness_generators.size() == 4, inst.name + " not certified");
      four += r.upper_ok && r.lower_ok;
    }
    l.require(four > 0, "no four-element instance");
    l.note << certified << "/" << grid.size() << " certified with d = |I|, oracle agrees on " << oracle_checked
           << ", four-element instances certified: " << four;
  });

  run("order of the faithful image equals the product formula", [&](Line& l) {
    std::size_t n = 0;
    for (const auto& inst : merged(desk, grid)) {
      const auto img = image_group(inst.group, generating_set_H(inst.group));
      l.require(img.order() == inst.group.theoretical_order(), inst.name + ": order mismatch");
      ++n;
    }
    l.require(n >= 20, "fewer than 20 instances");
    l.note << n << " instances, exact equality";
  });

  run("group axioms and the action law", [&](Line& l) {
    std::size_t exhaustive = 0, sampled = 0;
    for (const auto& inst : merged(desk, intransitive_corpus())) {
      for (const auto& c : axiom_suite(inst)) {
        l.require(c.passed, inst.name + ": " + c.check);
        (c.exhaustive ? exhaustive : sampled) += 1;
      }
    }
    l.note << exhaustive << " exhaustive and " << sampled << " sampled checks, 10000 triples each when sampled";
  });

  run("structural lemma suite", [&](Line& l) {
    std::size_t checks = 0, exhaustive = 0;
    for (const auto& inst : merged(desk, intransitive_corpus())) {
      for (const auto& c : lemma_suite(inst)) {
        l.require(c.passed, inst.name + ": " + c.check);
        ++checks;
        exhaustive += c.exhaustive;
      }
    }
    for (const auto& inst : intransitive_corpus()) {
      bool reported = false;
      for (const auto& c : lemma_suite(inst))
        reported |= c.check == "transitivity criterion" && c.detail == "intransitive";
      l.require(reported, inst.name + ": intransitivity not reported");
    }
    l.note << checks << " checks, " << exhaustive << " exhaustive";
  });

  run("decomposition cross-validation", [&](Line& l) {
    WitnessOptions w;
    w.exhaustive_limit = 1024;
    std::size_t chains = 0, antichains = 0, wreaths = 0;
    for (const auto& inst : merged(desk, grid)) {
      const auto& g = inst.group;
      if (g.index_count() >= 2 && g.poset().is_chain()) {
        l.require(chain_decompose(g, w).ok(), inst.name + ": iterated wreath");
        ++chains;
      }
      if (g.index_count() >= 2 && g.poset().is_antichain()) {
        l.require(antichain_decompose(g, w).ok(), inst.name + ": direct product");
        ++antichains;
      }
      for (auto i : g.poset().minimal_elements()) {
        if (g.index_count() < 2) break;
        l.require(wreath_witness(g, i, w).ok(), inst.name + ": wreath at " + g.poset().label(i));
        ++wreaths;
      }
    }
    l.note << chains << " chains, " << antichains << " antichains, " << wreaths << " minimal-element wreaths";
  });

  run("pyramid generators for sizes 2 2 2", [&](Line& l) {
    const auto g = shape_instance(SmallShape::Pyramid, {2, 2, 2});
    Rng rng(1);
    const auto xyz = pyramid_generators(g, rng);
    const std::vector<GwpElement> gens(xyz.begin(), xyz.end());
    const auto order = image_group(g, gens).order();
    l.require(order == 32, "order is not 32");
    std::vector<SignVector> signs;
    for (const auto& e : gens) signs.push_back(sign_quotient(e));
    l.require(gf2_rank(signs) == 3, "sign rank is not 3");
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a + 1; b < 3; ++b)
        l.require(image_group(g, {gens[a], gens[b]}).order() < 32, "a pair generates");
    const auto oracle = min_generators_exact(image_group(g, generating_set_H(g)), 4);
    l.require(oracle.d == 3, "oracle d is not 3");
    l.note << "order " << order << ", sign rank " << gf2_rank(signs) << ", no pair generates, oracle d = " << oracle.d.value_or(0);
  });

  run("sign quotient lower bound", [&](Line& l) {
    Rng rng(7);
    std::size_t instances = 0, rejected = 0;
    for (const auto& inst : merged(desk, grid)) {
      const auto& g = inst.group;
      const std::size_t n = g.index_count();
      for (Index i = 0; i < n; ++i) {
        SignVector unit{std::vector<std::uint8_t>(n, 0)};
        unit.bits[i] = 1;
        l.require(sign_quotient(GwpElement::planted(g, i, 0, Permutation::transposition(g.domain_size(i), 0, 1))) == unit,
                  inst.name + ": not onto");
      }
      if (g.theoretical_order() <= 256) {
        const auto elems = enumerate_elements(g, 256);
        for (const auto& a : elems)
          for (const auto& b : elems)
            l.require(sign_quotient(a * b) == (sign_quotient(a) ^ sign_quotient(b)), inst.name + ": not a homomorphism");
      } else {
        for (int t = 0; t < 2000; ++t) {
          const auto a = random_element(g, rng), b = random_element(g, rng);
          l.require(sign_quotient(a * b) == (sign_quotient(a) ^ sign_quotient(b)), inst.name + ": not a homomorphism");
        }
      }
      for (int t = 0; t < 1000; ++t) {
        std::vector<GwpElement> cand;
        for (std::size_t k = 0; k + 1 < n; ++k) cand.push_back(random_element(g, rng));
        const bool reject = !lower_bound_certificate(g, cand);
        l.require(reject, inst.name + ": a smaller set passed the rank test");
        rejected += reject;
      }
      ++instances;
    }
    l.note << instances << " instances, " << rejected << " candidate sets of size |I|-1 rejected";
  });

  std::printf("%s: %d of 7 failed\n", failed ? "FAIL" : "PASS", failed);
  return failed;
}
