#include "doctest.h"
#include "gwp/corpus.hpp"
#include "gwp/error.hpp"
#include "gwp/mingen.hpp"
#include "gwp/structure.hpp"

using namespace gwp;

namespace {

Permutation P(const char* s, std::size_t n) { return Permutation::parse(s, n); }

GwpGroup chain22() { return shape_instance(SmallShape::Chain, {2, 2}); }

SignVector unit(std::size_t n, std::size_t i) {
  SignVector v{std::vector<std::uint8_t>(n, 0)};
  v.bits[i] = 1;
  return v;
}

/// d(G) <= 2 by trying every pair of elements.
bool some_pair_generates(const PermGroup& g) {
  const auto elems = g.elements(1000);
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = a; b < elems.size(); ++b)
      if (PermGroup(g.degree(), {elems[a], elems[b]}).order() == g.order()) return true;
  return false;
}

} // namespace

TEST_CASE("sign_quotient") {
  const auto g = chain22();
  CHECK(sign_quotient(GwpElement::identity(g)) == SignVector{{0, 0}});
  CHECK(sign_quotient(GwpElement::planted(g, 0, 0, P("(0 1)", 2))) == unit(2, 0));
  CHECK(sign_quotient(GwpElement::planted(g, 1, 0, P("(0 1)", 2))) == unit(2, 1));
  // Two odd entries in the i-table cancel.
  CHECK(sign_quotient(GwpElement(g, {{P("(0 1)", 2), P("(0 1)", 2)}, {P("()", 2)}})) == SignVector{{0, 0}});

  const auto elems = enumerate_elements(g, 8);
  for (const auto& a : elems)
    for (const auto& b : elems) CHECK(sign_quotient(a * b) == (sign_quotient(a) ^ sign_quotient(b)));

  CHECK_THROWS_AS(sign_quotient(GwpElement::identity(intransitive_corpus().front().group)), InputError);
}

TEST_CASE("sign_quotient is a surjective homomorphism on the desk corpus") {
  Rng rng(2);
  for (const auto& inst : desk_corpus()) {
    CAPTURE(inst.name);
    const auto& g = inst.group;
    const std::size_t n = g.index_count();
    for (Index i = 0; i < n; ++i)
      CHECK(sign_quotient(GwpElement::planted(g, i, 0, Permutation::transposition(g.domain_size(i), 0, 1))) ==
            unit(n, i));
    if (g.theoretical_order() <= 256) {
      const auto elems = enumerate_elements(g, 256);
      for (const auto& a : elems)
        for (const auto& b : elems) CHECK(sign_quotient(a * b) == (sign_quotient(a) ^ sign_quotient(b)));
    } else {
      for (int k = 0; k < 100; ++k) {
        const auto a = random_element(g, rng);
        const auto b = random_element(g, rng);
        CHECK(sign_quotient(a * b) == (sign_quotient(a) ^ sign_quotient(b)));
      }
    }
  }
}

TEST_CASE("gf2_rank and the lower bound") {
  CHECK(gf2_rank({}) == 0);
  CHECK(gf2_rank({unit(3, 0), unit(3, 1), unit(3, 2)}) == 3);
  CHECK(gf2_rank({unit(3, 0), unit(3, 1)}) == 2);
  CHECK(gf2_rank({unit(3, 0), unit(3, 1), unit(3, 0) ^ unit(3, 1)}) == 2);
  CHECK(gf2_rank({SignVector{{1, 1, 0}}, SignVector{{0, 1, 1}}, SignVector{{1, 0, 1}}}) == 2);
  CHECK(gf2_rank({SignVector{{0, 0, 0}}}) == 0);

  const auto py = shape_instance(SmallShape::Pyramid, {2, 2, 2});
  CHECK(lower_bound_certificate(py, generating_set_D(py)));
  std::vector<GwpElement> units;
  for (Index i = 0; i < 3; ++i) units.push_back(GwpElement::planted(py, i, 0, P("(0 1)", 2)));
  CHECK(lower_bound_certificate(py, units));
  units.pop_back();
  CHECK_FALSE(lower_bound_certificate(py, units));

  // Any |I| - 1 elements fail, whatever they are.
  Rng rng(8);
  for (const auto& inst : desk_corpus()) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<GwpElement> cand;
      for (std::size_t k = 0; k + 1 < inst.group.index_count(); ++k) cand.push_back(random_element(inst.group, rng));
      CHECK_FALSE(lower_bound_certificate(inst.group, cand));
    }
  }
}

TEST_CASE("pair_generators_for_minimals") {
  Rng rng(1);
  const auto anti = shape_instance(SmallShape::Antichain, {2, 2});
  const auto [x, y] = pair_generators_for_minimals(anti, 0, 1, rng);
  CHECK(image_group(anti, {x, y}).order() == 4);
  const auto d0 = members(SubgroupSpec::D(0), anti);
  const auto d1 = members(SubgroupSpec::D(1), anti);
  for (const auto& e : {x, y}) {
    const auto [h, rest] = semidirect_factor(e, 0);
    CHECK(d0.contains(h));
    CHECK(d1.contains(rest));
  }

  const auto anti32 = shape_instance(SmallShape::Antichain, {3, 2});
  const auto p = pair_generators_for_minimals(anti32, 0, 1, rng);
  CHECK(image_group(anti32, {p[0], p[1]}).order() == 12);

  const auto py = shape_instance(SmallShape::Pyramid, {3, 2, 2});
  const Index i = py.poset().index_of("i"), j = py.poset().index_of("j"), k = py.poset().index_of("k");
  const auto q = pair_generators_for_minimals(py, i, j, rng);
  CHECK(image_group(py, {q[0], q[1]}).order() == 12);
  for (const auto& e : q) CHECK(e.is_trivial_at(k));

  CHECK_THROWS_AS(pair_generators_for_minimals(py, i, k, rng), InputError);
  CHECK_THROWS_AS(pair_generators_for_minimals(py, i, i, rng), InputError);
}

TEST_CASE("pyramid generators") {
  const auto py = shape_instance(SmallShape::Pyramid, {2, 2, 2});
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Rng rng(seed);
    const auto xyz = pyramid_generators(py, rng);
    CHECK(image_group(py, {xyz.begin(), xyz.end()}).order() == 32);
    CHECK(lower_bound_certificate(py, {xyz.begin(), xyz.end()}));
    CHECK(image_group(py, {xyz[0], xyz[1]}).order() < 32);
    CHECK(image_group(py, {xyz[0], xyz[2]}).order() < 32);
    CHECK(image_group(py, {xyz[1], xyz[2]}).order() < 32);
  }
  Rng rng(3);
  for (const auto& sizes : std::vector<std::vector<std::size_t>>{{3, 2, 2}, {2, 3, 3}, {3, 3, 2}, {4, 2, 2}}) {
    const auto g = shape_instance(SmallShape::Pyramid, sizes);
    const auto xyz = pyramid_generators(g, rng);
    CHECK(image_group(g, {xyz.begin(), xyz.end()}).order() == g.theoretical_order());
  }
  CHECK_THROWS_AS(pyramid_generators(chain22(), rng), InputError);
}

TEST_CASE("build_minimal_gens") {
  Rng rng(5);
  const auto anti = shape_instance(SmallShape::Antichain, {2, 2, 2});
  const auto a = build_minimal_gens(anti, rng);
  CHECK(a.size() == 3);
  CHECK(image_group(anti, a).order() == 8);

  CHECK(build_minimal_gens(chain22(), rng).size() == 2);
  CHECK(build_minimal_gens(shape_instance(SmallShape::Pyramid, {2, 2, 2}), rng).size() == 3);
  CHECK(build_minimal_gens(GwpGroup(Poset::chain({"a"}), {2}), rng).size() == 1);
  CHECK(build_minimal_gens(GwpGroup(Poset::chain({"a"}), {4}), rng).size() == 2);

  for (const auto& inst : desk_corpus()) {
    if (inst.group.index_count() < 2) continue;
    CAPTURE(inst.name);
    const auto gens = build_minimal_gens(inst.group, rng);
    CHECK(gens.size() == inst.group.index_count());
    CHECK(image_group(inst.group, gens).order() == inst.group.theoretical_order());
  }
  CHECK_THROWS_AS(build_minimal_gens(intransitive_corpus().front().group, rng), InputError);
  CHECK_THROWS_AS(build_minimal_gens(GwpGroup(Poset::chain({"a", "b"}), {1, 2}), rng), InputError);

  SearchOptions tiny;
  tiny.budget = 0;
  CHECK_THROWS_AS(pyramid_generators(shape_instance(SmallShape::Pyramid, {2, 2, 2}), rng, tiny), BudgetExhausted);
}

TEST_CASE("the exhaustive oracle agrees with a brute-force pair search") {
  // d = 3 groups: no pair of elements generates.
  for (const auto& g : {shape_instance(SmallShape::Pyramid, {2, 2, 2}), shape_instance(SmallShape::Antichain, {2, 2, 2}),
                        shape_instance(SmallShape::Wrdi, {2, 2, 2})}) {
    const auto img = image_group(g, generating_set_H(g));
    CHECK_FALSE(some_pair_generates(img));
    CHECK(min_generators_exact(img, 4).d == 3);
  }
  // d = 2 groups.
  for (const auto& g : {chain22(), shape_instance(SmallShape::Chain, {3, 2}), shape_instance(SmallShape::Antichain, {2, 3})}) {
    const auto img = image_group(g, generating_set_H(g));
    CHECK(some_pair_generates(img));
    CHECK(min_generators_exact(img, 4).d == 2);
  }
}

TEST_CASE("certify") {
  const auto r = certify(chain22());
  CHECK(r.certified());
  CHECK(r.upper_ok);
  CHECK(r.lower_ok);
  CHECK(r.oracle_ran);
  CHECK(r.oracle_d == 2);
  CHECK(r.oracle_exhaustive);

  const auto w = certify(shape_instance(SmallShape::Wrdi, {2, 2, 2}));
  CHECK(w.certified());
  CHECK(w.oracle_d == 3);

  const auto js = to_json(r);
  CHECK(js["verdict"] == "Certified");
  CHECK(js["d"] == 2);
  CHECK(js["witness_generators"].size() == 2);
  CHECK(to_text(r).find("verdict: Certified, d = 2") != std::string::npos);

  CertifyOptions no_oracle;
  no_oracle.oracle_limit = 4;
  const auto n = certify(chain22(), no_oracle);
  CHECK_FALSE(n.oracle_ran);
  CHECK(n.certified());
  CHECK(to_json(n)["oracle"].is_null());

  CHECK_THROWS_AS(certify(GwpGroup(Poset::chain({"a"}), {3})), InputError);
  CHECK_THROWS_AS(certify(intransitive_corpus().front().group), InputError);

  // Same seed, same witness.
  CHECK(certify(chain22()).witness_generators == r.witness_generators);
}
