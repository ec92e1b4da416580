#include <set>
#include <unordered_set>

#include "doctest.h"
#include "gwp/corpus.hpp"
#include "gwp/error.hpp"
#include "gwp/group.hpp"
#include "gwp/serialize.hpp"

using namespace gwp;

namespace {

Permutation P(const char* s, std::size_t n) { return Permutation::parse(s, n); }

/// i < j with |Delta_i| = |Delta_j| = 2; index 0 is i, index 1 is j.
GwpGroup chain22() { return shape_instance(SmallShape::Chain, {2, 2}); }

GwpElement chain_element(const GwpGroup& g, const char* fi0, const char* fi1, const char* fj) {
  return GwpElement(g, {{P(fi0, 2), P(fi1, 2)}, {P(fj, 2)}});
}

/// Direct evaluation of the action formula, independent of act().
Point naive_act(const GwpGroup& g, const Point& delta, const GwpElement& f) {
  Point out = delta;
  for (Index i = 0; i < g.index_count(); ++i) {
    std::size_t rank = 0;
    for (Index j : g.poset().up_set(i).members()) rank = rank * g.domain_size(j) + delta.coords[j];
    out.coords[i] = f.table(i)[rank][delta.coords[i]];
  }
  return out;
}

std::vector<Point> all_points(const GwpGroup& g) {
  std::vector<Point> out;
  const auto n = checked_point_count(g, 5000);
  for (std::size_t r = 0; r < n; ++r) out.push_back(point_at(g, r));
  return out;
}

} // namespace

TEST_CASE("theoretical_order") {
  CHECK(chain22().theoretical_order() == 8);
  CHECK(shape_instance(SmallShape::Antichain, {2, 2}).theoretical_order() == 4);
  CHECK(shape_instance(SmallShape::Pyramid, {2, 2, 2}).theoretical_order() == 32);
  CHECK(shape_instance(SmallShape::Chain, {2, 2, 2}).theoretical_order() == 128);
  CHECK(shape_instance(SmallShape::Antichain, {2, 3}).theoretical_order() == 12);
}

TEST_CASE("identity") {
  const auto g = chain22();
  const auto z = GwpElement::identity(g);
  CHECK(z.is_identity());
  for (const auto& d : all_points(g)) CHECK(act(d, z) == d);
  const auto f = chain_element(g, "(0 1)", "()", "(0 1)");
  CHECK(z * f == f);
  CHECK(f * z == f);
  CHECK(project_element(z, IndexSet::of({1})).is_identity());
}

TEST_CASE("multiply on the chain of two") {
  const auto g = chain22();
  const auto f = chain_element(g, "(0 1)", "()", "(0 1)");
  const auto h = chain_element(g, "()", "(0 1)", "()");
  const auto t = f * h;
  // t_i(w) = f_i(w) h_i(w f_j): w = 0 gives (0 1)(0 1), w = 1 gives () ().
  CHECK(t == chain_element(g, "()", "()", "(0 1)"));
  CHECK(as_permutation(t) == as_permutation(f) * as_permutation(h));
}

TEST_CASE("multiply on an antichain is coordinatewise") {
  const auto g = shape_instance(SmallShape::Antichain, {3, 2});
  const GwpElement f(g, {{P("(0 1 2)", 3)}, {P("(0 1)", 2)}});
  const GwpElement h(g, {{P("(1 2)", 3)}, {P("(0 1)", 2)}});
  const auto t = f * h;
  CHECK(t.entry(0, 0) == P("(0 1 2)", 3) * P("(1 2)", 3));
  CHECK(t.entry(1, 0).is_identity());
}

TEST_CASE("act") {
  const auto g = chain22();
  const auto f = chain_element(g, "()", "(0 1)", "(0 1)");
  CHECK(act(Point{{0, 0}}, f) == Point{{0, 1}});
  CHECK(act(Point{{0, 1}}, f) == Point{{1, 0}});
  for (const auto& d : all_points(g)) CHECK(act(d, f) == naive_act(g, d, f));
  CHECK_THROWS_AS(act(Point{{0}}, f), InputError);
  CHECK_THROWS_AS(act(Point{{2, 0}}, f), InputError);
}

TEST_CASE("invert") {
  const auto g = chain22();
  CHECK(invert(GwpElement::identity(g)).is_identity());
  const auto anti = shape_instance(SmallShape::Antichain, {3, 3});
  const GwpElement f(anti, {{P("(0 1 2)", 3)}, {P("(0 1)", 3)}});
  CHECK(invert(f) == GwpElement(anti, {{P("(0 2 1)", 3)}, {P("(0 1)", 3)}}));

  Rng rng(5);
  for (const auto& inst : desk_corpus()) {
    for (int k = 0; k < 10; ++k) {
      const auto x = random_element(inst.group, rng);
      const auto xi = invert(x);
      CHECK((x * xi).is_identity());
      CHECK((xi * x).is_identity());
      if (inst.group.point_count() <= 64) CHECK(as_permutation(xi) == as_permutation(x).inverse());
    }
  }
}

TEST_CASE("group axioms exhaustively on small instances") {
  for (const auto& g : {chain22(), shape_instance(SmallShape::Pyramid, {2, 2, 2}),
                        shape_instance(SmallShape::Wrdi, {2, 2, 2})}) {
    const auto elems = enumerate_elements(g, 64);
    CHECK(elems.size() == g.theoretical_order());
    const auto pts = all_points(g);
    for (const auto& a : elems)
      for (const auto& b : elems) {
        const auto ab = a * b;
        for (const auto& d : pts) CHECK(act(d, ab) == act(act(d, a), b));
        for (std::size_t c = 0; c < elems.size(); c += 7) CHECK((ab * elems[c]) == a * (b * elems[c]));
      }
  }
}

TEST_CASE("as_permutation is injective and homomorphic") {
  const auto g = chain22();
  const auto elems = enumerate_elements(g, 100);
  CHECK(elems.size() == 8);
  std::set<Permutation> images;
  for (const auto& f : elems) images.insert(as_permutation(f));
  CHECK(images.size() == 8);
  CHECK(as_permutation(GwpElement::identity(g)).is_identity());
  for (const auto& a : elems)
    for (const auto& b : elems) CHECK(as_permutation(a * b) == as_permutation(a) * as_permutation(b));

  CHECK_THROWS_AS(as_permutation(elems[1], 3), GuardError);
}

TEST_CASE("faithful image order equals the counting formula") {
  for (const auto& inst : desk_corpus()) {
    CAPTURE(inst.name);
    std::vector<GwpElement> gens;
    for (Index i = 0; i < inst.group.index_count(); ++i)
      for (std::size_t w = 0; w < inst.group.upset_size(i); ++w)
        for (const auto& s : inst.group.factor(i).generators())
          gens.push_back(GwpElement::planted(inst.group, i, w, s));
    CHECK(image_group(inst.group, gens).order() == inst.group.theoretical_order());
  }
}

TEST_CASE("projection") {
  const auto g = chain22();
  const auto f = chain_element(g, "(0 1)", "()", "(0 1)");
  CHECK(project_element(f, g.poset().all()) == f);
  const auto fj = project_element(f, IndexSet::of({1}));
  CHECK(fj.group().index_count() == 1);
  CHECK(fj.entry(0, 0) == P("(0 1)", 2));
  CHECK(project_element(f, IndexSet{}).is_identity());
  CHECK(project_element(f, IndexSet{}).group().theoretical_order() == 1);
  CHECK_THROWS_AS(project_element(f, IndexSet::of({0})), InputError);

  // (delta pi_J) f phi_J = (delta f) pi_J on every point.
  const auto j = IndexSet::of({1});
  for (const auto& d : all_points(g))
    CHECK(act(project_point(g, d, j), fj) == project_point(g, act(d, f), j));

  // Homomorphism and embedding round trip.
  const auto h = chain_element(g, "()", "(0 1)", "()");
  CHECK(project_element(f * h, j) == project_element(f, j) * project_element(h, j));
  const auto lifted = embed(fj, g);
  CHECK(lifted.is_trivial_at(0));
  CHECK(project_element(lifted, j) == fj);
}

TEST_CASE("project_point and equiv") {
  const auto g = chain22();
  const Point d{{1, 0}};
  CHECK(project_point(g, d, g.poset().all()) == d);
  CHECK(project_point(g, d, IndexSet{}).coords.empty());
  CHECK(project_point(g, d, IndexSet::of({1})) == Point{{0}});
  CHECK(equiv(g, d, d, IndexSet::of({1})));
  CHECK(equiv(g, Point{{0, 0}}, Point{{1, 1}}, IndexSet{}));
  CHECK_FALSE(equiv(g, Point{{0, 0}}, Point{{1, 1}}, IndexSet::of({1})));
  CHECK_THROWS_AS(equiv(g, d, d, IndexSet::of({0})), InputError);
}

TEST_CASE("kernel of projection") {
  const auto g = chain22();
  const auto all = g.poset().all();
  const auto elems = enumerate_elements(g, 100);

  const ProjectionKernel k_top(g, all, IndexSet::of({1}));
  std::size_t count = 0;
  for (const auto& f : elems)
    if (k_top.contains(f)) ++count;
  CHECK(count == 4);

  const ProjectionKernel k_empty(g, all, IndexSet{});
  for (const auto& f : elems) CHECK(k_empty.contains(f));

  const ProjectionKernel k_all(g, all, all);
  for (const auto& f : elems) CHECK(k_all.contains(f) == f.is_identity());

  CHECK_THROWS_AS(ProjectionKernel(g, IndexSet::of({1}), all), InputError);
  CHECK_THROWS_AS(ProjectionKernel(g, all, IndexSet::of({0})), InputError);
}

TEST_CASE("element validation") {
  const auto g = chain22();
  CHECK_THROWS_AS(GwpElement(g, {{P("()", 2)}, {P("()", 2)}}), InputError);
  CHECK_THROWS_AS(GwpElement(g, {{P("()", 3), P("()", 3)}, {P("()", 2)}}), InputError);
  const auto intr = intransitive_corpus().front().group;
  CHECK_THROWS_AS(GwpElement::planted(intr, 1, 0, P("(1 2)", 3)), InputError);
  CHECK_NOTHROW(GwpElement::planted(intr, 1, 0, P("(0 1)", 3)));
  CHECK_THROWS_AS(multiply(GwpElement::identity(g), GwpElement::identity(intr)), InputError);
}

TEST_CASE("element serialization") {
  const auto g = shape_instance(SmallShape::Pyramid, {3, 2, 2});
  Rng rng(9);
  for (int k = 0; k < 20; ++k) {
    const auto f = random_element(g, rng);
    CHECK(parse_element(format_element(f), g) == f);
  }
  const auto text = format_element(GwpElement::planted(chain22(), 0, 1, P("(0 1)", 2)));
  CHECK(text == "i[0] = ()\ni[1] = (0 1)\nj[] = ()\n");

  CHECK_THROWS_AS(parse_element("i[0] = ()\n", chain22()), InputError);
  CHECK_THROWS_AS(parse_element("i[0] = ()\ni[0] = ()\ni[1] = ()\nj[] = ()", chain22()), InputError);
  CHECK_THROWS_AS(parse_element("q[] = ()", chain22()), InputError);
  CHECK_THROWS_AS(parse_element("i[5] = ()", chain22()), InputError);
  CHECK_THROWS_AS(parse_element("i[0] (0 1)", chain22()), InputError);
}
