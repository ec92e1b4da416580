#include "doctest.h"
#include "gwp/error.hpp"
#include "gwp/instance.hpp"

using namespace gwp;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

} // namespace

TEST_CASE("parse a pyramid") {
  const auto spec = parse_instance("# pyramid\nelements: i j k\ncover: i < k\ncover: j < k\n"
                                   "domain: i 2\ndomain: j 3\ndomain: k 2\n");
  const auto g = spec.build();
  CHECK(g.poset().classify_small().shape == SmallShape::Pyramid);
  CHECK(g.domain_size(g.poset().index_of("j")) == 3);
  CHECK(g.theoretical_order() == 2 * 2 * 36 * 2);
  CHECK(g.all_symmetric());
}

TEST_CASE("chained covers and explicit factors") {
  const auto spec = parse_instance("elements: a b c\ncover: a < b < c\ndomain: a 2\ndomain: b 2\ndomain: c 3\n"
                                   "factor: c (0 1)\nfactor: c (1 2)  # accumulates\n");
  const auto g = spec.build();
  CHECK(g.poset().is_chain());
  CHECK(g.factor(g.poset().index_of("c")).order() == 6);

  const auto intr = parse_instance("elements: a b\ncover: a < b\ndomain: a 2\ndomain: b 3\nfactor: b (0 1)\n").build();
  CHECK_FALSE(intr.all_transitive());
}

TEST_CASE("errors name the line") {
  CHECK(error_of("elements: a b\nbogus: 1\n") == "line 2: unknown keyword 'bogus'");
  CHECK(error_of("elements: a b\ncover: a b\n").rfind("line 2:", 0) == 0);
  CHECK(error_of("elements: a\ndomain: a zero\n").rfind("line 2:", 0) == 0);
  CHECK(error_of("elements: a\ndomain: a 0\n").rfind("line 2:", 0) == 0);
  CHECK(error_of("elements: a\ndomain: a 2\ndomain: a 2\n").rfind("line 3:", 0) == 0);
  CHECK(error_of("elements: a b\ncover: a < b\ncover: b < a\ndomain: a 2\ndomain: b 2\n").rfind("line 1:", 0) == 0);
  CHECK(error_of("elements: a\ndomain: a 2\nfactor: a (0 5)\n").rfind("line 3:", 0) == 0);
  CHECK(error_of("elements: a\ndomain: b 2\n").rfind("line 2:", 0) == 0);
  CHECK(error_of("elements: a\n") == "missing 'domain' line for 'a'");
  CHECK(error_of("domain: a 2\n") == "missing 'elements' line");
  CHECK(error_of("elements: a\nelements: b\n").rfind("line 2:", 0) == 0);
  CHECK_THROWS_AS(load_instance("/nonexistent/spec.txt"), InputError);
}
