#include "doctest.h"
#include "gwp/verify.hpp"

using namespace gwp;

TEST_CASE("lemma suite passes on the desk corpus") {
  for (const auto& inst : desk_corpus()) {
    for (const auto& c : lemma_suite(inst)) {
      CAPTURE(c.instance);
      CAPTURE(c.check);
      CAPTURE(c.detail);
      CHECK(c.passed);
      CHECK(c.cases > 0);
    }
  }
}

TEST_CASE("transitivity criterion on intransitive factors") {
  for (const auto& inst : intransitive_corpus()) {
    const auto out = lemma_suite(inst);
    bool seen = false;
    for (const auto& c : out) {
      CHECK(c.passed);
      CHECK(c.check != "generation by D_i");
      if (c.check == "transitivity criterion") {
        seen = true;
        CHECK(c.detail == "intransitive");
      }
    }
    CHECK(seen);
  }
}

TEST_CASE("axiom suite") {
  const auto corpus = desk_corpus();
  std::size_t exhaustive = 0;
  for (const auto& inst : corpus) {
    const auto out = axiom_suite(inst, {64, 500, 1});
    CHECK(out.size() == 4);
    for (const auto& c : out) {
      CAPTURE(inst.name);
      CHECK(c.passed);
      exhaustive += c.exhaustive;
    }
  }
  CHECK(exhaustive > 0);
}
