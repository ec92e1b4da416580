#include <random>

#include "doctest.h"
#include "gwp/error.hpp"
#include "gwp/permutation.hpp"

using namespace gwp;

namespace {

Permutation random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Permutation::point_type> images(n);
  for (std::size_t p = 0; p < n; ++p) images[p] = static_cast<Permutation::point_type>(p);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(images);
}

} // namespace

TEST_CASE("compose applies the left operand first") {
  const auto t01 = Permutation::parse("(0 1)", 2);
  CHECK((t01 * t01).is_identity());

  const auto a = Permutation::parse("(0 1)", 3);
  const auto b = Permutation::parse("(1 2)", 3);
  // Pointwise: 0 -a-> 1 -b-> 2, 1 -a-> 0 -b-> 0, 2 -a-> 2 -b-> 1.
  CHECK((a * b).images() == std::vector<Permutation::point_type>{2, 0, 1});
  CHECK(a * b == Permutation::parse("(0 2 1)", 3));
  // The other order: 0 -> 1, 1 -> 2, 2 -> 0.
  CHECK(b * a == Permutation::parse("(0 1 2)", 3));
  CHECK(a * Permutation::identity(3) == a);
  CHECK_THROWS_AS(a * t01, InputError);
}

TEST_CASE("cycle notation") {
  CHECK(Permutation::identity(4).to_string() == "()");
  CHECK(Permutation::parse("()", 4).is_identity());
  CHECK(Permutation::parse("(0 1)(2 3)", 4).to_string() == "(0 1)(2 3)");
  CHECK(Permutation::parse("(2 0 1)", 3).to_string() == "(0 1 2)");
  CHECK(Permutation::parse(" (0,1) ", 2) == Permutation::transposition(2, 0, 1));
  // Non-disjoint cycles multiply left to right.
  CHECK(Permutation::parse("(0 1)(1 2)", 3) == Permutation::parse("(0 2 1)", 3));
  CHECK_THROWS_AS(Permutation::parse("(0 5)", 3), InputError);
  CHECK_THROWS_AS(Permutation::parse("(0 1", 3), InputError);
  CHECK_THROWS_AS(Permutation::parse("0 1", 3), InputError);
  CHECK_THROWS_AS(Permutation::parse("(0 0)", 3), InputError);
  CHECK_THROWS_AS(Permutation::parse("", 3), InputError);
  CHECK_THROWS_AS(Permutation::from_images({0, 0}), InputError);
}

TEST_CASE("sign") {
  CHECK(Permutation::identity(5).sign() == 0);
  CHECK(Permutation::transposition(5, 1, 3).sign() == 1);
  CHECK(Permutation::parse("(0 1 2)", 3).sign() == 0);
  CHECK(Permutation::parse("(0 1 2 3)", 4).sign() == 1);
}

TEST_CASE("group laws and sign homomorphism on random permutations") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + trial % 9;
    const auto a = random_perm(n, rng);
    const auto b = random_perm(n, rng);
    const auto c = random_perm(n, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * a.inverse() == Permutation::identity(n));
    CHECK(a.inverse() * a == Permutation::identity(n));
    CHECK(Permutation::identity(n) * a == a);
    CHECK((a * b).sign() == (a.sign() ^ b.sign()));
    CHECK(Permutation::parse(a.to_string(), n) == a);
  }
}
