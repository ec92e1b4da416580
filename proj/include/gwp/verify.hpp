#pragma once

#include <string>
#include <vector>

#include "gwp/corpus.hpp"

namespace gwp {

struct CheckOutcome {
  std::string instance;
  std::string check;
  bool passed = false;
  std::size_t cases = 0; // individual comparisons made
  bool exhaustive = false;
  std::string detail;
};

struct SuiteOptions {
  std::size_t exhaustive_limit = 256; // |F| up to which lemmas are checked on every element
  std::size_t samples = 200;
  std::uint64_t seed = 1;
};

/// Structural lemmas on one instance: equivalence preservation, projection
/// compatibility (single and nested), projection kernels, the identity,
/// projection of F-bar_J, theta, equivariance, normality, H_i x H_j, the
/// semidirect factorization, generation by H_i, D_i and conjugates of D_i,
/// and the transitivity criterion. Checks whose hypotheses fail are left out.
std::vector<CheckOutcome> lemma_suite(const NamedInstance& inst, const SuiteOptions& opt = {});

struct AxiomOptions {
  std::size_t exhaustive_limit = 64;
  std::size_t random_triples = 10'000;
  std::uint64_t seed = 1;
};

/// Associativity, identity, inverses and the action law: on every triple
/// when |F| is within the limit, on random triples otherwise.
std::vector<CheckOutcome> axiom_suite(const NamedInstance& inst, const AxiomOptions& opt = {});

} // namespace gwp
