#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gwp/group.hpp"
#include "json.hpp"

namespace gwp {

/// An element of C_2^I, one bit per index.
struct SignVector {
  std::vector<std::uint8_t> bits;

  friend bool operator==(const SignVector&, const SignVector&) = default;
  std::string to_string() const;
};

SignVector operator^(const SignVector& a, const SignVector& b);

/// bit i = XOR over delta in Delta_{A(i)} of sign(f_i(delta)). Needs
/// symmetric factors; throws InputError otherwise.
SignVector sign_quotient(const GwpElement& f);

/// Rank over GF(2).
std::size_t gf2_rank(const std::vector<SignVector>& rows);

/// The sign vectors of `gens` span C_2^I.
bool lower_bound_certificate(const GwpGroup& group, const std::vector<GwpElement>& gens);

/// Searches with at most `budget` attempts; throws BudgetExhausted.
struct SearchOptions {
  std::size_t budget = 10'000;
};

/// Two elements supported on D_m and D_n (anchors at rank 0) generating
/// Sym(Delta_m) x Sym(Delta_n).
std::array<GwpElement, 2> pair_generators_for_minimals(const GwpGroup& group, Index m, Index n, Rng& rng,
                                                       const SearchOptions& opt = {});

/// x, y, z for the pyramid i < k > j: x plants (0 1) at the first base
/// coordinate of i; y carries an even alpha with <(0 1), alpha> = Sym(Delta_i)
/// next to the first generator of Sym(Delta_j) wr Sym(Delta_k); z carries
/// the second one.
std::array<GwpElement, 3> pyramid_generators(const GwpGroup& group, Rng& rng, const SearchOptions& opt = {});

/// |I| elements generating F (symmetric factors, every |Delta_i| >= 2).
std::vector<GwpElement> build_minimal_gens(const GwpGroup& group, Rng& rng, const SearchOptions& opt = {});

struct CertifyOptions {
  std::uint64_t seed = 1;
  std::size_t budget = 10'000;
  std::size_t oracle_limit = 10'000;
  std::size_t max_delta = DeskGuards{}.max_delta;
};

struct CertReport {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  std::string shape;
  std::vector<std::size_t> domain_sizes;
  std::size_t index_count = 0;
  std::vector<GwpElement> witness_generators;
  BigInt theoretical_order;
  BigInt closure_order;
  std::size_t sign_rank = 0;
  bool upper_ok = false;
  bool lower_ok = false;
  bool oracle_ran = false;
  std::optional<std::size_t> oracle_d; // nullopt when the oracle found no k <= |I| + 1
  bool oracle_exhaustive = false;
  std::uint64_t seed = 0;

  bool oracle_agrees() const { return !oracle_ran || oracle_d == index_count; }
  bool certified() const {
    return upper_ok && lower_ok && witness_generators.size() == index_count && oracle_agrees();
  }
};

/// Builds the witness and checks both bounds; throws InputError outside
/// the theorem's scope (|I| < 2, non-symmetric factors, |Delta_i| < 2).
CertReport certify(const GwpGroup& group, const CertifyOptions& opt = {});

nlohmann::json to_json(const CertReport& report);
std::string to_text(const CertReport& report);

} // namespace gwp
