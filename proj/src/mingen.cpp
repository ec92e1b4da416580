#include "gwp/mingen.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gwp/error.hpp"
#include "gwp/serialize.hpp"
#include "gwp/structure.hpp"
#include "gwp/wreath.hpp"

namespace gwp {

std::string SignVector::to_string() const {
  std::string s;
  for (auto b : bits) s += b ? '1' : '0';
  return s;
}

SignVector operator^(const SignVector& a, const SignVector& b) {
  if (a.bits.size() != b.bits.size()) throw InputError("sign vectors have different lengths");
  SignVector out{a.bits};
  for (std::size_t i = 0; i < out.bits.size(); ++i) out.bits[i] ^= b.bits[i];
  return out;
}

SignVector sign_quotient(const GwpElement& f) {
  const GwpGroup& g = f.group();
  if (!g.all_symmetric()) throw InputError("the sign quotient needs symmetric factors");
  SignVector v{std::vector<std::uint8_t>(g.index_count(), 0)};
  for (Index i = 0; i < g.index_count(); ++i)
    for (const auto& p : f.table(i)) v.bits[i] ^= static_cast<std::uint8_t>(p.sign());
  return v;
}

std::size_t gf2_rank(const std::vector<SignVector>& rows) {
  std::vector<std::vector<std::uint8_t>> m;
  for (const auto& r : rows) m.push_back(r.bits);
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    auto pivot = std::find_if(m.begin() + static_cast<std::ptrdiff_t>(rank), m.end(), [&](const auto& r) { return r[c] != 0; });
    if (pivot == m.end()) continue;
    std::swap(*pivot, m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r)
      if (r != rank && m[r][c])
        for (std::size_t k = 0; k < cols; ++k) m[r][k] ^= m[rank][k];
    ++rank;
  }
  return rank;
}

bool lower_bound_certificate(const GwpGroup& group, const std::vector<GwpElement>& gens) {
  std::vector<SignVector> rows;
  for (const auto& g : gens) rows.push_back(sign_quotient(g));
  return gf2_rank(rows) == group.index_count();
}

namespace {

void require_symmetric_desk(const GwpGroup& g) {
  if (!g.all_symmetric()) throw InputError("minimal generation needs symmetric factors");
  for (Index i = 0; i < g.index_count(); ++i)
    if (g.domain_size(i) < 2) throw InputError("domain of '" + g.poset().label(i) + "' needs at least two points");
}

bool is_minimal(const GwpGroup& g, Index i) {
  const auto mins = g.poset().minimal_elements();
  return std::find(mins.begin(), mins.end(), i) != mins.end();
}

/// Side by side on a + b points.
Permutation juxtapose(const Permutation& a, const Permutation& b) {
  std::vector<Permutation::point_type> img(a.size() + b.size());
  for (std::uint32_t p = 0; p < a.size(); ++p) img[p] = a[p];
  for (std::uint32_t p = 0; p < b.size(); ++p) img[a.size() + p] = static_cast<Permutation::point_type>(a.size() + b[p]);
  return Permutation::from_images(std::move(img));
}

bool generates(const GwpGroup& g, const std::vector<GwpElement>& gens) {
  return image_group(g, gens).order() == g.theoretical_order();
}

GwpElement random_h(const GwpGroup& g, Index i, Rng& rng) {
  FactorTuple t{i, {}};
  for (std::size_t w = 0; w < g.upset_size(i); ++w) t.entries.push_back(g.factor(i).random_element(rng));
  return theta_inverse(g, t);
}

Permutation cycle_of(std::size_t n, std::uint32_t from, std::uint32_t to) {
  std::vector<Permutation::point_type> pts;
  for (auto p = from; p < to; ++p) pts.push_back(p);
  return Permutation::cycle(n, pts);
}

/// Top generators of F_{I \ {m}} padded with identities, each multiplied by
/// a random element of H_m until the list generates.
std::vector<GwpElement> dress(const GwpGroup& g, Rng& rng, const SearchOptions& opt) {
  const std::size_t n = g.index_count();
  const Index m = g.poset().minimal_elements().front();
  const GwpGroup fk = g.restrict(g.poset().all().without(m));
  std::vector<GwpElement> top;
  if (fk.index_count() >= 2) {
    for (const auto& t : build_minimal_gens(fk, rng, opt)) top.push_back(embed(t, g));
  } else {
    for (const auto& s : fk.factor(0).generators()) top.push_back(embed(GwpElement::planted(fk, 0, 0, s), g));
  }
  if (top.size() > n) throw InputError("top group needs more generators than there are indices");
  while (top.size() < n) top.push_back(GwpElement::identity(g));

  for (std::size_t attempt = 1; attempt <= opt.budget; ++attempt) {
    std::vector<GwpElement> gens;
    for (const auto& t : top) gens.push_back(random_h(g, m, rng) * t);
    if (generates(g, gens)) return gens;
  }
  throw BudgetExhausted("no lift of the top generators was found within " + std::to_string(opt.budget) +
                            " attempts",
                        opt.budget);
}

} // namespace

std::array<GwpElement, 2> pair_generators_for_minimals(const GwpGroup& group, Index m, Index n, Rng& rng,
                                                       const SearchOptions& opt) {
  require_symmetric_desk(group);
  if (m == n || m >= group.index_count() || n >= group.index_count() || !is_minimal(group, m) || !is_minimal(group, n))
    throw InputError("pairing needs two distinct minimal elements");
  const auto& gm = group.factor(m);
  const auto& gn = group.factor(n);
  const BigInt target = gm.order() * gn.order();
  const std::size_t degree = gm.degree() + gn.degree();
  for (std::size_t attempt = 1; attempt <= opt.budget; ++attempt) {
    const auto sm = gm.random_element(rng), tm = gm.random_element(rng);
    const auto sn = gn.random_element(rng), tn = gn.random_element(rng);
    if (PermGroup(degree, {juxtapose(sm, sn), juxtapose(tm, tn)}).order() != target) continue;
    auto tables_x = GwpElement::identity(group).tables();
    auto tables_y = tables_x;
    tables_x[m][0] = sm;
    tables_x[n][0] = sn;
    tables_y[m][0] = tm;
    tables_y[n][0] = tn;
    return {GwpElement(group, std::move(tables_x)), GwpElement(group, std::move(tables_y))};
  }
  throw BudgetExhausted("no generating pair for the two minimal factors within " + std::to_string(opt.budget) +
                            " attempts",
                        opt.budget);
}

std::array<GwpElement, 3> pyramid_generators(const GwpGroup& group, Rng& rng, const SearchOptions& opt) {
  require_symmetric_desk(group);
  const auto shape = group.poset().classify_small();
  if (shape.shape != SmallShape::Pyramid) throw InputError("poset is not a pyramid");
  const Index i = shape.roles.at("i"), j = shape.roles.at("j"), k = shape.roles.at("k");
  const std::size_t l = group.domain_size(i), m = group.domain_size(j), n = group.domain_size(k);

  Permutation alpha = Permutation::identity(l);
  if (l % 2 == 1)
    alpha = cycle_of(l, 0, static_cast<std::uint32_t>(l));
  else if (l > 2)
    alpha = cycle_of(l, 1, static_cast<std::uint32_t>(l));
  const Permutation swap = Permutation::transposition(n, 0, 1);
  const Permutation beta = cycle_of(n, 0, static_cast<std::uint32_t>(n));

  std::vector<std::uint32_t> ident(n);
  std::iota(ident.begin(), ident.end(), 0);
  const PermGroup sm = PermGroup::symmetric(m);
  const StandaloneWreath w(sm, PermGroup::symmetric(n), ident, n);
  const BigInt target = w.order();

  for (std::size_t attempt = 1; attempt <= opt.budget; ++attempt) {
    StandaloneWreath::Element a{{}, swap}, b{{}, beta};
    for (std::size_t y = 0; y < n; ++y) {
      a.base.push_back(sm.random_element(rng));
      b.base.push_back(sm.random_element(rng));
    }
    if (PermGroup(m * n, {w.natural_action(a), w.natural_action(b)}).order() != target) continue;

    const auto id = GwpElement::identity(group).tables();
    auto tx = id, ty = id, tz = id;
    tx[i][0] = Permutation::transposition(l, 0, 1);
    ty[i][0] = alpha;
    ty[k][0] = swap;
    tz[k][0] = beta;
    for (std::size_t y = 0; y < n; ++y) {
      ty[j][y] = a.base[y];
      tz[j][y] = b.base[y];
    }
    std::array<GwpElement, 3> out{GwpElement(group, std::move(tx)), GwpElement(group, std::move(ty)),
                                  GwpElement(group, std::move(tz))};
    if (generates(group, {out.begin(), out.end()})) return out;
  }
  throw BudgetExhausted("no generating pair for the top wreath product within " + std::to_string(opt.budget) +
                            " attempts",
                        opt.budget);
}

std::vector<GwpElement> build_minimal_gens(const GwpGroup& group, Rng& rng, const SearchOptions& opt) {
  require_symmetric_desk(group);
  const std::size_t n = group.index_count();
  if (n == 1) {
    std::vector<GwpElement> out;
    for (const auto& s : group.factor(0).generators()) out.push_back(GwpElement::planted(group, 0, 0, s));
    return out;
  }
  if (group.poset().classify_small().shape == SmallShape::Pyramid) {
    auto xyz = pyramid_generators(group, rng, opt);
    return {xyz.begin(), xyz.end()};
  }

  const auto mins = group.poset().minimal_elements();
  if (mins.size() >= 2) {
    const Index a = mins[0], b = mins[1];
    const IndexSet k = group.poset().all().without(a).without(b);
    const bool small_top = k.size() == 1 && group.domain_size(k.members().front()) == 2;
    if (k.size() != 1 || small_top) {
      auto pair = pair_generators_for_minimals(group, a, b, rng, opt);
      std::vector<GwpElement> out{pair.begin(), pair.end()};
      if (small_top) {
        out.push_back(GwpElement::planted(group, k.members().front(), 0, Permutation::transposition(2, 0, 1)));
      } else if (k.size() >= 2) {
        for (const auto& t : build_minimal_gens(group.restrict(k), rng, opt)) out.push_back(embed(t, group));
      }
      if (generates(group, out)) return out;
    }
  }
  return dress(group, rng, opt);
}

CertReport certify(const GwpGroup& group, const CertifyOptions& opt) {
  if (group.index_count() < 2) throw InputError("certification needs a poset with at least two elements");
  require_symmetric_desk(group);

  CertReport r;
  const Poset& p = group.poset();
  r.labels = p.labels();
  for (auto [a, b] : p.covers()) r.covers.emplace_back(p.label(a), p.label(b));
  r.shape = std::string(to_string(p.classify_small().shape));
  r.domain_sizes = group.domain_sizes();
  r.index_count = group.index_count();
  r.theoretical_order = group.theoretical_order();
  r.seed = opt.seed;

  Rng rng(opt.seed);
  r.witness_generators = build_minimal_gens(group, rng, {opt.budget});
  r.closure_order = image_group(group, r.witness_generators, opt.max_delta).order();
  r.upper_ok = r.witness_generators.size() == r.index_count && r.closure_order == r.theoretical_order;

  std::vector<SignVector> rows;
  for (const auto& g : r.witness_generators) rows.push_back(sign_quotient(g));
  r.sign_rank = gf2_rank(rows);
  bool surjective = true;
  for (Index i = 0; i < r.index_count; ++i) {
    SignVector unit{std::vector<std::uint8_t>(r.index_count, 0)};
    unit.bits[i] = 1;
    if (!(sign_quotient(GwpElement::planted(group, i, 0, Permutation::transposition(group.domain_size(i), 0, 1))) == unit))
      surjective = false;
  }
  r.lower_ok = surjective && r.sign_rank == r.index_count;

  if (r.theoretical_order <= opt.oracle_limit) {
    MinGenOptions mo;
    mo.seed = opt.seed;
    mo.exhaustive_limit = std::max(mo.exhaustive_limit, opt.oracle_limit);
    const auto res = min_generators_exact(image_group(group, generating_set_H(group), opt.max_delta), r.index_count + 1, mo);
    r.oracle_ran = true;
    r.oracle_d = res.d;
    r.oracle_exhaustive = res.exhaustive;
  }
  return r;
}

nlohmann::json to_json(const CertReport& r) {
  nlohmann::json j;
  nlohmann::json covers = nlohmann::json::array();
  for (const auto& [a, b] : r.covers) covers.push_back({a, b});
  j["poset"] = {{"elements", r.labels}, {"covers", covers}, {"shape", r.shape}};
  nlohmann::json sizes = nlohmann::json::object();
  for (std::size_t i = 0; i < r.labels.size(); ++i) sizes[r.labels[i]] = r.domain_sizes[i];
  j["domain_sizes"] = sizes;
  j["index_count"] = r.index_count;
  j["theoretical_order"] = r.theoretical_order.str();
  j["closure_order"] = r.closure_order.str();
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : r.witness_generators) gens.push_back(format_element(g));
  j["witness_generators"] = gens;
  j["sign_vectors"] = nlohmann::json::array();
  for (const auto& g : r.witness_generators) j["sign_vectors"].push_back(sign_quotient(g).to_string());
  j["sign_rank"] = r.sign_rank;
  j["upper_ok"] = r.upper_ok;
  j["lower_ok"] = r.lower_ok;
  if (r.oracle_ran) {
    j["oracle"] = {{"d", r.oracle_d ? nlohmann::json(*r.oracle_d) : nlohmann::json(nullptr)},
                   {"exhaustive", r.oracle_exhaustive},
                   {"agrees", r.oracle_agrees()}};
  } else {
    j["oracle"] = nullptr;
  }
  j["seed"] = r.seed;
  j["d"] = r.certified() ? nlohmann::json(r.index_count) : nlohmann::json(nullptr);
  j["verdict"] = r.certified() ? "Certified" : "Failed";
  return j;
}

std::string to_text(const CertReport& r) {
  std::ostringstream os;
  os << "poset: " << r.labels.size() << " elements (";
  for (std::size_t i = 0; i < r.labels.size(); ++i) os << (i ? " " : "") << r.labels[i];
  os << ")";
  for (const auto& [a, b] : r.covers) os << ", " << a << " < " << b;
  os << "\nshape: " << r.shape << "\ndomain sizes:";
  for (std::size_t i = 0; i < r.labels.size(); ++i) os << ' ' << r.labels[i] << '=' << r.domain_sizes[i];
  os << "\n|I| = " << r.index_count << "\ntheoretical order: " << r.theoretical_order << '\n';
  os << "witness generators (" << r.witness_generators.size() << "):\n";
  for (std::size_t g = 0; g < r.witness_generators.size(); ++g) {
    os << "  generator " << g + 1 << " (sign " << sign_quotient(r.witness_generators[g]).to_string() << "):\n";
    std::istringstream lines(format_element(r.witness_generators[g]));
    for (std::string line; std::getline(lines, line);) os << "    " << line << '\n';
  }
  os << "upper bound: " << (r.upper_ok ? "ok" : "FAILED") << " (closure order " << r.closure_order << ")\n";
  os << "lower bound: " << (r.lower_ok ? "ok" : "FAILED") << " (sign rank " << r.sign_rank << " of " << r.index_count
     << ")\n";
  if (!r.oracle_ran)
    os << "oracle: not run (order above limit)\n";
  else if (r.oracle_d)
    os << "oracle: d = " << *r.oracle_d << (r.oracle_exhaustive ? " (exhaustive)" : " (randomized)")
       << (r.oracle_agrees() ? "" : " DISAGREES") << '\n';
  else
    os << "oracle: no generating set of size <= " << r.index_count + 1 << " found\n";
  os << "verdict: " << (r.certified() ? "Certified, d = " + std::to_string(r.index_count) : std::string("Failed"))
     << '\n';
  return os.str();
}

} // namespace gwp
