#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gwp/error.hpp"
#include "gwp/instance.hpp"
#include "gwp/mingen.hpp"
#include "gwp/structure.hpp"
#include "gwp/verify.hpp"

using namespace gwp;
using nlohmann::json;

namespace {

enum Exit { Ok = 0, CheckFailed = 1, BadInput = 2, OutOfBudget = 3 };

struct Options {
  std::string spec;
  std::uint64_t seed = 1;
  std::size_t budget = 10'000;
  std::string format = "text";
  std::size_t max_delta = DeskGuards{}.max_delta;
  std::size_t max_enum = DeskGuards{}.max_enum;
  std::string corpus = "default";
};

std::string shape_name(const Poset& p) {
  if (p.is_chain()) return "chain";
  if (p.is_antichain()) return "antichain";
  const auto c = p.classify_small();
  if (c.shape != SmallShape::NotSmall) return std::string(to_string(c.shape));
  return "general";
}

std::vector<std::string> labels_of(const Poset& p, const std::vector<Index>& xs) {
  std::vector<std::string> out;
  for (auto x : xs) out.push_back(p.label(x));
  return out;
}

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : " ") + x;
  return s;
}

GwpGroup load(const Options& o) {
  if (o.spec.empty()) throw InputError("--spec is required");
  return load_instance(o.spec).build();
}

int cmd_inspect(const Options& o) {
  const auto g = load(o);
  const auto& p = g.poset();
  std::vector<std::string> covers;
  for (auto [a, b] : p.covers()) covers.push_back(p.label(a) + "<" + p.label(b));
  std::vector<std::size_t> sizes;
  for (Index i = 0; i < p.size(); ++i) sizes.push_back(g.domain_size(i));

  if (o.format == "json") {
    json js;
    js["elements"] = p.labels();
    js["covers"] = covers;
    js["domain_sizes"] = sizes;
    js["index_count"] = p.size();
    js["shape"] = shape_name(p);
    js["theoretical_order"] = g.theoretical_order().str();
    js["transitive"] = g.all_transitive();
    js["symmetric"] = g.all_symmetric();
    js["minimal_elements"] = labels_of(p, p.minimal_elements());
    std::cout << js.dump(2) << "\n";
    return Ok;
  }
  std::cout << "elements: " << join(p.labels()) << "\n";
  std::cout << "covers: " << (covers.empty() ? "none" : join(covers)) << "\n";
  std::cout << "|I| = " << p.size() << "\n";
  std::cout << "shape: " << shape_name(p) << "\n";
  for (Index i = 0; i < p.size(); ++i)
    std::cout << "G_" << p.label(i) << ": degree " << sizes[i] << ", order " << g.factor(i).order()
              << (g.factor_is_symmetric(i) ? ", symmetric" : "")
              << (g.factor(i).is_transitive() ? ", transitive" : ", intransitive") << "\n";
  std::cout << "theoretical order: " << g.theoretical_order() << "\n";
  std::cout << "product action: " << (g.all_transitive() ? "transitive" : "intransitive") << "\n";
  std::cout << "minimal elements: " << join(labels_of(p, p.minimal_elements())) << "\n";
  return Ok;
}

int cmd_decompose(const Options& o) {
  const auto g = load(o);
  WitnessOptions w;
  w.exhaustive_limit = std::min<std::size_t>(1024, o.max_enum);
  w.seed = o.seed;
  w.max_delta = o.max_delta;
  const auto tree = decompose(g, w);
  if (o.format == "json")
    std::cout << to_json(tree).dump(2) << "\n";
  else
    std::cout << to_text(tree);
  return tree.ok() ? Ok : CheckFailed;
}

int cmd_certify(const Options& o) {
  const auto g = load(o);
  CertifyOptions c;
  c.seed = o.seed;
  c.budget = o.budget;
  c.oracle_limit = o.max_enum;
  c.max_delta = o.max_delta;
  const auto r = certify(g, c);
  if (o.format == "json")
    std::cout << to_json(r).dump(2) << "\n";
  else
    std::cout << to_text(r);
  return r.certified() ? Ok : CheckFailed;
}

int cmd_selftest(const Options& o) {
  std::vector<NamedInstance> corpus;
  if (!o.spec.empty())
    corpus.push_back({o.spec, load(o)});
  else if (o.corpus == "default")
    corpus = desk_corpus();
  else if (o.corpus == "intransitive")
    corpus = intransitive_corpus();
  else if (o.corpus != "empty")
    throw InputError("unknown corpus '" + o.corpus + "'");

  SuiteOptions so;
  so.seed = o.seed;
  AxiomOptions ao;
  ao.seed = o.seed;
  std::vector<CheckOutcome> all;
  for (const auto& inst : corpus) {
    for (auto& c : lemma_suite(inst, so)) all.push_back(std::move(c));
    for (auto& c : axiom_suite(inst, ao)) all.push_back(std::move(c));
  }
  std::size_t failed = 0;
  json rows = json::array();
  for (const auto& c : all) {
    failed += !c.passed;
    rows.push_back({{"instance", c.instance}, {"check", c.check}, {"passed", c.passed}, {"cases", c.cases},
                    {"exhaustive", c.exhaustive}, {"detail", c.detail}});
  }
  if (o.format == "json") {
    std::cout << json{{"instances", corpus.size()}, {"checks", rows}, {"failed", failed}}.dump(2) << "\n";
  } else {
    for (const auto& c : all) {
      if (!c.passed)
        std::cout << "FAIL " << c.instance << ": " << c.check << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
      else if (c.check == "transitivity criterion")
        std::cout << "ok   " << c.instance << ": " << c.check << " (" << c.detail << ")\n";
    }
    std::cout << corpus.size() << " instances, " << all.size() << " checks, " << failed << " failed\n";
  }
  return failed ? CheckFailed : Ok;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalised wreath products over finite posets"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool spec_required) {
    auto* s = sub->add_option("--spec", o.spec, "instance file")->check(CLI::ExistingFile);
    if (spec_required) s->required();
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--budget", o.budget, "attempts for randomized searches");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--max-delta", o.max_delta, "largest product domain to materialize");
    sub->add_option("--max-enum", o.max_enum, "largest group to enumerate");
  };
  auto* inspect = app.add_subcommand("inspect", "poset, factors and order of an instance");
  common(inspect, true);
  auto* dec = app.add_subcommand("decompose", "recursive decomposition with witness checks");
  common(dec, true);
  auto* cert = app.add_subcommand("certify", "certify d(F) = |I|");
  common(cert, true);
  auto* self = app.add_subcommand("selftest", "structural and axiom suites over a corpus");
  common(self, false);
  self->add_option("--corpus", o.corpus, "default, intransitive or empty")
      ->check(CLI::IsMember({"default", "intransitive", "empty"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? Ok : BadInput;
  }

  if (o.max_delta != DeskGuards{}.max_delta)
    std::cerr << "warning: --max-delta " << o.max_delta << " overrides the desk guard of " << DeskGuards{}.max_delta << "\n";
  if (o.max_enum != DeskGuards{}.max_enum)
    std::cerr << "warning: --max-enum " << o.max_enum << " overrides the desk guard of " << DeskGuards{}.max_enum << "\n";

  try {
    if (*inspect) return cmd_inspect(o);
    if (*dec) return cmd_decompose(o);
    if (*cert) return cmd_certify(o);
    return cmd_selftest(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return BadInput;
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return BadInput;
  } catch (const BudgetExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return OutOfBudget;
  }
}
