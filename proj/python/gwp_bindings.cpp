#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gwp/error.hpp"
#include "gwp/instance.hpp"
#include "gwp/mingen.hpp"
#include "gwp/serialize.hpp"
#include "gwp/structure.hpp"
#include "gwp/verify.hpp"

namespace py = pybind11;
using namespace gwp;

namespace {

py::object to_int(const BigInt& v) { return py::int_(py::str(v.str())); }

py::object json_to_py(const nlohmann::json& js) { return py::module_::import("json").attr("loads")(js.dump()); }

py::dict outcome(const CheckOutcome& c) {
  py::dict d;
  d["instance"] = c.instance;
  d["check"] = c.check;
  d["passed"] = c.passed;
  d["cases"] = c.cases;
  d["exhaustive"] = c.exhaustive;
  d["detail"] = c.detail;
  return d;
}

SmallShape shape_from(const std::string& name) {
  for (auto s : {SmallShape::Chain, SmallShape::Antichain, SmallShape::Triangle, SmallShape::Pyramid, SmallShape::Wrdi})
    if (to_string(s) == name) return s;
  throw InputError("unknown shape '" + name + "'");
}

} // namespace

PYBIND11_MODULE(_gwp, m) {
  m.doc() = "Generalised wreath products of permutation groups over finite posets";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<GuardError>(m, "GuardError", PyExc_RuntimeError);
  py::register_exception<BudgetExhausted>(m, "BudgetExhausted", PyExc_RuntimeError);

  py::class_<Poset>(m, "Poset")
      .def(py::init([](std::vector<std::string> labels, std::vector<std::pair<std::string, std::string>> covers) {
             return Poset::from_covers(std::move(labels), covers);
           }),
           py::arg("labels"), py::arg("covers") = std::vector<std::pair<std::string, std::string>>{})
      .def_static("chain", &Poset::chain)
      .def_static("antichain", &Poset::antichain)
      .def_property_readonly("labels", &Poset::labels)
      .def("__len__", &Poset::size)
      .def("less", [](const Poset& p, const std::string& a, const std::string& b) {
        return p.less(p.index_of(a), p.index_of(b));
      })
      .def("minimal_elements", [](const Poset& p) {
        std::vector<std::string> out;
        for (auto i : p.minimal_elements()) out.push_back(p.label(i));
        return out;
      })
      .def("shape", [](const Poset& p) { return std::string(to_string(p.classify_small().shape)); });

  py::class_<GwpGroup>(m, "Group")
      .def(py::init<Poset, std::vector<std::size_t>>(), py::arg("poset"), py::arg("domain_sizes"))
      .def_property_readonly("poset", &GwpGroup::poset)
      .def_property_readonly("labels", [](const GwpGroup& g) { return g.poset().labels(); })
      .def_property_readonly("domain_sizes", &GwpGroup::domain_sizes)
      .def_property_readonly("index_count", &GwpGroup::index_count)
      .def("theoretical_order", [](const GwpGroup& g) { return to_int(g.theoretical_order()); })
      .def("point_count", [](const GwpGroup& g) { return to_int(g.point_count()); })
      .def("all_transitive", &GwpGroup::all_transitive)
      .def("identity", [](const GwpGroup& g) { return GwpElement::identity(g); })
      .def("random_element", [](const GwpGroup& g, std::uint64_t seed) {
        Rng rng(seed);
        return random_element(g, rng);
      }, py::arg("seed") = 1)
      .def("parse_element", [](const GwpGroup& g, const std::string& text) { return parse_element(text, g); })
      .def("image_order", [](const GwpGroup& g, const std::vector<GwpElement>& gens) {
        return to_int(image_group(g, gens).order());
      })
      .def("faithful_order", [](const GwpGroup& g) { return to_int(image_group(g, generating_set_H(g)).order()); })
      .def("__eq__", [](const GwpGroup& a, const GwpGroup& b) { return a == b; });

  py::class_<GwpElement>(m, "Element")
      .def("__mul__", [](const GwpElement& a, const GwpElement& b) { return a * b; })
      .def("inverse", &invert)
      .def("is_identity", &GwpElement::is_identity)
      .def("act", [](const GwpElement& f, std::vector<std::uint32_t> coords) { return act(Point{std::move(coords)}, f).coords; })
      .def("sign_vector", [](const GwpElement& f) { return sign_quotient(f).bits; })
      .def("__eq__", [](const GwpElement& a, const GwpElement& b) { return a == b; })
      .def("__hash__", [](const GwpElement& f) { return GwpElementHash{}(f); })
      .def("__str__", &format_element);

  m.def("parse_instance", [](const std::string& text) { return parse_instance(text).build(); }, py::arg("text"));
  m.def("load_instance", [](const std::string& path) { return load_instance(path).build(); }, py::arg("path"));
  m.def("shape_instance", [](const std::string& shape, const std::vector<std::size_t>& sizes) {
    return shape_instance(shape_from(shape), sizes);
  }, py::arg("shape"), py::arg("sizes"));
  m.def("desk_corpus", [] {
    std::vector<std::pair<std::string, GwpGroup>> out;
    for (auto& inst : desk_corpus()) out.emplace_back(inst.name, inst.group);
    return out;
  });

  m.def("minimal_generators", [](const GwpGroup& g, std::uint64_t seed, std::size_t budget) {
    Rng rng(seed);
    return build_minimal_gens(g, rng, SearchOptions{budget});
  }, py::arg("group"), py::arg("seed") = 1, py::arg("budget") = 10'000);
  m.def("oracle_d", [](const GwpGroup& g, std::size_t max_k) -> py::object {
    const auto r = min_generators_exact(image_group(g, generating_set_H(g)), max_k);
    return r.d ? py::object(py::int_(*r.d)) : py::object(py::none());
  }, py::arg("group"), py::arg("max_k"));
  m.def("certify", [](const GwpGroup& g, std::uint64_t seed, std::size_t budget, std::size_t oracle_limit) {
    CertifyOptions opt;
    opt.seed = seed;
    opt.budget = budget;
    opt.oracle_limit = oracle_limit;
    return json_to_py(to_json(certify(g, opt)));
  }, py::arg("group"), py::arg("seed") = 1, py::arg("budget") = 10'000, py::arg("oracle_limit") = 10'000);
  m.def("decompose", [](const GwpGroup& g, std::uint64_t seed) {
    WitnessOptions w;
    w.seed = seed;
    w.exhaustive_limit = 1024;
    return json_to_py(to_json(decompose(g, w)));
  }, py::arg("group"), py::arg("seed") = 1);
  m.def("lemma_suite", [](const GwpGroup& g, std::uint64_t seed) {
    py::list out;
    for (const auto& c : lemma_suite({"instance", g}, SuiteOptions{256, 200, seed})) out.append(outcome(c));
    return out;
  }, py::arg("group"), py::arg("seed") = 1);
  m.def("axiom_suite", [](const GwpGroup& g, std::uint64_t seed) {
    py::list out;
    for (const auto& c : axiom_suite({"instance", g}, AxiomOptions{64, 10'000, seed})) out.append(outcome(c));
    return out;
  }, py::arg("group"), py::arg("seed") = 1);
}
