#include "gwp/instance.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "gwp/error.hpp"

namespace gwp {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& why) {
  throw InputError("line " + std::to_string(line) + ": " + why);
}

} // namespace

GwpGroup InstanceSpec::build() const {
  std::vector<PermGroup> groups;
  for (Index i = 0; i < poset.size(); ++i) {
    if (factors[i])
      groups.emplace_back(domain_sizes[i], *factors[i]);
    else
      groups.push_back(PermGroup::symmetric(domain_sizes[i]));
  }
  return GwpGroup(poset, domain_sizes, std::move(groups));
}

InstanceSpec parse_instance(std::string_view text) {
  std::optional<std::vector<std::string>> elements;
  std::size_t elements_line = 0;
  std::vector<std::pair<std::string, std::string>> covers;
  std::map<std::string, std::pair<std::size_t, std::size_t>> domains; // label -> (size, line)
  std::vector<std::tuple<std::string, std::string, std::size_t>> factor_lines;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) fail(line_no, "expected 'keyword: ...'");
    const std::string key(trim(line.substr(0, colon)));
    const std::string_view rest = trim(line.substr(colon + 1));

    if (key == "elements") {
      if (elements) fail(line_no, "second 'elements' line");
      elements = words(rest);
      elements_line = line_no;
      if (elements->empty()) fail(line_no, "no elements listed");
    } else if (key == "cover") {
      const auto w = words(rest);
      if (w.size() < 3 || w.size() % 2 == 0) fail(line_no, "expected 'cover: a < b'");
      for (std::size_t t = 1; t < w.size(); t += 2)
        if (w[t] != "<") fail(line_no, "expected '<' between labels");
      for (std::size_t t = 0; t + 2 < w.size(); t += 2) covers.emplace_back(w[t], w[t + 2]);
    } else if (key == "domain") {
      const auto w = words(rest);
      if (w.size() != 2) fail(line_no, "expected 'domain: label size'");
      std::size_t size = 0;
      try {
        std::size_t used = 0;
        size = std::stoul(w[1], &used);
        if (used != w[1].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        fail(line_no, "domain size must be a non-negative integer");
      }
      if (size < 1) fail(line_no, "domain size must be at least 1");
      if (!domains.emplace(w[0], std::pair{size, line_no}).second) fail(line_no, "second domain for '" + w[0] + "'");
    } else if (key == "factor") {
      const auto space = rest.find_first_of(" \t");
      if (space == std::string_view::npos) fail(line_no, "expected 'factor: label cycles'");
      factor_lines.emplace_back(std::string(rest.substr(0, space)), std::string(trim(rest.substr(space))), line_no);
    } else {
      fail(line_no, "unknown keyword '" + key + "'");
    }
  }

  if (!elements) throw InputError("missing 'elements' line");
  InstanceSpec spec;
  try {
    spec.poset = Poset::from_covers(*elements, covers);
  } catch (const InputError& e) {
    fail(elements_line, e.what());
  }
  const std::size_t n = spec.poset.size();
  spec.domain_sizes.assign(n, 0);
  spec.factors.assign(n, std::nullopt);
  for (const auto& [label, entry] : domains) {
    const auto i = spec.poset.find(label);
    if (!i) fail(entry.second, "unknown element '" + label + "'");
    spec.domain_sizes[*i] = entry.first;
  }
  for (Index i = 0; i < n; ++i)
    if (spec.domain_sizes[i] == 0) throw InputError("missing 'domain' line for '" + spec.poset.label(i) + "'");
  for (const auto& [label, cycles, line] : factor_lines) {
    const auto i = spec.poset.find(label);
    if (!i) fail(line, "unknown element '" + label + "'");
    try {
      auto p = Permutation::parse(cycles, spec.domain_sizes[*i]);
      if (!spec.factors[*i]) spec.factors[*i].emplace();
      spec.factors[*i]->push_back(std::move(p));
    } catch (const InputError& e) {
      fail(line, e.what());
    }
  }
  return spec;
}

InstanceSpec load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

} // namespace gwp
