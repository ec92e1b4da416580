#include "gwp/serialize.hpp"

#include <sstream>

#include "gwp/error.hpp"

namespace gwp {

std::string format_element(const GwpElement& f) {
  const GwpGroup& g = f.group();
  std::ostringstream os;
  for (Index i = 0; i < g.index_count(); ++i) {
    for (std::size_t w = 0; w < g.upset_size(i); ++w) {
      os << g.poset().label(i) << '[';
      const auto tuple = g.upset_tuple(i, w);
      for (std::size_t t = 0; t < tuple.size(); ++t) os << (t ? "," : "") << tuple[t];
      os << "] = " << f.entry(i, w).to_string() << '\n';
    }
  }
  return os.str();
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

} // namespace

GwpElement parse_element(std::string_view text, const GwpGroup& group) {
  std::vector<std::vector<Permutation>> tables(group.index_count());
  std::vector<std::vector<bool>> filled(group.index_count());
  for (Index i = 0; i < group.index_count(); ++i) {
    tables[i].assign(group.upset_size(i), Permutation::identity(group.domain_size(i)));
    filled[i].assign(group.upset_size(i), false);
  }

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

    auto fail = [&](const std::string& why) -> void {
      throw InputError("element line " + std::to_string(line_no) + ": " + why);
    };
    const auto open = line.find('[');
    const auto close = line.find(']');
    const auto eq = line.find('=');
    if (open == std::string_view::npos || close == std::string_view::npos || eq == std::string_view::npos ||
        !(open < close && close < eq))
      fail("expected 'label[tuple] = cycles'");

    const std::string label(trim(line.substr(0, open)));
    const auto index = group.poset().find(label);
    if (!index) fail("unknown label '" + label + "'");
    const Index i = *index;

    std::vector<std::uint32_t> coords(group.index_count(), 0);
    std::string_view tuple_text = trim(line.substr(open + 1, close - open - 1));
    const auto& up = group.upset(i);
    std::size_t component = 0;
    while (!tuple_text.empty()) {
      const auto comma = tuple_text.find(',');
      const auto piece = trim(tuple_text.substr(0, comma));
      if (component >= up.size()) fail("tuple for '" + label + "' has too many components");
      std::uint64_t v = 0;
      if (piece.empty()) fail("empty tuple component");
      for (char c : piece) {
        if (c < '0' || c > '9') fail("tuple components must be integers");
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
        if (v >= group.domain_size(up[component])) fail("tuple component out of range");
      }
      coords[up[component++]] = static_cast<std::uint32_t>(v);
      if (comma == std::string_view::npos) break;
      tuple_text = tuple_text.substr(comma + 1);
    }
    if (component != up.size()) fail("tuple for '" + label + "' needs " + std::to_string(up.size()) + " components");

    const std::size_t rank = group.upset_rank(i, coords);
    if (filled[i][rank]) fail("duplicate entry for '" + label + "'");
    try {
      tables[i][rank] = Permutation::parse(trim(line.substr(eq + 1)), group.domain_size(i));
    } catch (const InputError& e) {
      fail(e.what());
    }
    filled[i][rank] = true;
  }

  for (Index i = 0; i < group.index_count(); ++i)
    for (bool b : filled[i])
      if (!b) throw InputError("element text is missing entries for '" + group.poset().label(i) + "'");
  return GwpElement(group, std::move(tables));
}

} // namespace gwp
