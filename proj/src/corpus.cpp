#include "gwp/corpus.hpp"

#include "gwp/error.hpp"

namespace gwp {

GwpGroup shape_instance(SmallShape shape, const std::vector<std::size_t>& sizes) {
  if (sizes.size() != 2 && sizes.size() != 3) throw InputError("small shapes have two or three elements");
  std::vector<std::string> labels{"i", "j", "k"};
  labels.resize(sizes.size());
  std::vector<std::pair<std::string, std::string>> covers;
  switch (shape) {
  case SmallShape::Chain:
    covers = {{"i", "j"}};
    if (sizes.size() == 3) covers.emplace_back("j", "k");
    break;
  case SmallShape::Antichain: break;
  case SmallShape::Triangle: covers = {{"i", "j"}, {"i", "k"}}; break;
  case SmallShape::Pyramid: covers = {{"i", "k"}, {"j", "k"}}; break;
  case SmallShape::Wrdi: covers = {{"i", "k"}}; break;
  case SmallShape::NotSmall: throw InputError("not a small shape");
  }
  if (sizes.size() == 2 && shape != SmallShape::Chain && shape != SmallShape::Antichain)
    throw InputError("this shape needs three elements");
  // Labels i < j < k sort in role order, so sizes map directly to indices.
  return GwpGroup(Poset::from_covers(labels, covers), sizes);
}

std::vector<NamedInstance> desk_corpus() {
  using S = SmallShape;
  std::vector<NamedInstance> out;
  auto add = [&](std::string name, GwpGroup g) { out.push_back({std::move(name), std::move(g)}); };

  add("singleton-3", GwpGroup(Poset::antichain({"a"}), {3}));
  add("chain-2-2", shape_instance(S::Chain, {2, 2}));
  add("chain-2-3", shape_instance(S::Chain, {2, 3}));
  add("chain-3-2", shape_instance(S::Chain, {3, 2}));
  add("chain-3-3", shape_instance(S::Chain, {3, 3}));
  add("chain-2-2-2", shape_instance(S::Chain, {2, 2, 2}));
  add("chain-2-2-3", shape_instance(S::Chain, {2, 2, 3}));
  add("antichain-2-2", shape_instance(S::Antichain, {2, 2}));
  add("antichain-2-3", shape_instance(S::Antichain, {2, 3}));
  add("antichain-2-2-2", shape_instance(S::Antichain, {2, 2, 2}));
  add("antichain-2-3-3", shape_instance(S::Antichain, {2, 3, 3}));
  add("triangle-2-2-2", shape_instance(S::Triangle, {2, 2, 2}));
  add("triangle-2-2-3", shape_instance(S::Triangle, {2, 2, 3}));
  add("pyramid-2-2-2", shape_instance(S::Pyramid, {2, 2, 2}));
  add("pyramid-3-2-2", shape_instance(S::Pyramid, {3, 2, 2}));
  add("pyramid-2-3-3", shape_instance(S::Pyramid, {2, 3, 3}));
  add("wrdi-2-2-2", shape_instance(S::Wrdi, {2, 2, 2}));
  add("wrdi-3-2-3", shape_instance(S::Wrdi, {3, 2, 3}));
  add("two-chains-2", GwpGroup(Poset::from_covers({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}), {2, 2, 2, 2}));
  add("diamond-2", GwpGroup(Poset::from_covers({"a", "b", "c", "d"},
                                               {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}}),
                            {2, 2, 2, 2}));
  add("claw-2", GwpGroup(Poset::from_covers({"a", "b", "c", "d"}, {{"a", "d"}, {"b", "d"}, {"c", "d"}}),
                         {2, 2, 2, 2}));
  add("antichain-2-2-2-2", GwpGroup(Poset::antichain({"a", "b", "c", "d"}), {2, 2, 2, 2}));
  return out;
}

std::vector<NamedInstance> intransitive_corpus() {
  std::vector<NamedInstance> out;
  // <(0 1)> on three points fixes 2.
  const PermGroup swap01(3, {Permutation::parse("(0 1)", 3)});
  out.push_back({"chain-intransitive-top",
                 GwpGroup(Poset::chain({"i", "j"}), {2, 3}, {PermGroup::symmetric(2), swap01})});
  out.push_back({"antichain-intransitive",
                 GwpGroup(Poset::antichain({"i", "j"}), {3, 2}, {swap01, PermGroup::symmetric(2)})});
  return out;
}

} // namespace gwp
