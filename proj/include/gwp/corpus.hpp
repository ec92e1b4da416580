#pragma once

#include <string>
#include <vector>

#include "gwp/group.hpp"

namespace gwp {

struct NamedInstance {
  std::string name;
  GwpGroup group;
};

/// A small-shape instance with labels "i", "j", "k" arranged as the shape
/// describes (see SmallClassification). `sizes` are |Delta| in role order and
/// also fix the poset size (two or three).
GwpGroup shape_instance(SmallShape shape, const std::vector<std::size_t>& sizes);

/// Built-in desk-scale instances with symmetric factors: chains, antichains,
/// every three-element shape, and a few four-element posets.
std::vector<NamedInstance> desk_corpus();

/// Instances with at least one intransitive factor.
std::vector<NamedInstance> intransitive_corpus();

} // namespace gwp
