#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gwp/group.hpp"

namespace gwp {

/// A parsed instance file:
///
///   # comment
///   elements: i j k
///   cover: i < k
///   domain: i 3
///   factor: k (0 1)
///
/// One `elements` line, any number of `cover` lines (a cover line may chain,
/// as in `a < b < c`), one `domain` line per element and optional `factor`
/// lines. Factor lines accumulate generators for their element; elements
/// without one get the symmetric group.
struct InstanceSpec {
  Poset poset;
  std::vector<std::size_t> domain_sizes;                      // by poset index
  std::vector<std::optional<std::vector<Permutation>>> factors; // nullopt: symmetric

  GwpGroup build() const;
};

/// Throws InputError naming the offending line.
InstanceSpec parse_instance(std::string_view text);
InstanceSpec load_instance(const std::string& path);

} // namespace gwp
