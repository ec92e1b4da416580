#pragma once

#include <string>
#include <string_view>

#include "gwp/group.hpp"

namespace gwp {

/// Text form of an element: one line per table entry, indices in canonical
/// order and tuples in lexicographic order,
///
///   b[] = (0 1)
///   a[0] = ()
///   a[1] = (0 2 1)
///
/// where the bracket lists the tuple of A(label) in canonical order.
std::string format_element(const GwpElement& f);

/// Inverse of format_element. Every entry must appear exactly once; blank
/// lines and '#' comments are ignored. Throws InputError with a line number.
GwpElement parse_element(std::string_view text, const GwpGroup& group);

} // namespace gwp
