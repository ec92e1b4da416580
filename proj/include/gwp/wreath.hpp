#pragma once

#include <cstdint>
#include <vector>

#include "gwp/perm_group.hpp"

namespace gwp {

/// The permutational wreath product B wr_X T, with T a permutation group on
/// Y and X a quotient of Y through `projection`. Elements are pairs (base,
/// top) where base maps X to B and top permutes Y. Kept separate from the
/// generalised wreath product so the two can be compared.
class StandaloneWreath {
public:
  struct Element {
    std::vector<Permutation> base; // indexed by X
    Permutation top;               // on Y

    friend bool operator==(const Element&, const Element&) = default;
  };

  /// Throws InputError when some top generator does not preserve the fibres
  /// of `projection`.
  StandaloneWreath(PermGroup base, PermGroup top, std::vector<std::uint32_t> projection, std::size_t x_size);

  const PermGroup& base_group() const { return base_; }
  const PermGroup& top_group() const { return top_; }
  std::size_t x_size() const { return x_size_; }
  std::size_t y_size() const { return projection_.size(); }

  /// |B|^|X| |T|
  BigInt order() const;
  Element identity() const;
  bool contains(const Element& e) const;

  /// x . top on X.
  std::vector<std::uint32_t> induced(const Permutation& top) const;
  /// (b, s)(b', s') = (x -> b(x) b'(x . s), s s')
  Element multiply(const Element& a, const Element& b) const;
  /// Action on B's points times Y: (c, y) -> (c . b(p(y)), y . s), point
  /// (c, y) numbered c |Y| + y.
  Permutation natural_action(const Element& e) const;

private:
  PermGroup base_;
  PermGroup top_;
  std::vector<std::uint32_t> projection_;
  std::size_t x_size_;
  std::vector<std::uint32_t> section_; // one y above each x
};

} // namespace gwp
