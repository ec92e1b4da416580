#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gwp {

/// Permutation of the points {0, ..., n-1}. Points act on the right, so
/// `a * b` applies `a` first and then `b`.
class Permutation {
public:
  using point_type = std::uint32_t;

  Permutation() = default;

  static Permutation identity(std::size_t n);
  /// Throws InputError unless `images` is a bijection on {0, ..., n-1}.
  static Permutation from_images(std::vector<point_type> images);
  static Permutation transposition(std::size_t n, point_type a, point_type b);
  /// The cycle (c0 c1 ... ck) on n points.
  static Permutation cycle(std::size_t n, std::span<const point_type> points);

  /// Parses cycle notation such as "(0 1)(2 3)"; "()" is the identity.
  static Permutation parse(std::string_view text, std::size_t n);

  std::size_t size() const { return images_.size(); }
  point_type operator[](point_type p) const { return images_[p]; }
  const std::vector<point_type>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  std::optional<point_type> first_moved_point() const;
  /// 0 for even, 1 for odd.
  unsigned sign() const;
  std::size_t order() const;
  std::vector<std::vector<point_type>> cycles() const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  friend Permutation compose(const Permutation& a, const Permutation& b);

private:
  explicit Permutation(std::vector<point_type> images) : images_(std::move(images)) {}

  std::vector<point_type> images_;
};

/// Left-to-right composition: p maps to b[a[p]]. Throws InputError on a
/// domain mismatch.
Permutation compose(const Permutation& a, const Permutation& b);

inline Permutation operator*(const Permutation& a, const Permutation& b) {
  return compose(a, b);
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.to_string();
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

} // namespace gwp
