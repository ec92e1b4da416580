#include "gwp/permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "gwp/error.hpp"

namespace gwp {

Permutation Permutation::identity(std::size_t n) {
  std::vector<point_type> images(n);
  std::iota(images.begin(), images.end(), point_type{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<point_type> images) {
  std::vector<bool> seen(images.size(), false);
  for (point_type p : images) {
    if (p >= images.size() || seen[p]) throw InputError("image list is not a bijection");
    seen[p] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(std::size_t n, point_type a, point_type b) {
  if (a >= n || b >= n) throw InputError("transposition point out of range");
  Permutation p = identity(n);
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

Permutation Permutation::cycle(std::size_t n, std::span<const point_type> points) {
  Permutation p = identity(n);
  std::vector<bool> used(n, false);
  for (point_type x : points) {
    if (x >= n) throw InputError("cycle point out of range");
    if (used[x]) throw InputError("repeated point in cycle");
    used[x] = true;
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    p.images_[points[i]] = points[(i + 1) % points.size()];
  return p;
}

Permutation Permutation::parse(std::string_view text, std::size_t n) {
  Permutation result = identity(n);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) {
    throw InputError("bad cycle notation '" + std::string(text) + "': " + why);
  };
  skip_ws();
  if (pos == text.size()) fail("empty string");
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<point_type> cyc;
    while (true) {
      skip_ws();
      if (pos == text.size()) fail("unterminated cycle");
      if (text[pos] == ')') { ++pos; break; }
      if (text[pos] == ',') { ++pos; continue; }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected a point");
      std::uint64_t v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (v >= n) fail("point out of range for degree " + std::to_string(n));
        ++pos;
      }
      cyc.push_back(static_cast<point_type>(v));
    }
    if (cyc.size() > 1) {
      // Cycles compose left to right in the order written.
      Permutation c;
      try {
        c = cycle(n, cyc);
      } catch (const InputError& e) {
        fail(e.what());
      }
      result = result * c;
    }
  }
  return result;
}

Permutation Permutation::inverse() const {
  std::vector<point_type> inv(images_.size());
  for (point_type p = 0; p < images_.size(); ++p) inv[images_[p]] = p;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (point_type p = 0; p < images_.size(); ++p)
    if (images_[p] != p) return false;
  return true;
}

std::optional<Permutation::point_type> Permutation::first_moved_point() const {
  for (point_type p = 0; p < images_.size(); ++p)
    if (images_[p] != p) return p;
  return std::nullopt;
}

std::vector<std::vector<Permutation::point_type>> Permutation::cycles() const {
  std::vector<std::vector<point_type>> out;
  std::vector<bool> seen(images_.size(), false);
  for (point_type start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<point_type> c;
    for (point_type p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      c.push_back(p);
    }
    out.push_back(std::move(c));
  }
  return out;
}

unsigned Permutation::sign() const {
  std::size_t parity = 0;
  for (const auto& c : cycles()) parity += c.size() - 1;
  return static_cast<unsigned>(parity & 1U);
}

std::size_t Permutation::order() const {
  std::size_t o = 1;
  for (const auto& c : cycles()) o = std::lcm(o, c.size());
  return o;
}

std::string Permutation::to_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size())
    throw InputError("cannot compose permutations of degree " + std::to_string(a.size()) +
                     " and " + std::to_string(b.size()));
  std::vector<Permutation::point_type> images(a.size());
  for (Permutation::point_type p = 0; p < a.size(); ++p) images[p] = b[a[p]];
  return Permutation(std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t seed = p.size();
  for (auto x : p.images()) seed ^= x + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}

} // namespace gwp
