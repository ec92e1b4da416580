#include "gwp/wreath.hpp"

#include <limits>

#include "gwp/error.hpp"

namespace gwp {

StandaloneWreath::StandaloneWreath(PermGroup base, PermGroup top, std::vector<std::uint32_t> projection,
                                   std::size_t x_size)
    : base_(std::move(base)), top_(std::move(top)), projection_(std::move(projection)), x_size_(x_size) {
  if (projection_.size() != top_.degree()) throw InputError("projection must cover every point of the top group");
  constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
  section_.assign(x_size_, unset);
  for (std::uint32_t y = 0; y < projection_.size(); ++y) {
    if (projection_[y] >= x_size_) throw InputError("projection leaves the quotient");
    if (section_[projection_[y]] == unset) section_[projection_[y]] = y;
  }
  for (auto s : section_)
    if (s == unset) throw InputError("projection is not onto");
  for (const auto& t : top_.generators())
    for (std::uint32_t y = 0; y < projection_.size(); ++y)
      if (projection_[t[y]] != projection_[t[section_[projection_[y]]]])
        throw InputError("top group does not act on the quotient");
}

BigInt StandaloneWreath::order() const {
  BigInt out = top_.order();
  const BigInt b = base_.order();
  for (std::size_t x = 0; x < x_size_; ++x) out *= b;
  return out;
}

StandaloneWreath::Element StandaloneWreath::identity() const {
  return {std::vector<Permutation>(x_size_, Permutation::identity(base_.degree())),
          Permutation::identity(top_.degree())};
}

bool StandaloneWreath::contains(const Element& e) const {
  if (e.base.size() != x_size_ || e.top.size() != top_.degree()) return false;
  for (const auto& b : e.base)
    if (b.size() != base_.degree() || !base_.contains(b)) return false;
  return top_.contains(e.top);
}

std::vector<std::uint32_t> StandaloneWreath::induced(const Permutation& top) const {
  std::vector<std::uint32_t> out(x_size_);
  for (std::size_t x = 0; x < x_size_; ++x) out[x] = projection_[top[section_[x]]];
  return out;
}

StandaloneWreath::Element StandaloneWreath::multiply(const Element& a, const Element& b) const {
  const auto move = induced(a.top);
  Element out{std::vector<Permutation>(), a.top * b.top};
  out.base.reserve(x_size_);
  for (std::size_t x = 0; x < x_size_; ++x) out.base.push_back(a.base[x] * b.base[move[x]]);
  return out;
}

Permutation StandaloneWreath::natural_action(const Element& e) const {
  const std::size_t ny = projection_.size();
  std::vector<Permutation::point_type> img(base_.degree() * ny);
  for (std::uint32_t c = 0; c < base_.degree(); ++c)
    for (std::uint32_t y = 0; y < ny; ++y)
      img[c * ny + y] = static_cast<Permutation::point_type>(e.base[projection_[y]][c] * ny + e.top[y]);
  return Permutation::from_images(std::move(img));
}

} // namespace gwp
