#include "moebius/symmetry.hpp"

#include <utility>

namespace moebius {

namespace {

using Edge = std::pair<std::size_t, std::size_t>;

// Zero-based vertex pairs of the three opposite-edge pairs; one
// representative edge per pair is enough to identify the pair.
constexpr std::array<std::array<Edge, 2>, 3> kOppositePairs{{
    {{{0, 1}, {2, 3}}},
    {{{0, 2}, {1, 3}}},
    {{{0, 3}, {1, 2}}},
}};

std::size_t pair_index(std::size_t a, std::size_t b) {
  for (std::size_t k = 0; k < 3; ++k) {
    for (const auto& [u, v] : kOppositePairs[k]) {
      if ((u == a && v == b) || (u == b && v == a)) {
        return k;
      }
    }
  }
  return 3;  // unreachable for a != b
}

}  // namespace

int sign_of(const Perm4& pi) { return pi.sign(); }

Perm3 phi_by_edge_tracking(const Perm4& pi) {
  std::array<std::uint8_t, 3> images{};
  for (std::size_t k = 0; k < 3; ++k) {
    const auto& [u, v] = kOppositePairs[k][0];
    images[k] = static_cast<std::uint8_t>(pair_index(pi(u), pi(v)));
  }
  return *Perm3::from_images(images);
}

const Perm3& phi(const Perm4& pi) {
  static const std::array<Perm3, 24> table = [] {
    std::array<Perm3, 24> out{};
    const auto& all = Perm4::all();
    for (std::size_t i = 0; i < all.size(); ++i) {
      out[i] = phi_by_edge_tracking(all[i]);
    }
    return out;
  }();
  return table[pi.rank()];
}

const std::array<Perm4, 4>& klein_kernel() {
  static const std::array<Perm4, 4> kernel{
      Perm4::parse("1234"), Perm4::parse("2143"), Perm4::parse("3412"), Perm4::parse("4321")};
  return kernel;
}

}  // namespace moebius
