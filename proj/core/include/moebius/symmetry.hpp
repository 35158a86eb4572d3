#pragma once

// The groups S4 and S3, the sign character and the cross-ratio homomorphism
// phi: S4 -> S3 whose kernel is the Klein four-group.
//
// Permutations are written as image strings "i1 i2 ... ik" with ij = pi(j),
// so "2143" swaps 1<->2 and 3<->4. Composition is (pi * rho)(j) = pi(rho(j)).
//
// Action conventions (calibrated so that M_d(pi P) = sign(pi) phi(pi) M_d(P)
// holds exactly, see tests/symmetry_test.cpp):
//   on 4-tuples:        (pi P)[pi(j)] = P[j]   -- the entry in slot j moves to slot pi(j)
//   on L4 coordinates:  (sigma p)[sigma(k)] = p[k]
// Both are left actions.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "moebius/errors.hpp"

namespace moebius {

template <std::size_t N>
class Perm {
 public:
  static constexpr std::size_t kSize = N;
  static constexpr std::size_t kOrder = [] {
    std::size_t f = 1;
    for (std::size_t i = 2; i <= N; ++i) {
      f *= i;
    }
    return f;
  }();

  constexpr Perm() {
    for (std::size_t i = 0; i < N; ++i) {
      images_[i] = static_cast<std::uint8_t>(i);
    }
  }

  static constexpr Perm identity() { return Perm(); }

  /// Zero-based images; nullopt unless they form a permutation.
  static constexpr std::optional<Perm> from_images(const std::array<std::uint8_t, N>& images) {
    std::array<bool, N> seen{};
    for (auto v : images) {
      if (v >= N || seen[v]) {
        return std::nullopt;
      }
      seen[v] = true;
    }
    Perm p;
    p.images_ = images;
    return p;
  }

  /// Parses the one-based digit notation, e.g. "2431".
  static Perm parse(std::string_view digits) {
    if (digits.size() != N) {
      throw InputError("permutation '" + std::string(digits) + "' has wrong length");
    }
    std::array<std::uint8_t, N> images{};
    for (std::size_t i = 0; i < N; ++i) {
      int d = digits[i] - '1';
      if (d < 0 || d >= static_cast<int>(N)) {
        throw InputError("bad digit in permutation '" + std::string(digits) + "'");
      }
      images[i] = static_cast<std::uint8_t>(d);
    }
    auto p = from_images(images);
    if (!p) {
      throw InputError("'" + std::string(digits) + "' is not a permutation");
    }
    return *p;
  }

  /// Zero-based image of j.
  constexpr std::size_t operator()(std::size_t j) const { return images_[j]; }
  constexpr const std::array<std::uint8_t, N>& images() const { return images_; }

  constexpr Perm inverse() const {
    Perm inv;
    for (std::size_t j = 0; j < N; ++j) {
      inv.images_[images_[j]] = static_cast<std::uint8_t>(j);
    }
    return inv;
  }

  /// +1 for even permutations, -1 for odd ones.
  constexpr int sign() const {
    int inversions = 0;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = i + 1; j < N; ++j) {
        if (images_[i] > images_[j]) {
          ++inversions;
        }
      }
    }
    return inversions % 2 == 0 ? 1 : -1;
  }

  std::string to_string() const {
    std::string s;
    for (auto v : images_) {
      s.push_back(static_cast<char>('1' + v));
    }
    return s;
  }

  /// All N! permutations in lexicographic order of their image strings.
  static const std::array<Perm, kOrder>& all() {
    static const std::array<Perm, kOrder> table = [] {
      std::array<Perm, kOrder> out{};
      std::array<std::uint8_t, N> images{};
      for (std::size_t i = 0; i < N; ++i) {
        images[i] = static_cast<std::uint8_t>(i);
      }
      std::size_t k = 0;
      do {
        out[k++] = *from_images(images);
      } while (std::next_permutation(images.begin(), images.end()));
      return out;
    }();
    return table;
  }

  /// Position of this permutation in all().
  std::size_t rank() const {
    const auto& table = all();
    auto it = std::lower_bound(table.begin(), table.end(), *this);
    return static_cast<std::size_t>(it - table.begin());
  }

  friend constexpr Perm operator*(const Perm& lhs, const Perm& rhs) {
    Perm out;
    for (std::size_t j = 0; j < N; ++j) {
      out.images_[j] = lhs.images_[rhs.images_[j]];
    }
    return out;
  }

  friend constexpr bool operator==(const Perm&, const Perm&) = default;
  friend constexpr auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::array<std::uint8_t, N> images_{};
};

using Perm4 = Perm<4>;
using Perm3 = Perm<3>;

int sign_of(const Perm4& pi);

/// The cross-ratio homomorphism, read from a table built once by
/// phi_by_edge_tracking.
const Perm3& phi(const Perm4& pi);

/// phi computed directly: the opposite edge pairs of a tetrahedron,
/// E1 = (12)(34), E2 = (13)(24), E3 = (14)(23), are permuted by pi and
/// phi(pi)(k) is the index of the pair pi(E_k).
Perm3 phi_by_edge_tracking(const Perm4& pi);

/// The kernel of phi: 1234, 2143, 3412, 4321.
const std::array<Perm4, 4>& klein_kernel();

/// (pi P)[pi(j)] = P[j].
template <typename T>
std::array<T, 4> act_on_tuple(const Perm4& pi, const std::array<T, 4>& tuple) {
  std::array<T, 4> out{};
  for (std::size_t j = 0; j < 4; ++j) {
    out[pi(j)] = tuple[j];
  }
  return out;
}

}  // namespace moebius
