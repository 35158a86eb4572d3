#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "moebius/magnitude.hpp"
#include "moebius/symmetry.hpp"

namespace moebius {

/// Regular points of L4 and the three degenerate points A, B, C.
///
/// In log coordinates A = (0, inf, -inf), B = (-inf, 0, inf), C = (inf, -inf, 0);
/// multiplicatively A = (1, inf, 0), B = (0, 1, inf), C = (inf, 0, 1).
enum class L4Kind : std::uint8_t { regular, A, B, C };

std::string_view to_string(L4Kind kind);

/// Three magnitudes of one backing with no further constraint. Tables hold
/// these so that malformed values can be ingested and reported.
struct Triple {
  std::array<Magnitude, 3> coords;

  Scale scale() const { return coords[0].scale(); }
  const Magnitude& operator[](std::size_t i) const { return coords[i]; }
  Magnitude& operator[](std::size_t i) { return coords[i]; }

  friend bool operator==(const Triple&, const Triple&) = default;
};

/// The pinned coordinates of a degenerate point.
Triple pinned_pattern(L4Kind kind, Scale scale);

/// Which point of the extended L4 the triple is, or nullopt when it is not
/// in the extended L4 at all (a regular triple must have product 1, i.e. log
/// sum 0, with every coordinate finite and positive).
std::optional<L4Kind> classify(const Triple& triple);

/// A validated element of the extended L4.
class L4Point {
 public:
  /// Throws InputError unless (u, v, w) is in the extended L4.
  static L4Point make(const Magnitude& u, const Magnitude& v, const Magnitude& w);
  static L4Point make(const Triple& triple);
  static L4Point degenerate(L4Kind kind, Scale scale);

  L4Kind kind() const { return kind_; }
  bool is_regular() const { return kind_ == L4Kind::regular; }
  const Triple& coords() const { return triple_; }
  const Magnitude& operator[](std::size_t i) const { return triple_[i]; }
  Scale scale() const { return triple_.scale(); }

  friend bool operator==(const L4Point&, const L4Point&) = default;

 private:
  L4Point(Triple triple, L4Kind kind) : triple_(std::move(triple)), kind_(kind) {}

  Triple triple_;
  L4Kind kind_;
};

/// Signed permutation of coordinates: (sigma p)[sigma(k)] = p[k], and for
/// sign = -1 every coordinate is replaced by its reciprocal (negated log).
Triple signed_permute(const Perm3& sigma, int sign, const Triple& p);
L4Point signed_permute(const Perm3& sigma, int sign, const L4Point& p);

/// Floating-point log coordinates for reports.
std::array<double, 3> log_coordinates(const Triple& triple);

}  // namespace moebius
