#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "moebius/ext_real.hpp"

namespace moebius {

/// How a Magnitude stores its value.
///
/// multiplicative: the value m itself, an exact rational in [0, inf].
/// logarithmic:    an exact rational l with m = e^l, so l lives in [-inf, inf].
///
/// Structures built from metric data keep the multiplicative backing; Gromov
/// product models have rational logarithms and keep the logarithmic one.
/// Values of different backings never meet in one comparison.
enum class Scale : std::uint8_t { multiplicative, logarithmic };

std::string_view to_string(Scale scale);
Scale parse_scale(std::string_view text);

/// An extended nonnegative quantity (a distance, a cross-ratio, a radius).
class Magnitude {
 public:
  Magnitude() = default;  // multiplicative 1

  static Magnitude zero(Scale scale);
  static Magnitude one(Scale scale);
  static Magnitude infinity(Scale scale);
  /// Multiplicative value; throws InputError when negative.
  static Magnitude from_rational(Rational value);
  /// Logarithmic value e^log.
  static Magnitude from_log(ExtReal log);
  /// Reads the textual form used in JSON ("p/q", "inf", "-inf").
  static Magnitude parse(std::string_view text, Scale scale);

  Scale scale() const { return scale_; }
  /// Stored representation: the value itself or its logarithm.
  const ExtReal& stored() const { return stored_; }

  bool is_zero() const;
  bool is_infinite() const { return stored_.is_pos_inf(); }
  bool is_one() const;
  bool is_finite_positive() const { return !is_zero() && !is_infinite(); }

  Magnitude reciprocal() const;
  /// Product, or nullopt for 0 * inf.
  std::optional<Magnitude> checked_times(const Magnitude& rhs) const;
  /// Product; throws UndefinedValueError for 0 * inf.
  Magnitude times(const Magnitude& rhs) const;
  Magnitude over(const Magnitude& rhs) const { return times(rhs.reciprocal()); }
  Magnitude squared() const { return times(*this); }

  /// Natural logarithm as a double (presentation only).
  double log_double() const;
  std::string to_string() const { return stored_.to_string(); }

  friend bool operator==(const Magnitude& lhs, const Magnitude& rhs);
  /// Orders by size; throws ScaleMismatchError across backings.
  friend std::strong_ordering operator<=>(const Magnitude& lhs, const Magnitude& rhs);

 private:
  Magnitude(Scale scale, ExtReal stored) : scale_(scale), stored_(std::move(stored)) {}

  Scale scale_ = Scale::multiplicative;
  ExtReal stored_ = ExtReal(1L);
};

/// A value strictly between two finite magnitudes (arithmetic mean of the
/// stored representations). Used to sample thresholds between breakpoints.
Magnitude midpoint(const Magnitude& lo, const Magnitude& hi);

void require_same_scale(Scale lhs, Scale rhs);

}  // namespace moebius
