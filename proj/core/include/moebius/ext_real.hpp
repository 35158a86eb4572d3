#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace moebius {

using Rational = mpq_class;

/// Parses "p/q", "p" or a terminating decimal such as "0.25" into an exact
/// rational. Throws InputError on anything else.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" rendering ("p" when the denominator is 1).
std::string to_string(const Rational& q);

/// Three-way comparison for GMP rationals, which lack operator<=>.
std::strong_ordering compare(const Rational& lhs, const Rational& rhs);

/// An exact rational extended by the two sentinels +inf and -inf.
class ExtReal {
 public:
  enum class Kind : std::uint8_t { finite, pos_inf, neg_inf };

  ExtReal() = default;
  /// Canonicalizes, so values built from an unreduced p/q compare exactly.
  ExtReal(Rational value) : value_(std::move(value)) {  // NOLINT(google-explicit-constructor)
    value_.canonicalize();
  }
  ExtReal(long value) : value_(value) {}                 // NOLINT(google-explicit-constructor)

  static ExtReal pos_infinity() { return ExtReal(Kind::pos_inf); }
  static ExtReal neg_infinity() { return ExtReal(Kind::neg_inf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_pos_inf() const { return kind_ == Kind::pos_inf; }
  bool is_neg_inf() const { return kind_ == Kind::neg_inf; }

  /// The finite value. Throws PreconditionError on an infinite sentinel.
  const Rational& value() const;

  ExtReal operator-() const;

  /// Sum when it is well defined; +inf + -inf throws UndefinedValueError.
  ExtReal operator+(const ExtReal& rhs) const;
  ExtReal operator-(const ExtReal& rhs) const { return *this + (-rhs); }

  friend bool operator==(const ExtReal& lhs, const ExtReal& rhs);
  friend std::strong_ordering operator<=>(const ExtReal& lhs, const ExtReal& rhs);

  double to_double() const;

  /// "p/q", "inf" or "-inf".
  std::string to_string() const;
  static ExtReal parse(std::string_view text);

 private:
  explicit ExtReal(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::finite;
  Rational value_ = 0;
};

/// Exact sum, or nullopt when the sum combines +inf with -inf.
std::optional<ExtReal> checked_add(const ExtReal& x, const ExtReal& y);

}  // namespace moebius
