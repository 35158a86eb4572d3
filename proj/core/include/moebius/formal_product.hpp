#pragma once

#include "moebius/magnitude.hpp"

namespace moebius {

/// A product of magnitudes in which zero and infinite factors are kept as
/// formal powers of an infinitesimal instead of being multiplied out.
///
/// Every zero factor contributes order +1 and every infinite factor order -1,
/// both with unit finite part. Equal numbers of infinite factors in the
/// numerator and denominator therefore cancel, which reproduces the reduced
/// cross-ratio formulas for tuples that contain an infinitely remote point.
class FormalProduct {
 public:
  explicit FormalProduct(Scale scale) : finite_(Magnitude::one(scale)) {}

  FormalProduct& multiply(const Magnitude& factor);
  FormalProduct& divide(const Magnitude& factor);

  /// zero for positive order, infinity for negative order, the finite part
  /// otherwise.
  Magnitude value() const;
  int order() const { return order_; }

 private:
  Magnitude finite_;
  int order_ = 0;
};

}  // namespace moebius
