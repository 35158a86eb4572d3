#include "moebius/magnitude.hpp"

#include <cmath>
#include <limits>

#include "moebius/errors.hpp"
#include "moebius/formal_product.hpp"

namespace moebius {

std::string_view to_string(Scale scale) {
  return scale == Scale::multiplicative ? "multiplicative" : "log";
}

Scale parse_scale(std::string_view text) {
  if (text == "multiplicative" || text == "mul") {
    return Scale::multiplicative;
  }
  if (text == "log" || text == "logarithmic") {
    return Scale::logarithmic;
  }
  throw InputError("unknown scale '" + std::string(text) + "'");
}

void require_same_scale(Scale lhs, Scale rhs) {
  if (lhs != rhs) {
    throw ScaleMismatchError("cannot mix multiplicative and logarithmic values");
  }
}

Magnitude Magnitude::zero(Scale scale) {
  return scale == Scale::multiplicative ? Magnitude(scale, ExtReal(0L))
                                        : Magnitude(scale, ExtReal::neg_infinity());
}

Magnitude Magnitude::one(Scale scale) {
  return scale == Scale::multiplicative ? Magnitude(scale, ExtReal(1L))
                                        : Magnitude(scale, ExtReal(0L));
}

Magnitude Magnitude::infinity(Scale scale) { return Magnitude(scale, ExtReal::pos_infinity()); }

Magnitude Magnitude::from_rational(Rational value) {
  if (sgn(value) < 0) {
    throw InputError("negative magnitude " + moebius::to_string(value));
  }
  return Magnitude(Scale::multiplicative, ExtReal(std::move(value)));
}

Magnitude Magnitude::from_log(ExtReal log) { return Magnitude(Scale::logarithmic, std::move(log)); }

Magnitude Magnitude::parse(std::string_view text, Scale scale) {
  ExtReal value = ExtReal::parse(text);
  if (scale == Scale::logarithmic) {
    return from_log(std::move(value));
  }
  if (value.is_neg_inf()) {
    throw InputError("-inf is not a multiplicative magnitude");
  }
  if (value.is_pos_inf()) {
    return infinity(scale);
  }
  return from_rational(value.value());
}

bool Magnitude::is_zero() const {
  if (scale_ == Scale::logarithmic) {
    return stored_.is_neg_inf();
  }
  return stored_.is_finite() && sgn(stored_.value()) == 0;
}

bool Magnitude::is_one() const {
  if (!stored_.is_finite()) {
    return false;
  }
  return scale_ == Scale::logarithmic ? sgn(stored_.value()) == 0 : stored_.value() == 1;
}

Magnitude Magnitude::reciprocal() const {
  if (scale_ == Scale::logarithmic) {
    return Magnitude(scale_, -stored_);
  }
  if (is_zero()) {
    return infinity(scale_);
  }
  if (is_infinite()) {
    return zero(scale_);
  }
  return Magnitude(scale_, ExtReal(Rational(1 / stored_.value())));
}

std::optional<Magnitude> Magnitude::checked_times(const Magnitude& rhs) const {
  require_same_scale(scale_, rhs.scale_);
  if (scale_ == Scale::logarithmic) {
    auto sum = checked_add(stored_, rhs.stored_);
    if (!sum) {
      return std::nullopt;
    }
    return Magnitude(scale_, *std::move(sum));
  }
  if ((is_zero() && rhs.is_infinite()) || (is_infinite() && rhs.is_zero())) {
    return std::nullopt;
  }
  if (is_infinite() || rhs.is_infinite()) {
    return infinity(scale_);
  }
  return Magnitude(scale_, ExtReal(Rational(stored_.value() * rhs.stored_.value())));
}

Magnitude Magnitude::times(const Magnitude& rhs) const {
  auto product = checked_times(rhs);
  if (!product) {
    throw UndefinedValueError("0 * inf is not well defined");
  }
  return *std::move(product);
}

double Magnitude::log_double() const {
  if (scale_ == Scale::logarithmic) {
    return stored_.to_double();
  }
  if (is_zero()) {
    return -std::numeric_limits<double>::infinity();
  }
  if (is_infinite()) {
    return std::numeric_limits<double>::infinity();
  }
  // Split numerator and denominator so huge rationals do not overflow.
  const Rational& q = stored_.value();
  long exp_num = 0;
  long exp_den = 0;
  double mant_num = mpz_get_d_2exp(&exp_num, q.get_num_mpz_t());
  double mant_den = mpz_get_d_2exp(&exp_den, q.get_den_mpz_t());
  return std::log(mant_num) - std::log(mant_den) +
         static_cast<double>(exp_num - exp_den) * std::log(2.0);
}

bool operator==(const Magnitude& lhs, const Magnitude& rhs) {
  return lhs.scale_ == rhs.scale_ && lhs.stored_ == rhs.stored_;
}

std::strong_ordering operator<=>(const Magnitude& lhs, const Magnitude& rhs) {
  require_same_scale(lhs.scale_, rhs.scale_);
  return lhs.stored_ <=> rhs.stored_;
}

Magnitude midpoint(const Magnitude& lo, const Magnitude& hi) {
  require_same_scale(lo.scale(), hi.scale());
  if (!lo.stored().is_finite() || !hi.stored().is_finite()) {
    throw PreconditionError("midpoint requires finite stored values");
  }
  Rational mid = (lo.stored().value() + hi.stored().value()) / 2;
  return lo.scale() == Scale::logarithmic ? Magnitude::from_log(ExtReal(mid))
                                          : Magnitude::from_rational(mid);
}

FormalProduct& FormalProduct::multiply(const Magnitude& factor) {
  if (factor.is_zero()) {
    ++order_;
  } else if (factor.is_infinite()) {
    --order_;
  } else {
    finite_ = finite_.times(factor);
  }
  return *this;
}

FormalProduct& FormalProduct::divide(const Magnitude& factor) {
  if (factor.is_zero()) {
    --order_;
  } else if (factor.is_infinite()) {
    ++order_;
  } else {
    finite_ = finite_.over(factor);
  }
  return *this;
}

Magnitude FormalProduct::value() const {
  if (order_ > 0) {
    return Magnitude::zero(finite_.scale());
  }
  if (order_ < 0) {
    return Magnitude::infinity(finite_.scale());
  }
  return finite_;
}

}  // namespace moebius
