#include "moebius/ext_real.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "moebius/errors.hpp"

namespace moebius {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) {
    return false;
  }
  for (char ch : s) {
    if (std::isdigit(static_cast<unsigned char>(ch)) == 0) {
      return false;
    }
  }
  return true;
}

std::string strip(std::string_view text) {
  auto first = text.find_first_not_of(" \t\n\r");
  if (first == std::string_view::npos) {
    return {};
  }
  auto last = text.find_last_not_of(" \t\n\r");
  return std::string(text.substr(first, last - first + 1));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s = strip(text);
  std::string_view body = s;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw InputError("malformed rational '" + s + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
      throw InputError("zero denominator in '" + s + "'");
    }
    result = Rational(n, d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
      throw InputError("malformed decimal '" + s + "'");
    }
    mpz_class n(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, frac.size());
    result = Rational(n, d);
  } else {
    if (!all_digits(body)) {
      throw InputError("malformed rational '" + s + "'");
    }
    result = Rational(mpz_class(std::string(body), 10));
  }
  result.canonicalize();
  if (negative) {
    result = -result;
  }
  return result;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) {
    return q.get_num().get_str();
  }
  return q.get_str();
}

std::strong_ordering compare(const Rational& lhs, const Rational& rhs) {
  int c = cmp(lhs, rhs);
  if (c < 0) {
    return std::strong_ordering::less;
  }
  if (c > 0) {
    return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

const Rational& ExtReal::value() const {
  if (kind_ != Kind::finite) {
    throw PreconditionError("value() called on an infinite ExtReal");
  }
  return value_;
}

ExtReal ExtReal::operator-() const {
  switch (kind_) {
    case Kind::pos_inf:
      return neg_infinity();
    case Kind::neg_inf:
      return pos_infinity();
    case Kind::finite:
      break;
  }
  return ExtReal(Rational(-value_));
}

ExtReal ExtReal::operator+(const ExtReal& rhs) const {
  auto sum = checked_add(*this, rhs);
  if (!sum) {
    throw UndefinedValueError("+inf + -inf is not well defined");
  }
  return *std::move(sum);
}

bool operator==(const ExtReal& lhs, const ExtReal& rhs) {
  if (lhs.kind_ != rhs.kind_) {
    return false;
  }
  return lhs.kind_ != ExtReal::Kind::finite || lhs.value_ == rhs.value_;
}

std::strong_ordering operator<=>(const ExtReal& lhs, const ExtReal& rhs) {
  auto rank = [](ExtReal::Kind k) {
    switch (k) {
      case ExtReal::Kind::neg_inf:
        return 0;
      case ExtReal::Kind::finite:
        return 1;
      case ExtReal::Kind::pos_inf:
        return 2;
    }
    return 1;
  };
  int lr = rank(lhs.kind_);
  int rr = rank(rhs.kind_);
  if (lr != rr) {
    return lr <=> rr;
  }
  if (lhs.kind_ != ExtReal::Kind::finite) {
    return std::strong_ordering::equal;
  }
  return compare(lhs.value_, rhs.value_);
}

double ExtReal::to_double() const {
  switch (kind_) {
    case Kind::pos_inf:
      return std::numeric_limits<double>::infinity();
    case Kind::neg_inf:
      return -std::numeric_limits<double>::infinity();
    case Kind::finite:
      break;
  }
  return value_.get_d();
}

std::string ExtReal::to_string() const {
  switch (kind_) {
    case Kind::pos_inf:
      return "inf";
    case Kind::neg_inf:
      return "-inf";
    case Kind::finite:
      break;
  }
  return moebius::to_string(value_);
}

ExtReal ExtReal::parse(std::string_view text) {
  std::string s = strip(text);
  if (s == "inf" || s == "+inf" || s == "infinity") {
    return pos_infinity();
  }
  if (s == "-inf" || s == "-infinity") {
    return neg_infinity();
  }
  return ExtReal(parse_rational(s));
}

std::optional<ExtReal> checked_add(const ExtReal& x, const ExtReal& y) {
  if ((x.is_pos_inf() && y.is_neg_inf()) || (x.is_neg_inf() && y.is_pos_inf())) {
    return std::nullopt;
  }
  if (!x.is_finite()) {
    return x;
  }
  if (!y.is_finite()) {
    return y;
  }
  return ExtReal(Rational(x.value() + y.value()));
}

}  // namespace moebius
