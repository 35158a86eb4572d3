#include "moebius/l4_point.hpp"

#include "moebius/errors.hpp"

namespace moebius {

std::string_view to_string(L4Kind kind) {
  switch (kind) {
    case L4Kind::regular:
      return "regular";
    case L4Kind::A:
      return "A";
    case L4Kind::B:
      return "B";
    case L4Kind::C:
      return "C";
  }
  return "?";
}

Triple pinned_pattern(L4Kind kind, Scale scale) {
  const Magnitude zero = Magnitude::zero(scale);
  const Magnitude one = Magnitude::one(scale);
  const Magnitude inf = Magnitude::infinity(scale);
  switch (kind) {
    case L4Kind::A:
      return Triple{{one, inf, zero}};
    case L4Kind::B:
      return Triple{{zero, one, inf}};
    case L4Kind::C:
      return Triple{{inf, zero, one}};
    case L4Kind::regular:
      break;
  }
  throw PreconditionError("regular points have no pinned pattern");
}

std::optional<L4Kind> classify(const Triple& triple) {
  const Scale scale = triple[0].scale();
  if (triple[1].scale() != scale || triple[2].scale() != scale) {
    return std::nullopt;
  }
  bool all_regular = true;
  for (const auto& c : triple.coords) {
    all_regular = all_regular && c.is_finite_positive();
  }
  if (all_regular) {
    auto product = triple[0].times(triple[1]).times(triple[2]);
    if (product.is_one()) {
      return L4Kind::regular;
    }
    return std::nullopt;
  }
  for (auto kind : {L4Kind::A, L4Kind::B, L4Kind::C}) {
    if (triple == pinned_pattern(kind, scale)) {
      return kind;
    }
  }
  return std::nullopt;
}

L4Point L4Point::make(const Magnitude& u, const Magnitude& v, const Magnitude& w) {
  return make(Triple{{u, v, w}});
}

L4Point L4Point::make(const Triple& triple) {
  auto kind = classify(triple);
  if (!kind) {
    throw InputError("(" + triple[0].to_string() + ", " + triple[1].to_string() + ", " +
                     triple[2].to_string() + ") is not a point of the extended L4");
  }
  return L4Point(triple, *kind);
}

L4Point L4Point::degenerate(L4Kind kind, Scale scale) {
  return L4Point(pinned_pattern(kind, scale), kind);
}

Triple signed_permute(const Perm3& sigma, int sign, const Triple& p) {
  // A degenerate pattern is fixed by the slot of its finite coordinate;
  // reciprocals would swap 0 and inf, so resolve to the pinned pattern instead.
  if (auto kind = classify(p); kind && *kind != L4Kind::regular) {
    static constexpr L4Kind by_slot[3] = {L4Kind::A, L4Kind::B, L4Kind::C};
    const std::size_t slot = *kind == L4Kind::A ? 0 : *kind == L4Kind::B ? 1 : 2;
    return pinned_pattern(by_slot[sigma(slot)], p[0].scale());
  }
  Triple out = p;
  for (std::size_t k = 0; k < 3; ++k) {
    out[sigma(k)] = sign < 0 ? p[k].reciprocal() : p[k];
  }
  return out;
}

L4Point signed_permute(const Perm3& sigma, int sign, const L4Point& p) {
  // The signed S3 action preserves the extended L4 and permutes {A, B, C}.
  return L4Point::make(signed_permute(sigma, sign, p.coords()));
}

std::array<double, 3> log_coordinates(const Triple& triple) {
  return {triple[0].log_double(), triple[1].log_double(), triple[2].log_double()};
}

}  // namespace moebius
