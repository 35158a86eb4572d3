#pragma once

// Scaled distances d_A^alpha, d_A^beta of a sub-Moebius structure, the
// Moebius criterion via conditions (A) and (B) on admissible 5-tuples, and
// the reconstruction of a semi-metric from a Moebius structure.
//
// Notation: for a scale triple A = (alpha, beta, omega) and P = (x, y, A),
//   P1 = (y, alpha, beta, omega)   P2 = (x, alpha, beta, omega)
//   P3 = (x, y, beta, omega)       P4 = (x, y, alpha, omega)
// and M(Pi) = (a(Pi), b(Pi), c(Pi)) in log coordinates, (u, v, w) = e^(a, b, c)
// in magnitudes.

#include <optional>
#include <string>

#include "moebius/cross_ratio.hpp"
#include "moebius/semimetric.hpp"

namespace moebius {

/// Three pairwise distinct points (alpha, beta, omega).
struct ScaleTriple {
  PointId alpha = 0;
  PointId beta = 0;
  PointId omega = 0;

  /// Throws PreconditionError unless the points are pairwise distinct.
  static ScaleTriple make(PointId alpha, PointId beta, PointId omega);

  Tuple5 five_tuple(PointId x, PointId y) const { return {x, y, alpha, beta, omega}; }

  friend bool operator==(const ScaleTriple&, const ScaleTriple&) = default;
  friend auto operator<=>(const ScaleTriple&, const ScaleTriple&) = default;
};

/// All scale triples of an n-point domain in lexicographic order.
std::vector<ScaleTriple> all_scale_triples(std::size_t n);

/// The four faces P1..P4 of (x, y, A).
struct Faces {
  Tuple4 p1, p2, p3, p4;
};
Faces faces(const ScaleTriple& scale, PointId x, PointId y);

enum class Side : std::uint8_t { alpha, beta };

/// d_A^alpha(x, y) = 1 / (v(P1) v(P4)) for y != alpha,
/// d_A^beta(x, y)  = u(P1) / v(P3) for y != beta,
/// and 0 whenever (x, y, A) is not admissible.
///
/// Throws PreconditionError for y = alpha (alpha side) or y = beta (beta
/// side), and UndefinedValueError when the table is not sub-Moebius and the
/// combination is not well defined.
Magnitude scaled_distance(const SubMoebiusMap& map, const ScaleTriple& scale, PointId x,
                          PointId y, Side side);

struct ConditionCheck {
  bool holds = false;
  /// nullopt when the side is not well defined (only for non-sub-Moebius input).
  std::optional<Magnitude> lhs;
  std::optional<Magnitude> rhs;
};

struct ConditionReport {
  /// (A): b(P1) + b(P4) = b(P3) - a(P1), evaluated when y is not alpha or beta.
  std::optional<ConditionCheck> a;
  /// (B): b(P2) = -a(P4) + b(P1), evaluated when y is not alpha or omega.
  std::optional<ConditionCheck> b;
};

/// Both conditions for one admissible 5-tuple (x, y, A); compared exactly.
ConditionReport check_conditions(const SubMoebiusMap& map, const ScaleTriple& scale, PointId x,
                                 PointId y);

struct MoebiusWitness {
  ScaleTriple scale;
  Tuple5 tuple{};
  char condition = 'A';
  std::optional<Magnitude> lhs;
  std::optional<Magnitude> rhs;
};

struct MoebiusVerdict {
  bool is_moebius = true;
  /// Present iff is_moebius is false: the first failure in scan order
  /// (scale triples lexicographically, then (x, y), then (A) before (B)).
  std::optional<MoebiusWitness> witness;
  std::size_t checked_tuples = 0;
};

/// Scans every scale triple and admissible 5-tuple (x, y, A).
MoebiusVerdict is_moebius(const SubMoebiusMap& map, unsigned jobs = 1);

/// Thrown by reconstruct_semimetric when the input is not a Moebius structure.
class NotMoebiusError : public Error {
 public:
  explicit NotMoebiusError(MoebiusVerdict verdict);
  const MoebiusVerdict& verdict() const { return verdict_; }

 private:
  MoebiusVerdict verdict_;
};

/// The semi-metric d_A: alpha-side formula where y != alpha, beta-side for
/// y = alpha, 0 on the diagonal. omega is infinitely remote and
/// d_A(alpha, beta) = 1.
///
/// Checks is_moebius first and throws NotMoebiusError with the witness.
SemiMetricSpace reconstruct_semimetric(const SubMoebiusMap& map, const ScaleTriple& scale,
                                       unsigned jobs = 1);

/// d_A without the Moebius check (diagnostics, and the scale-change identities
/// where the input is already known to be Moebius).
SemiMetricSpace scaled_semimetric(const SubMoebiusMap& map, const ScaleTriple& scale);

struct ScaleChange {
  /// lambda = 1 / v(P1), for y not in {alpha, omega}:
  /// d_A^alpha(x, y) d_{A'}^alpha(x, omega) = lambda with A' = (alpha, omega, y).
  std::optional<Magnitude> lambda;
  /// mu = u(P1), for y not in {beta, omega}:
  /// d_A^beta(x, y) d_{A''}^beta(x, omega) = mu with A'' = (omega, beta, y).
  std::optional<Magnitude> mu;
};

/// Throws PreconditionError when neither factor is defined (y = omega).
ScaleChange scale_change_factor(const SubMoebiusMap& map, const ScaleTriple& scale, PointId y);

}  // namespace moebius
