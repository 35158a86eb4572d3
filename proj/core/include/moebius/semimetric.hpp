#pragma once

#include <optional>
#include <string>
#include <vector>

#include "moebius/l4_point.hpp"
#include "moebius/magnitude.hpp"
#include "moebius/types.hpp"

namespace moebius {

/// A finite set with a distance matrix of extended nonnegative values and an
/// optional infinitely remote point omega.
///
/// The constructor only checks shapes and backings; the semi-metric axioms
/// are checked by validate_semimetric so that broken inputs can be reported
/// instead of rejected.
class SemiMetricSpace {
 public:
  SemiMetricSpace(Labels labels, std::vector<Magnitude> matrix, std::optional<PointId> omega,
                  Scale scale);

  /// Builds a space from a symmetric rule d(i, j), filling the diagonal with 0.
  template <typename DistanceFn>
  static SemiMetricSpace from_function(Labels labels, std::optional<PointId> omega, Scale scale,
                                       DistanceFn&& dist) {
    const std::size_t n = labels.size();
    std::vector<Magnitude> matrix(n * n, Magnitude::zero(scale));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) {
          matrix[i * n + j] = dist(static_cast<PointId>(i), static_cast<PointId>(j));
        }
      }
    }
    return SemiMetricSpace(std::move(labels), std::move(matrix), omega, scale);
  }

  std::size_t size() const { return labels_.size(); }
  const Labels& labels() const { return labels_; }
  const std::string& label(PointId i) const { return labels_.at(i); }
  std::optional<PointId> index_of(const std::string& label) const;
  /// Like index_of but throws InputError for an unknown label.
  PointId require_index(const std::string& label) const;

  const Magnitude& dist(PointId i, PointId j) const { return matrix_[i * size() + j]; }
  const std::vector<Magnitude>& matrix() const { return matrix_; }
  std::optional<PointId> omega() const { return omega_; }
  Scale scale() const { return scale_; }

  friend bool operator==(const SemiMetricSpace&, const SemiMetricSpace&) = default;

 private:
  Labels labels_;
  std::vector<Magnitude> matrix_;
  std::optional<PointId> omega_;
  Scale scale_;
};

struct Violation {
  std::string kind;
  std::vector<PointId> where;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Every violated semi-metric axiom, with witnessing indices. Kinds:
/// diagonal_nonzero, asymmetric, nonpositive, stray_infinity,
/// multiple_infinitely_remote, omega_mismatch.
ValidationReport validate_semimetric(const SemiMetricSpace& space);

/// The points p with d(x, p) = inf for every x != p (rows and columns).
std::vector<PointId> infinitely_remote_points(const SemiMetricSpace& space);

/// d'(x, y) = r^2 d(x, y) / (d(x, c) d(y, c)), d'(c, c) = 0, evaluated as a
/// formal product so that an old infinitely remote point w gives
/// d'(x, w) = r^2 / d(x, c). Throws PreconditionError when c is already
/// infinitely remote.
SemiMetricSpace metric_inversion(const SemiMetricSpace& space, PointId center,
                                 const Magnitude& radius_squared);
SemiMetricSpace metric_inversion(const SemiMetricSpace& space, PointId center,
                                 const Rational& radius);

/// d -> lambda d for a finite positive lambda.
SemiMetricSpace rescale(const SemiMetricSpace& space, const Magnitude& lambda);

struct EquivalenceResult {
  bool equivalent = true;
  std::optional<Tuple4> witness;
  std::optional<Triple> first_value;
  std::optional<Triple> second_value;
};

/// Compares the Moebius structures of two spaces on every admissible
/// 4-tuple; the witness is the lexicographically first differing tuple.
EquivalenceResult moebius_equivalent(const SemiMetricSpace& first, const SemiMetricSpace& second);

}  // namespace moebius
