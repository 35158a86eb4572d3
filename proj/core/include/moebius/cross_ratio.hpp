#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "moebius/l4_point.hpp"
#include "moebius/semimetric.hpp"
#include "moebius/types.hpp"

namespace moebius {

/// 4-tuples: no entry occurs three or four times. Longer tuples: every
/// one-entry deletion is admissible.
bool is_admissible(std::span<const PointId> tuple);
bool is_nondegenerate(std::span<const PointId> tuple);

/// For an admissible degenerate 4-tuple, the point of {A, B, C} it must map
/// to: A when x1 = x2 or x3 = x4, B when x1 = x3 or x2 = x4, C when x1 = x4 or
/// x2 = x3. nullopt for nondegenerate tuples.
std::optional<L4Kind> degenerate_pattern(const Tuple4& tuple);

/// e^a with a = cd(x1, x2, x3, x4) = (x1|x4) + (x2|x3) - (x1|x3) - (x2|x4),
/// i.e. d(x1,x3) d(x2,x4) / (d(x1,x4) d(x2,x3)), evaluated as a formal
/// product (zero and infinite factors cancel pairwise before evaluation).
/// Throws PreconditionError for inadmissible tuples.
Magnitude cross_difference(const SemiMetricSpace& space, const Tuple4& tuple);

/// M_d(P) = (e^a, e^b, e^c) with a = cd(x1,x2,x3,x4), b = cd(x1,x3,x4,x2),
/// c = cd(x2,x3,x1,x4); degenerate tuples map to the pinned A/B/C.
L4Point moebius_value(const SemiMetricSpace& space, const Tuple4& tuple);

/// A table from admissible 4-tuples to triples over a labelled domain.
///
/// Entries are stored extensionally (one slot per ordered 4-tuple) and may be
/// missing or malformed: check_axioms is what decides whether the table is a
/// sub-Moebius structure.
class SubMoebiusMap {
 public:
  SubMoebiusMap(Labels labels, Scale scale);
  /// A table whose degenerate tuples already carry their pinned patterns.
  static SubMoebiusMap with_pinned_degenerates(Labels labels, Scale scale);

  std::size_t size() const { return labels_.size(); }
  const Labels& labels() const { return labels_; }
  Scale scale() const { return scale_; }

  std::size_t code(const Tuple4& tuple) const;
  Tuple4 tuple(std::size_t code) const;

  /// All admissible 4-tuples in lexicographic order.
  const std::vector<Tuple4>& admissible_tuples() const { return *admissible_; }

  const std::optional<Triple>& entry(const Tuple4& tuple) const { return entries_[code(tuple)]; }
  /// The stored value; throws PreconditionError when it is missing.
  const Triple& at(const Tuple4& tuple) const;
  /// Throws PreconditionError for inadmissible tuples or a foreign backing.
  void set(const Tuple4& tuple, Triple value);
  void erase(const Tuple4& tuple) { entries_[code(tuple)].reset(); }

  std::size_t missing_count() const;

  /// Fills missing entries from any stored member of the same S4 orbit by
  /// the signed equivariance law. Returns the number of entries filled.
  /// Conflicting orbit members are left alone for check_axioms to find.
  std::size_t complete_by_equivariance();

  friend bool operator==(const SubMoebiusMap& lhs, const SubMoebiusMap& rhs) {
    return lhs.labels_ == rhs.labels_ && lhs.scale_ == rhs.scale_ &&
           lhs.entries_ == rhs.entries_;
  }

 private:
  Labels labels_;
  Scale scale_;
  std::shared_ptr<const std::vector<Tuple4>> admissible_;
  std::vector<std::optional<Triple>> entries_;
};

/// The Moebius structure M_d of a semi-metric, evaluated directly on every
/// admissible 4-tuple.
SubMoebiusMap moebius_of(const SemiMetricSpace& space, unsigned jobs = 1);

struct AxiomViolation {
  /// "coverage", "a", "b", "c" or "degenerate".
  std::string axiom;
  Tuple4 tuple{};
  std::optional<Perm4> perm;
  std::optional<Triple> expected;
  std::optional<Triple> actual;
  std::string detail;
};

struct AxiomReport {
  std::size_t checked_tuples = 0;
  std::size_t violation_count = 0;
  /// At most max_listed violations, sorted by (axiom, tuple, perm).
  std::vector<AxiomViolation> violations;
  bool ok() const { return violation_count == 0; }
};

/// Checks coverage, (a) signed equivariance over all of S4, (b) regular iff
/// nondegenerate, (c) M(x1,x1,x3,x4) = A and the six degenerate equalities.
AxiomReport check_axioms(const SubMoebiusMap& map, unsigned jobs = 1,
                         std::size_t max_listed = 256);

}  // namespace moebius
