#pragma once

// Finite boundary models given by Gromov products (x|y)_o, the basepoint
// Moebius structure M_o of d_o = e^-(x|y)_o, seeded perturbations, the
// signed S4 average and the deviation bound against M_o.
//
// Everything here is log-backed: Gromov products are rational, so the
// cross-differences are rational logarithms and stay exact.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "moebius/cross_ratio.hpp"
#include "moebius/ext_real.hpp"
#include "moebius/semimetric.hpp"
#include "moebius/types.hpp"

namespace moebius {

/// A finite metric space with a basepoint o. The boundary is every other point.
struct MetricSource {
  Labels points;
  std::vector<Rational> dist;  // row-major n x n
  std::string basepoint;
};

struct TreeEdge {
  std::string parent;
  std::string child;
  Rational length;
};

/// A rooted tree; its boundary is the set of leaves (non-root vertices
/// without children) in order of first appearance in `edges`.
struct TreeSource {
  std::vector<TreeEdge> edges;
  std::string root;
};

class GromovProductModel {
 public:
  /// Checks that gp is square, symmetric, +inf exactly on the diagonal and
  /// that labels are distinct; throws InputError otherwise. h is computed.
  GromovProductModel(Labels boundary, std::vector<ExtReal> gp);

  std::size_t size() const { return boundary_.size(); }
  const Labels& boundary() const { return boundary_; }
  const ExtReal& gp(PointId x, PointId y) const { return gp_[x * size() + y]; }
  const std::vector<ExtReal>& products() const { return gp_; }
  const Rational& h() const { return h_; }

  friend bool operator==(const GromovProductModel&, const GromovProductModel&) = default;

 private:
  Labels boundary_;
  std::vector<ExtReal> gp_;
  Rational h_;
};

/// (y|y')_o = (|yo| + |y'o| - |yy'|) / 2 on the non-basepoint points.
/// Throws InputError unless the source is a finite metric (zero diagonal,
/// positive, symmetric, triangle inequality) with >= 2 boundary points.
GromovProductModel build_model(const MetricSource& source);

/// (u|v)_o = distance from the root to the lowest common ancestor of u, v.
/// Throws InputError for cycles, unreachable vertices, several parents,
/// nonpositive lengths or fewer than two leaves.
GromovProductModel build_model(const TreeSource& source);

/// The least h such that in every triple of distinct points the two smallest
/// of (x|y), (x|z), (y|z) differ by at most h.
Rational hyperbolicity_constant(const std::vector<ExtReal>& gp, std::size_t n);
inline Rational hyperbolicity_constant(const GromovProductModel& model) {
  return hyperbolicity_constant(model.products(), model.size());
}

/// The same tree hung from another vertex. Throws InputError when the new
/// root is a leaf (the boundary would change).
TreeSource reroot(const TreeSource& tree, const std::string& new_root);

/// d_o(x, y) = e^-(x|y)_o, log-backed, no infinitely remote point.
SemiMetricSpace basepoint_semimetric(const GromovProductModel& model);

/// M_o = moebius_of(basepoint_semimetric(model)).
SubMoebiusMap basepoint_moebius(const GromovProductModel& model, unsigned jobs = 1);

/// The shift applied to log coordinate `component` (0 = a, 1 = b) of the
/// tuple with table code `code`: eps * k / 1000 with k in [-1000, 1000]
/// drawn from mt19937_64 seeded with (seed, code, component).
Rational perturbation_noise(const Rational& eps, std::uint64_t seed, std::size_t code,
                            unsigned component);

/// M_o with a and b of every nondegenerate tuple shifted independently by
/// perturbation_noise and c re-closed to -(a + b). Degenerate tuples keep
/// their patterns. Throws PreconditionError for eps < 0.
SubMoebiusMap perturb(const GromovProductModel& model, const Rational& eps, std::uint64_t seed,
                      unsigned jobs = 1);

/// M(P) = 1/24 sum_rho sign(rho) phi(rho^-1) Mt(rho P) on nondegenerate P;
/// degenerate P are copied. Requires a log-backed table whose degenerate
/// entries are the pinned patterns and whose nondegenerate entries are
/// present and regular; throws PreconditionError otherwise.
SubMoebiusMap symmetrize(const SubMoebiusMap& raw, unsigned jobs = 1);

struct DeviationReport {
  Rational h;
  /// max over nondegenerate P of |M(P) - M_o(P)|^2 in log coordinates.
  Rational max_norm_squared;
  double max_norm = 0;
  /// Lexicographically first tuple attaining the maximum.
  std::optional<Tuple4> worst;
  std::size_t compared = 0;
  bool within_sqrt96() const { return max_norm_squared <= 96 * h * h; }
  bool within_10h() const { return max_norm_squared <= 100 * h * h; }
};

/// Compares two log-backed tables over the same domain on nondegenerate
/// tuples. Throws PreconditionError for mismatched domains or non-regular
/// entries on nondegenerate tuples.
DeviationReport deviation_check(const SubMoebiusMap& m, const SubMoebiusMap& m_o,
                                const Rational& h, unsigned jobs = 1);

}  // namespace moebius
