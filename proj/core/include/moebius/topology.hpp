#pragma once

// Subbase sets of the M-topology (alpha/beta balls and their complements),
// the scaled Gromov product of a boundary model, the sandwich inclusions
// between model sets and M-balls, and finite topology generation.
//
// Point sets are bit masks, so domains are limited to 64 points.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "moebius/hyperbolic.hpp"
#include "moebius/reconstruction.hpp"

namespace moebius {

using PointSet = std::uint64_t;

PointSet full_set(std::size_t n);
inline bool contains(PointSet set, PointId x) { return ((set >> x) & 1U) != 0; }
inline PointSet with_point(PointSet set, PointId x) { return set | (PointSet{1} << x); }
std::vector<PointId> members(PointSet set);
/// "{a,b,c}" with point labels.
std::string render(PointSet set, const Labels& labels);

enum class SubbaseKind : std::uint8_t {
  alpha_ball,
  beta_ball,
  alpha_complement,
  beta_complement,
  standard_u,  // {x : (x|y) > t} for the basepoint or a scale triple
  standard_b,  // {x : d_{A,o}(x, y) < e^s}
};
std::string_view to_string(SubbaseKind kind);

struct SubbaseSet {
  SubbaseKind kind = SubbaseKind::alpha_ball;
  /// Absent only for the basepoint set U_{t,o}(y).
  std::optional<ScaleTriple> scale;
  PointId center = 0;
  /// Radius t of a ball or complement.
  std::optional<Magnitude> radius;
  /// Level t of a U-set, or log-radius s of a standard B-set.
  std::optional<ExtReal> level;
  PointSet members = 0;
};

/// B_{A,t}(y) = {x : d_A(x, y) < t} or C_{A,t}(y) = {x : d_A(x, y) > t} on the
/// alpha or beta side. Domains: balls need y != alpha (beta) and t > 0,
/// complements need y not in {alpha, omega} ({beta, omega}) and t < inf.
/// Sentinels: a ball with t = inf and a complement with t = 0 are the whole
/// domain. Throws PreconditionError outside the domain.
SubbaseSet ball(const SubMoebiusMap& map, const ScaleTriple& scale, PointId y,
                const Magnitude& t, SubbaseKind kind);

/// (x|y)_{A,o} = (x|y)_omega - (alpha|beta)_omega with
/// (x|y)_omega = (x|y)_o - (x|omega)_o - (y|omega)_o; +inf for x = y.
/// Throws PreconditionError when x or y is omega.
ExtReal scaled_gromov_product(const GromovProductModel& model, const ScaleTriple& scale,
                              PointId x, PointId y);

/// d_{A,o} computed by metric inversion of d_o at omega with
/// r^2 = 1 / d_omega(alpha, beta). omega is infinitely remote.
SemiMetricSpace scaled_basepoint_semimetric(const GromovProductModel& model,
                                            const ScaleTriple& scale);

/// U_{t,o}(y) = {x : (x|y)_o > t}.
SubbaseSet basepoint_u(const GromovProductModel& model, PointId y, const ExtReal& t);
/// U_{A,t,o}(y) = {x != omega : (x|y)_{A,o} > t}.
SubbaseSet scaled_u(const GromovProductModel& model, const ScaleTriple& scale, PointId y,
                    const ExtReal& t);
/// B_{A,e^s,o}(y) = {x != omega : d_{A,o}(x, y) < e^s} = U_{A,-s,o}(y).
SubbaseSet scaled_b(const GromovProductModel& model, const ScaleTriple& scale, PointId y,
                    const ExtReal& s);

/// Sorted distinct critical values, every midpoint between neighbours, and
/// one value beyond each end. Memberships of threshold sets only change at
/// critical values, so this covers every distinct set.
std::vector<Rational> sample_levels(std::vector<Rational> critical);
/// The same for positive radii of either backing (0 and inf are dropped).
std::vector<Magnitude> sample_radii(std::vector<Magnitude> critical, Scale scale);

enum class SandwichVariant : std::uint8_t { standard, submoebius };
std::string_view to_string(SandwichVariant variant);

struct SandwichCase {
  SandwichVariant variant = SandwichVariant::standard;
  ScaleTriple scale;
  PointId y = 0;
  std::optional<Side> side;  // submoebius only
  Rational level;            // t (standard) or s (submoebius)
  bool skipped = false;      // hypothesis t > (y|omega)_o + h not met
  bool inner_ok = true;
  bool outer_ok = true;
  PointSet inner = 0;
  PointSet middle = 0;
  PointSet outer = 0;
  bool ok() const { return skipped || (inner_ok && outer_ok); }
};

/// U_{A,t+c,o}(y) in U_{t,o}(y) in U_{A,t-c,o}(y) with
/// c = 2(y|omega)_o + |(alpha|beta)_omega| + h, for t > (y|omega)_o + h.
/// y must not be omega.
SandwichCase sandwich_standard(const GromovProductModel& model, const ScaleTriple& scale,
                               PointId y, const Rational& t);

/// B_{A,e^(s-20h),o}(y) in B^side_{A,e^s}(y) in B_{A,e^(s+20h),o}(y) for a
/// log-backed map over the model's boundary. y must not be omega nor the
/// excluded point of the side.
SandwichCase sandwich_submoebius(const GromovProductModel& model, const SubMoebiusMap& map,
                                 const ScaleTriple& scale, PointId y, const Rational& s,
                                 Side side);

struct SandwichReport {
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::size_t failed = 0;
  /// First failures in scan order (scale triples, y, side, level).
  std::vector<SandwichCase> failures;
  bool ok() const { return failed == 0; }
};

/// Every scale triple, y != omega and sampled level. The standard variant
/// samples the breakpoints of all three sets and the hypothesis bound; the
/// submoebius variant (when `map` is given) samples the breakpoints of its
/// three sets on both sides. `only` restricts the scan to one scale triple.
SandwichReport sandwich_scan(const GromovProductModel& model, const SubMoebiusMap* map,
                             SandwichVariant variant, unsigned jobs = 1,
                             std::optional<ScaleTriple> only = std::nullopt,
                             std::size_t max_listed = 64);

struct IdentityCase {
  ScaleTriple scale;
  PointId y = 0;
  Side side = Side::alpha;
  Magnitude t;
  PointSet complement = 0;
  PointSet ball = 0;
};

struct IdentityReport {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<IdentityCase> failures;
  bool ok() const { return failed == 0; }
};

/// C^alpha_{A,t}(y) = B^alpha_{A',lambda/t}(omega) with A' = (alpha, omega, y),
/// and C^beta_{A,t}(y) = B^beta_{A'',mu/t}(omega) with A'' = (omega, beta, y),
/// with lambda, mu from scale_change_factor.
bool complement_identity(const SubMoebiusMap& map, const ScaleTriple& scale, PointId y,
                         const Magnitude& t, Side side, IdentityCase* detail = nullptr);

/// complement_identity for every scale triple, every y in the domain of the
/// side and sampled t.
IdentityReport complement_identity_scan(const SubMoebiusMap& map, unsigned jobs = 1,
                                        std::optional<ScaleTriple> only = std::nullopt,
                                        std::size_t max_listed = 64);

struct BallAgreementReport {
  std::size_t checked = 0;
  std::size_t failed = 0;
  /// First disagreement: ball of d_A, alpha-ball, beta-ball (absent outside
  /// its domain).
  std::optional<ScaleTriple> scale;
  std::optional<PointId> y;
  std::optional<Magnitude> t;
  std::optional<PointSet> metric_ball, alpha_ball, beta_ball;
  bool ok() const { return failed == 0; }
};

/// For a Moebius structure: the balls {x : d_A(x, y) < t} of the
/// reconstructed d_A coincide with the alpha- and beta-balls of the same
/// (A, y, t), over every scale triple, y != omega and sampled t.
BallAgreementReport ball_families_agree(const SubMoebiusMap& map, unsigned jobs = 1);

/// All balls {x : d(x, y) < t} over y and sampled t.
std::vector<PointSet> semimetric_subbase(const SemiMetricSpace& space);
/// All alpha- and beta-balls over scale triples, y and sampled t.
std::vector<PointSet> moebius_subbase(const SubMoebiusMap& map, unsigned jobs = 1);

/// For each x, the intersection of all subbase sets containing x. On a
/// finite set this is the least open neighbourhood and determines the
/// topology.
std::vector<PointSet> minimal_neighbourhoods(std::size_t n, const std::vector<PointSet>& subbase);

/// Whether two subbases generate the same topology on {0..n-1}.
bool same_topology(std::size_t n, const std::vector<PointSet>& first,
                   const std::vector<PointSet>& second);

/// Every open set: finite intersections of subbase sets (the empty
/// intersection being the whole set), then arbitrary unions. Sorted.
/// Throws PreconditionError for n > 16.
std::vector<PointSet> generate_topology(std::size_t n, const std::vector<PointSet>& subbase);

}  // namespace moebius
