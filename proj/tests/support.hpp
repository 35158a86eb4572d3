#pragma once

// Shared fixtures and independent oracles for the test suites.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "moebius/cross_ratio.hpp"
#include "moebius/hyperbolic.hpp"
#include "moebius/reconstruction.hpp"
#include "moebius/semimetric.hpp"

namespace moebius::testing {

/// Random rational semi-metric on n points (distances p/q, p in 1..30,
/// q in 1..6; no triangle inequality). With `omega`, the last point is
/// infinitely remote.
SemiMetricSpace random_space(std::mt19937_64& rng, std::size_t n, bool omega);

/// The frozen corpus: `count` spaces, n cycling through 4..7, every other
/// one with an infinitely remote point.
std::vector<SemiMetricSpace> generated_spaces(std::uint64_t seed, std::size_t count);

/// {0, 1, 3, 7} on the real line.
SemiMetricSpace line_space();
/// {a, b, c, d} = {0, 1, 3, 7} plus an infinitely remote w; d(a, b) = 1.
SemiMetricSpace normalized_line_space();

/// The cross-ratio triple of a nondegenerate tuple computed by brute force:
/// infinite distances are replaced by one huge rational N, and the three
/// ratios d13 d24 / (d14 d23), d14 d23 / (d12 d34), d12 d34 / (d13 d24) are
/// evaluated directly. For nondegenerate tuples every N cancels. Only for
/// multiplicative spaces.
std::array<Rational, 3> oracle_cross_ratios(const SemiMetricSpace& space, const Tuple4& p);

/// Table of degenerate values, keyed by which slots coincide.
std::optional<L4Kind> oracle_degenerate_kind(const Tuple4& p);

/// Multiplicative triple as rationals (throws on infinities).
std::array<Rational, 3> rationals(const Triple& t);

/// Gromov product models used by the hyperbolic suites.
TreeSource binary_tree(int depth);
/// A caterpillar: spine r - s1 - ... - s(k-1), one leaf per spine vertex,
/// edge lengths 1, 2, 3, ... so that LCA depths differ.
TreeSource caterpillar_tree(int legs);
/// Graph metric of the k-cycle with basepoint 0.
MetricSource cycle_metric(int k);
/// Graph metric of a w x h grid with basepoint at a corner.
MetricSource grid_metric(int w, int h);

/// The frozen negative example: the 6-cycle boundary (five points, h = 1)
/// perturbed with eps = 4h and seed 1, then symmetrized.
GromovProductModel frozen_model();
SubMoebiusMap frozen_perturbed();
/// Its first is_moebius failure, in the domain's point ids.
MoebiusWitness frozen_witness();

/// Path of a file under tests/data.
std::string data_path(const std::string& name);

/// All admissible 5-tuples (x, y, A) for one scale triple, scan order.
std::vector<std::pair<PointId, PointId>> admissible_pairs(std::size_t n, const ScaleTriple& a);

}  // namespace moebius::testing
