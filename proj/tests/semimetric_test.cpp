#include <gtest/gtest.h>

#include <algorithm>

#include "moebius/semimetric.hpp"
#include "support.hpp"

namespace moebius {
namespace {

Magnitude q(long p, long r = 1) { return Magnitude::from_rational(Rational(p, r)); }
Magnitude inf() { return Magnitude::infinity(Scale::multiplicative); }

bool has_kind(const ValidationReport& r, const std::string& kind) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

SemiMetricSpace from_rows(std::vector<std::vector<Magnitude>> rows,
                          std::optional<PointId> omega = std::nullopt) {
  Labels labels;
  std::vector<Magnitude> matrix;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    labels.push_back("x" + std::to_string(i));
    matrix.insert(matrix.end(), rows[i].begin(), rows[i].end());
  }
  return SemiMetricSpace(labels, matrix, omega, Scale::multiplicative);
}

TEST(Validate, LineIsValid) {
  EXPECT_TRUE(validate_semimetric(testing::line_space()).ok());
  EXPECT_TRUE(validate_semimetric(testing::normalized_line_space()).ok());
}

TEST(Validate, TwoInfinitelyRemotePoints) {
  const Magnitude z = Magnitude::zero(Scale::multiplicative);
  const auto space = from_rows({{z, q(1), inf(), inf()},
                                {q(1), z, inf(), inf()},
                                {inf(), inf(), z, inf()},
                                {inf(), inf(), inf(), z}});
  const auto report = validate_semimetric(space);
  EXPECT_TRUE(has_kind(report, "multiple_infinitely_remote"));
}

TEST(Validate, EachViolationKind) {
  const Magnitude z = Magnitude::zero(Scale::multiplicative);
  EXPECT_TRUE(has_kind(validate_semimetric(from_rows({{q(1), q(1), q(1)},
                                                      {q(1), z, q(1)},
                                                      {q(1), q(1), z}})),
                       "diagonal_nonzero"));
  EXPECT_TRUE(has_kind(validate_semimetric(from_rows({{z, q(1), q(1)},
                                                      {q(2), z, q(1)},
                                                      {q(1), q(1), z}})),
                       "asymmetric"));
  EXPECT_TRUE(has_kind(validate_semimetric(from_rows({{z, z, q(1)},
                                                      {z, z, q(1)},
                                                      {q(1), q(1), z}})),
                       "nonpositive"));
  EXPECT_TRUE(has_kind(validate_semimetric(from_rows({{z, inf(), q(1)},
                                                      {inf(), z, q(1)},
                                                      {q(1), q(1), z}})),
                       "stray_infinity"));
  EXPECT_TRUE(has_kind(validate_semimetric(from_rows({{z, q(1), q(1)},
                                                      {q(1), z, q(1)},
                                                      {q(1), q(1), z}},
                                                     PointId{2})),
                       "omega_mismatch"));
}

TEST(Inversion, LineExample) {
  const SemiMetricSpace inv = metric_inversion(testing::line_space(), 0, Rational(1));
  EXPECT_EQ(inv.dist(1, 2), q(2, 3));
  EXPECT_TRUE(inv.dist(1, 0).is_infinite());
  EXPECT_EQ(inv.omega(), PointId{0});
  EXPECT_TRUE(validate_semimetric(inv).ok());
  EXPECT_EQ(infinitely_remote_points(inv), std::vector<PointId>{0});
}

TEST(Inversion, OldRemotePointGetsReciprocalDistance) {
  const SemiMetricSpace s = testing::normalized_line_space();
  const SemiMetricSpace inv = metric_inversion(s, 2, Rational(3));
  for (PointId x : {0U, 1U, 3U}) {
    EXPECT_EQ(inv.dist(x, 4), q(9).over(s.dist(x, 2)));
  }
  EXPECT_TRUE(moebius_equivalent(s, inv).equivalent);
}

TEST(Inversion, CenterAlreadyRemote) {
  EXPECT_THROW(metric_inversion(testing::normalized_line_space(), 4, Rational(1)),
               PreconditionError);
}

// Inverting at c makes c remote and gives the old remote point w finite
// distances; inverting back at w with the same radius restores every pair
// that avoids c.
TEST(Inversion, BackAndForthRestores) {
  for (const auto& s : testing::generated_spaces(7, 24)) {
    if (!s.omega()) {
      continue;
    }
    const PointId w = *s.omega();
    for (PointId c = 0; c < s.size(); ++c) {
      if (c == w) {
        continue;
      }
      const SemiMetricSpace there = metric_inversion(s, c, Rational(5, 2));
      EXPECT_TRUE(validate_semimetric(there).ok());
      const SemiMetricSpace back = metric_inversion(there, w, Rational(5, 2));
      for (PointId x = 0; x < s.size(); ++x) {
        for (PointId y = 0; y < s.size(); ++y) {
          if (x != c && y != c) {
            EXPECT_EQ(back.dist(x, y), s.dist(x, y));
          }
        }
      }
    }
  }
}

TEST(Equivalence, RescaleAndInvert) {
  const SemiMetricSpace line = testing::line_space();
  EXPECT_TRUE(moebius_equivalent(line, rescale(line, q(5))).equivalent);
  for (PointId c = 0; c < 4; ++c) {
    EXPECT_TRUE(moebius_equivalent(line, metric_inversion(line, c, Rational(2))).equivalent);
  }
}

TEST(Equivalence, DetectsChangeWithWitness) {
  const SemiMetricSpace line = testing::line_space();
  std::vector<Magnitude> m = line.matrix();
  m[1 * 4 + 2] = q(5, 2);
  m[2 * 4 + 1] = q(5, 2);
  const SemiMetricSpace bent(line.labels(), m, std::nullopt, Scale::multiplicative);
  const auto result = moebius_equivalent(line, bent);
  EXPECT_FALSE(result.equivalent);
  ASSERT_TRUE(result.witness.has_value());
  EXPECT_NE(*result.first_value, *result.second_value);
}

TEST(Equivalence, IsAnEquivalenceRelation) {
  for (const auto& s : testing::generated_spaces(11, 16)) {
    const SemiMetricSpace t = rescale(s, q(7, 3));
    const PointId c = s.omega() ? (*s.omega() == 0 ? 1 : 0) : 0;
    const SemiMetricSpace u = metric_inversion(t, c, Rational(1, 2));
    EXPECT_TRUE(moebius_equivalent(s, s).equivalent);
    EXPECT_EQ(moebius_equivalent(s, t).equivalent, moebius_equivalent(t, s).equivalent);
    EXPECT_TRUE(moebius_equivalent(s, t).equivalent && moebius_equivalent(t, u).equivalent);
    EXPECT_TRUE(moebius_equivalent(s, u).equivalent);
  }
}

}  // namespace
}  // namespace moebius
