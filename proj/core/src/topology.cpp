#include "moebius/topology.hpp"

#include <algorithm>
#include <set>

#include "moebius/errors.hpp"
#include "moebius/parallel.hpp"

namespace moebius {

namespace {

void require_small(std::size_t n) {
  if (n > 64) {
    throw PreconditionError("point sets are limited to 64 points");
  }
}

bool subset(PointSet a, PointSet b) { return (a & ~b) == 0; }

void require_not_omega(const ScaleTriple& scale, PointId y) {
  if (y == scale.omega) {
    throw PreconditionError("the center must differ from omega");
  }
}

void require_model_map(const GromovProductModel& model, const SubMoebiusMap& map) {
  if (map.scale() != Scale::logarithmic) {
    throw PreconditionError("the submoebius sandwich needs a log-backed map");
  }
  if (map.labels() != model.boundary()) {
    throw PreconditionError("map and model have different domains");
  }
}

ExtReal log_of(const Magnitude& m) { return m.stored(); }

template <typename Case>
void keep(std::vector<Case>& list, Case c, std::size_t cap) {
  if (list.size() < cap) {
    list.push_back(std::move(c));
  }
}

}  // namespace

PointSet full_set(std::size_t n) {
  require_small(n);
  return n == 64 ? ~PointSet{0} : (PointSet{1} << n) - 1;
}

std::vector<PointId> members(PointSet set) {
  std::vector<PointId> out;
  for (PointId x = 0; x < 64; ++x) {
    if (contains(set, x)) {
      out.push_back(x);
    }
  }
  return out;
}

std::string render(PointSet set, const Labels& labels) {
  std::string s = "{";
  bool first = true;
  for (auto x : members(set)) {
    s += first ? "" : ",";
    s += x < labels.size() ? labels[x] : std::to_string(x);
    first = false;
  }
  return s + "}";
}

std::string_view to_string(SubbaseKind kind) {
  switch (kind) {
    case SubbaseKind::alpha_ball:
      return "alpha_ball";
    case SubbaseKind::beta_ball:
      return "beta_ball";
    case SubbaseKind::alpha_complement:
      return "alpha_complement";
    case SubbaseKind::beta_complement:
      return "beta_complement";
    case SubbaseKind::standard_u:
      return "standard_u";
    case SubbaseKind::standard_b:
      return "standard_b";
  }
  return "?";
}

std::string_view to_string(SandwichVariant variant) {
  return variant == SandwichVariant::standard ? "standard" : "submoebius";
}

SubbaseSet ball(const SubMoebiusMap& map, const ScaleTriple& scale, PointId y,
                const Magnitude& t, SubbaseKind kind) {
  const std::size_t n = map.size();
  require_small(n);
  require_same_scale(map.scale(), t.scale());
  const bool alpha = kind == SubbaseKind::alpha_ball || kind == SubbaseKind::alpha_complement;
  const bool is_ball = kind == SubbaseKind::alpha_ball || kind == SubbaseKind::beta_ball;
  if (kind == SubbaseKind::standard_u || kind == SubbaseKind::standard_b) {
    throw PreconditionError("standard sets are built from a boundary model");
  }
  const PointId excluded = alpha ? scale.alpha : scale.beta;
  if (y >= n) {
    throw PreconditionError("ball center out of range");
  }
  if (y == excluded) {
    throw PreconditionError(std::string(alpha ? "alpha" : "beta") +
                            "-sets are not defined at y = " + (alpha ? "alpha" : "beta"));
  }
  if (!is_ball && y == scale.omega) {
    throw PreconditionError("complement sets are not defined at y = omega");
  }
  if (is_ball ? t.is_zero() : t.is_infinite()) {
    throw PreconditionError("radius out of range for this kind of set");
  }
  SubbaseSet out{kind, scale, y, t, std::nullopt, 0};
  if (is_ball ? t.is_infinite() : t.is_zero()) {
    out.members = full_set(n);
    return out;
  }
  const Side side = alpha ? Side::alpha : Side::beta;
  for (PointId x = 0; x < n; ++x) {
    const Magnitude d = scaled_distance(map, scale, x, y, side);
    if (is_ball ? d < t : d > t) {
      out.members = with_point(out.members, x);
    }
  }
  return out;
}

ExtReal scaled_gromov_product(const GromovProductModel& model, const ScaleTriple& scale,
                              PointId x, PointId y) {
  const PointId w = scale.omega;
  if (x == w || y == w) {
    throw PreconditionError("the scaled Gromov product degenerates at omega");
  }
  if (x == y) {
    return ExtReal::pos_infinity();
  }
  auto at = [&](PointId i, PointId j) { return model.gp(i, j).value(); };
  const Rational xy_w = at(x, y) - at(x, w) - at(y, w);
  const Rational ab_w = at(scale.alpha, scale.beta) - at(scale.alpha, w) - at(scale.beta, w);
  return Rational(xy_w - ab_w);
}

SemiMetricSpace scaled_basepoint_semimetric(const GromovProductModel& model,
                                            const ScaleTriple& scale) {
  const SemiMetricSpace d_o = basepoint_semimetric(model);
  const SemiMetricSpace d_w = metric_inversion(d_o, scale.omega, Magnitude::one(Scale::logarithmic));
  return metric_inversion(d_o, scale.omega, d_w.dist(scale.alpha, scale.beta).reciprocal());
}

SubbaseSet basepoint_u(const GromovProductModel& model, PointId y, const ExtReal& t) {
  require_small(model.size());
  SubbaseSet out{SubbaseKind::standard_u, std::nullopt, y, std::nullopt, t, 0};
  for (PointId x = 0; x < model.size(); ++x) {
    if (model.gp(x, y) > t) {
      out.members = with_point(out.members, x);
    }
  }
  return out;
}

SubbaseSet scaled_u(const GromovProductModel& model, const ScaleTriple& scale, PointId y,
                    const ExtReal& t) {
  require_small(model.size());
  require_not_omega(scale, y);
  SubbaseSet out{SubbaseKind::standard_u, scale, y, std::nullopt, t, 0};
  for (PointId x = 0; x < model.size(); ++x) {
    if (x != scale.omega && scaled_gromov_product(model, scale, x, y) > t) {
      out.members = with_point(out.members, x);
    }
  }
  return out;
}

SubbaseSet scaled_b(const GromovProductModel& model, const ScaleTriple& scale, PointId y,
                    const ExtReal& s) {
  SubbaseSet out = scaled_u(model, scale, y, -s);
  out.kind = SubbaseKind::standard_b;
  out.level = s;
  return out;
}

std::vector<Rational> sample_levels(std::vector<Rational> critical) {
  std::sort(critical.begin(), critical.end());
  critical.erase(std::unique(critical.begin(), critical.end()), critical.end());
  if (critical.empty()) {
    return {Rational(0)};
  }
  std::vector<Rational> out;
  out.push_back(critical.front() - 1);
  for (std::size_t i = 0; i < critical.size(); ++i) {
    out.push_back(critical[i]);
    if (i + 1 < critical.size()) {
      out.push_back(Rational((critical[i] + critical[i + 1]) / 2));
    }
  }
  out.push_back(critical.back() + 1);
  return out;
}

std::vector<Magnitude> sample_radii(std::vector<Magnitude> critical, Scale scale) {
  std::erase_if(critical, [](const Magnitude& m) { return !m.is_finite_positive(); });
  for (const auto& m : critical) {
    require_same_scale(scale, m.scale());
  }
  std::sort(critical.begin(), critical.end());
  critical.erase(std::unique(critical.begin(), critical.end()), critical.end());
  if (critical.empty()) {
    return {Magnitude::one(scale)};
  }
  auto shifted = [scale](const Magnitude& m, bool up) {
    const Rational& v = m.stored().value();
    if (scale == Scale::logarithmic) {
      return Magnitude::from_log(up ? Rational(v + 1) : Rational(v - 1));
    }
    return Magnitude::from_rational(up ? Rational(v * 2) : Rational(v / 2));
  };
  std::vector<Magnitude> out;
  out.push_back(shifted(critical.front(), false));
  for (std::size_t i = 0; i < critical.size(); ++i) {
    out.push_back(critical[i]);
    if (i + 1 < critical.size()) {
      out.push_back(midpoint(critical[i], critical[i + 1]));
    }
  }
  out.push_back(shifted(critical.back(), true));
  return out;
}

SandwichCase sandwich_standard(const GromovProductModel& model, const ScaleTriple& scale,
                               PointId y, const Rational& t) {
  require_not_omega(scale, y);
  auto at = [&](PointId i, PointId j) { return model.gp(i, j).value(); };
  const PointId w = scale.omega;
  const Rational ab_w = at(scale.alpha, scale.beta) - at(scale.alpha, w) - at(scale.beta, w);
  const Rational c = 2 * at(y, w) + abs(ab_w) + model.h();

  SandwichCase out;
  out.variant = SandwichVariant::standard;
  out.scale = scale;
  out.y = y;
  out.level = t;
  out.skipped = !(t > at(y, w) + model.h());
  out.inner = scaled_u(model, scale, y, Rational(t + c)).members;
  out.middle = basepoint_u(model, y, t).members;
  out.outer = scaled_u(model, scale, y, Rational(t - c)).members;
  out.inner_ok = subset(out.inner, out.middle);
  out.outer_ok = subset(out.middle, out.outer);
  return out;
}

SandwichCase sandwich_submoebius(const GromovProductModel& model, const SubMoebiusMap& map,
                                 const ScaleTriple& scale, PointId y, const Rational& s,
                                 Side side) {
  require_model_map(model, map);
  require_not_omega(scale, y);
  const Rational slack = 20 * model.h();
  SandwichCase out;
  out.variant = SandwichVariant::submoebius;
  out.scale = scale;
  out.y = y;
  out.side = side;
  out.level = s;
  out.inner = scaled_b(model, scale, y, Rational(s - slack)).members;
  out.middle = ball(map, scale, y, Magnitude::from_log(s),
                    side == Side::alpha ? SubbaseKind::alpha_ball : SubbaseKind::beta_ball)
                   .members;
  out.outer = scaled_b(model, scale, y, Rational(s + slack)).members;
  out.inner_ok = subset(out.inner, out.middle);
  out.outer_ok = subset(out.middle, out.outer);
  return out;
}

SandwichReport sandwich_scan(const GromovProductModel& model, const SubMoebiusMap* map,
                             SandwichVariant variant, unsigned jobs,
                             std::optional<ScaleTriple> only, std::size_t max_listed) {
  if (variant == SandwichVariant::submoebius) {
    if (map == nullptr) {
      throw PreconditionError("the submoebius sandwich needs a map");
    }
    require_model_map(model, *map);
  }
  const auto n = static_cast<PointId>(model.size());
  require_small(n);
  const auto triples = only ? std::vector<ScaleTriple>{*only} : all_scale_triples(n);
  const Rational slack = 20 * model.h();

  auto chunks =
      parallel_chunks<SandwichReport>(triples.size(), jobs, [&](std::size_t b, std::size_t e) {
        SandwichReport out;
        auto record = [&](SandwichCase c) {
          ++out.checked;
          if (c.skipped) {
            ++out.skipped;
          } else if (!c.ok()) {
            ++out.failed;
            keep(out.failures, std::move(c), max_listed);
          }
        };
        for (std::size_t i = b; i < e; ++i) {
          const ScaleTriple& a = triples[i];
          for (PointId y = 0; y < n; ++y) {
            if (y == a.omega) {
              continue;
            }
            if (variant == SandwichVariant::standard) {
              const PointId w = a.omega;
              const Rational ab_w = model.gp(a.alpha, a.beta).value() -
                                    model.gp(a.alpha, w).value() - model.gp(a.beta, w).value();
              const Rational c = 2 * model.gp(y, w).value() + abs(ab_w) + model.h();
              std::vector<Rational> critical{Rational(model.gp(y, w).value() + model.h())};
              for (PointId x = 0; x < n; ++x) {
                if (x == y) {
                  continue;
                }
                critical.push_back(model.gp(x, y).value());
                if (x != w) {
                  const Rational g = scaled_gromov_product(model, a, x, y).value();
                  critical.push_back(g + c);
                  critical.push_back(g - c);
                }
              }
              for (const auto& t : sample_levels(std::move(critical))) {
                record(sandwich_standard(model, a, y, t));
              }
              continue;
            }
            for (Side side : {Side::alpha, Side::beta}) {
              if (y == (side == Side::alpha ? a.alpha : a.beta)) {
                continue;
              }
              std::vector<Rational> critical;
              for (PointId x = 0; x < n; ++x) {
                if (x == y || x == a.omega) {
                  continue;
                }
                const Rational l = -scaled_gromov_product(model, a, x, y).value();
                critical.push_back(l + slack);
                critical.push_back(l - slack);
                const ExtReal d = log_of(scaled_distance(*map, a, x, y, side));
                if (d.is_finite()) {
                  critical.push_back(d.value());
                }
              }
              for (const auto& s : sample_levels(std::move(critical))) {
                record(sandwich_submoebius(model, *map, a, y, s, side));
              }
            }
          }
        }
        return out;
      });

  SandwichReport report;
  for (auto& chunk : chunks) {
    report.checked += chunk.checked;
    report.skipped += chunk.skipped;
    report.failed += chunk.failed;
    for (auto& c : chunk.failures) {
      keep(report.failures, std::move(c), max_listed);
    }
  }
  return report;
}

bool complement_identity(const SubMoebiusMap& map, const ScaleTriple& scale, PointId y,
                         const Magnitude& t, Side side, IdentityCase* detail) {
  if (!t.is_finite_positive()) {
    throw PreconditionError("the complement identity needs a finite positive radius");
  }
  const ScaleChange factors = scale_change_factor(map, scale, y);
  PointSet complement = 0;
  PointSet other = 0;
  if (side == Side::alpha) {
    if (!factors.lambda) {
      throw PreconditionError("alpha complement identity needs y != alpha");
    }
    complement = ball(map, scale, y, t, SubbaseKind::alpha_complement).members;
    const ScaleTriple a1{scale.alpha, scale.omega, y};
    other = ball(map, a1, scale.omega, factors.lambda->over(t), SubbaseKind::alpha_ball).members;
  } else {
    if (!factors.mu) {
      throw PreconditionError("beta complement identity needs y != beta");
    }
    complement = ball(map, scale, y, t, SubbaseKind::beta_complement).members;
    const ScaleTriple a2{scale.omega, scale.beta, y};
    other = ball(map, a2, scale.omega, factors.mu->over(t), SubbaseKind::beta_ball).members;
  }
  if (detail != nullptr) {
    *detail = IdentityCase{scale, y, side, t, complement, other};
  }
  return complement == other;
}

IdentityReport complement_identity_scan(const SubMoebiusMap& map, unsigned jobs,
                                        std::optional<ScaleTriple> only, std::size_t max_listed) {
  const auto n = static_cast<PointId>(map.size());
  require_small(n);
  const auto triples = only ? std::vector<ScaleTriple>{*only} : all_scale_triples(n);
  auto chunks =
      parallel_chunks<IdentityReport>(triples.size(), jobs, [&](std::size_t b, std::size_t e) {
        IdentityReport out;
        for (std::size_t i = b; i < e; ++i) {
          const ScaleTriple& a = triples[i];
          for (PointId y = 0; y < n; ++y) {
            for (Side side : {Side::alpha, Side::beta}) {
              if (y == a.omega || y == (side == Side::alpha ? a.alpha : a.beta)) {
                continue;
              }
              std::vector<Magnitude> critical;
              for (PointId x = 0; x < n; ++x) {
                critical.push_back(scaled_distance(map, a, x, y, side));
              }
              for (const auto& t : sample_radii(std::move(critical), map.scale())) {
                IdentityCase c;
                ++out.checked;
                if (!complement_identity(map, a, y, t, side, &c)) {
                  ++out.failed;
                  keep(out.failures, std::move(c), max_listed);
                }
              }
            }
          }
        }
        return out;
      });
  IdentityReport report;
  for (auto& chunk : chunks) {
    report.checked += chunk.checked;
    report.failed += chunk.failed;
    for (auto& c : chunk.failures) {
      keep(report.failures, std::move(c), max_listed);
    }
  }
  return report;
}

BallAgreementReport ball_families_agree(const SubMoebiusMap& map, unsigned jobs) {
  const auto n = static_cast<PointId>(map.size());
  require_small(n);
  const auto triples = all_scale_triples(n);
  auto chunks =
      parallel_chunks<BallAgreementReport>(triples.size(), jobs, [&](std::size_t b, std::size_t e) {
        BallAgreementReport out;
        for (std::size_t i = b; i < e; ++i) {
          const ScaleTriple& a = triples[i];
          const SemiMetricSpace d = scaled_semimetric(map, a);
          for (PointId y = 0; y < n; ++y) {
            if (y == a.omega) {
              continue;
            }
            // The metric ball reads d_A(y, x), the transpose of what the
            // alpha/beta balls use, so symmetry is part of the check.
            std::vector<Magnitude> critical;
            for (PointId x = 0; x < n; ++x) {
              critical.push_back(d.dist(y, x));
            }
            for (const auto& t : sample_radii(std::move(critical), map.scale())) {
              PointSet metric = 0;
              for (PointId x = 0; x < n; ++x) {
                if (d.dist(y, x) < t) {
                  metric = with_point(metric, x);
                }
              }
              std::optional<PointSet> alpha, beta;
              if (y != a.alpha) {
                alpha = ball(map, a, y, t, SubbaseKind::alpha_ball).members;
              }
              if (y != a.beta) {
                beta = ball(map, a, y, t, SubbaseKind::beta_ball).members;
              }
              ++out.checked;
              if ((alpha && *alpha != metric) || (beta && *beta != metric)) {
                if (out.failed++ == 0) {
                  out.scale = a;
                  out.y = y;
                  out.t = t;
                  out.metric_ball = metric;
                  out.alpha_ball = alpha;
                  out.beta_ball = beta;
                }
              }
            }
          }
        }
        return out;
      });
  BallAgreementReport report;
  for (auto& chunk : chunks) {
    report.checked += chunk.checked;
    if (chunk.failed > 0 && report.failed == 0) {
      report.scale = chunk.scale;
      report.y = chunk.y;
      report.t = chunk.t;
      report.metric_ball = chunk.metric_ball;
      report.alpha_ball = chunk.alpha_ball;
      report.beta_ball = chunk.beta_ball;
    }
    report.failed += chunk.failed;
  }
  return report;
}

std::vector<PointSet> semimetric_subbase(const SemiMetricSpace& space) {
  const auto n = static_cast<PointId>(space.size());
  require_small(n);
  std::set<PointSet> out;
  for (PointId y = 0; y < n; ++y) {
    std::vector<Magnitude> critical;
    for (PointId x = 0; x < n; ++x) {
      critical.push_back(space.dist(x, y));
    }
    for (const auto& t : sample_radii(std::move(critical), space.scale())) {
      PointSet s = 0;
      for (PointId x = 0; x < n; ++x) {
        if (space.dist(x, y) < t) {
          s = with_point(s, x);
        }
      }
      out.insert(s);
    }
  }
  return {out.begin(), out.end()};
}

std::vector<PointSet> moebius_subbase(const SubMoebiusMap& map, unsigned jobs) {
  const auto n = static_cast<PointId>(map.size());
  require_small(n);
  const auto triples = all_scale_triples(n);
  auto chunks = parallel_chunks<std::set<PointSet>>(
      triples.size(), jobs, [&](std::size_t b, std::size_t e) {
        std::set<PointSet> out;
        for (std::size_t i = b; i < e; ++i) {
          const ScaleTriple& a = triples[i];
          for (PointId y = 0; y < n; ++y) {
            for (Side side : {Side::alpha, Side::beta}) {
              if (y == (side == Side::alpha ? a.alpha : a.beta)) {
                continue;
              }
              std::vector<Magnitude> critical;
              for (PointId x = 0; x < n; ++x) {
                critical.push_back(scaled_distance(map, a, x, y, side));
              }
              const auto kind = side == Side::alpha ? SubbaseKind::alpha_ball : SubbaseKind::beta_ball;
              for (const auto& t : sample_radii(std::move(critical), map.scale())) {
                out.insert(ball(map, a, y, t, kind).members);
              }
            }
          }
        }
        return out;
      });
  std::set<PointSet> all;
  for (auto& c : chunks) {
    all.insert(c.begin(), c.end());
  }
  return {all.begin(), all.end()};
}

std::vector<PointSet> minimal_neighbourhoods(std::size_t n, const std::vector<PointSet>& subbase) {
  const PointSet universe = full_set(n);
  std::vector<PointSet> out(n, universe);
  for (PointId x = 0; x < n; ++x) {
    for (PointSet s : subbase) {
      if (contains(s, x)) {
        out[x] &= s;
      }
    }
  }
  return out;
}

bool same_topology(std::size_t n, const std::vector<PointSet>& first,
                   const std::vector<PointSet>& second) {
  return minimal_neighbourhoods(n, first) == minimal_neighbourhoods(n, second);
}

std::vector<PointSet> generate_topology(std::size_t n, const std::vector<PointSet>& subbase) {
  if (n > 16) {
    throw PreconditionError("topology enumeration is limited to 16 points");
  }
  const PointSet universe = full_set(n);
  std::set<PointSet> base{universe};
  for (PointSet s : subbase) {
    std::vector<PointSet> current(base.begin(), base.end());
    for (PointSet b : current) {
      base.insert(b & s & universe);
    }
  }
  std::set<PointSet> open{0};
  for (PointSet b : base) {
    std::vector<PointSet> current(open.begin(), open.end());
    for (PointSet o : current) {
      open.insert(o | b);
    }
  }
  return {open.begin(), open.end()};
}

}  // namespace moebius
