#include "moebius/reconstruction.hpp"

#include "moebius/errors.hpp"
#include "moebius/parallel.hpp"

namespace moebius {

namespace {

const Magnitude& coord(const SubMoebiusMap& map, const Tuple4& t, std::size_t k) {
  return map.at(t)[k];
}

std::optional<Magnitude> checked_ratio(const Magnitude& num, const Magnitude& den) {
  return num.checked_times(den.reciprocal());
}

ConditionCheck compare(std::optional<Magnitude> lhs, std::optional<Magnitude> rhs) {
  ConditionCheck check;
  check.holds = lhs && rhs && *lhs == *rhs;
  check.lhs = std::move(lhs);
  check.rhs = std::move(rhs);
  return check;
}

}  // namespace

ScaleTriple ScaleTriple::make(PointId alpha, PointId beta, PointId omega) {
  if (alpha == beta || alpha == omega || beta == omega) {
    throw PreconditionError("a scale triple needs three pairwise distinct points");
  }
  return ScaleTriple{alpha, beta, omega};
}

std::vector<ScaleTriple> all_scale_triples(std::size_t n) {
  std::vector<ScaleTriple> out;
  const auto m = static_cast<PointId>(n);
  for (PointId a = 0; a < m; ++a) {
    for (PointId b = 0; b < m; ++b) {
      for (PointId w = 0; w < m; ++w) {
        if (a != b && a != w && b != w) {
          out.push_back({a, b, w});
        }
      }
    }
  }
  return out;
}

Faces faces(const ScaleTriple& s, PointId x, PointId y) {
  return {{y, s.alpha, s.beta, s.omega},
          {x, s.alpha, s.beta, s.omega},
          {x, y, s.beta, s.omega},
          {x, y, s.alpha, s.omega}};
}

Magnitude scaled_distance(const SubMoebiusMap& map, const ScaleTriple& s, PointId x, PointId y,
                          Side side) {
  if (side == Side::alpha && y == s.alpha) {
    throw PreconditionError("d_A^alpha(x, y) is not defined for y = alpha");
  }
  if (side == Side::beta && y == s.beta) {
    throw PreconditionError("d_A^beta(x, y) is not defined for y = beta");
  }
  if (!is_admissible(s.five_tuple(x, y))) {
    return Magnitude::zero(map.scale());
  }
  const Faces f = faces(s, x, y);
  std::optional<Magnitude> value;
  if (side == Side::alpha) {
    auto product = coord(map, f.p1, 1).checked_times(coord(map, f.p4, 1));
    if (product) {
      value = product->reciprocal();
    }
  } else {
    value = checked_ratio(coord(map, f.p1, 0), coord(map, f.p3, 1));
  }
  if (!value) {
    throw UndefinedValueError("scaled distance is not well defined; the table is not sub-Moebius");
  }
  return *std::move(value);
}

ConditionReport check_conditions(const SubMoebiusMap& map, const ScaleTriple& s, PointId x,
                                 PointId y) {
  if (!is_admissible(s.five_tuple(x, y))) {
    throw PreconditionError("conditions (A), (B) need an admissible 5-tuple");
  }
  const Faces f = faces(s, x, y);
  ConditionReport report;
  if (y != s.alpha && y != s.beta) {
    report.a = compare(coord(map, f.p1, 1).checked_times(coord(map, f.p4, 1)),
                       checked_ratio(coord(map, f.p3, 1), coord(map, f.p1, 0)));
  }
  if (y != s.alpha && y != s.omega) {
    report.b = compare(coord(map, f.p2, 1), checked_ratio(coord(map, f.p1, 1), coord(map, f.p4, 0)));
  }
  return report;
}

MoebiusVerdict is_moebius(const SubMoebiusMap& map, unsigned jobs) {
  const auto triples = all_scale_triples(map.size());
  const auto n = static_cast<PointId>(map.size());
  struct Chunk {
    std::size_t checked = 0;
    std::optional<MoebiusWitness> first;
  };
  auto chunks = parallel_chunks<Chunk>(triples.size(), jobs, [&](std::size_t b, std::size_t e) {
    Chunk out;
    for (std::size_t i = b; i < e; ++i) {
      const ScaleTriple& s = triples[i];
      for (PointId x = 0; x < n; ++x) {
        for (PointId y = 0; y < n; ++y) {
          if (!is_admissible(s.five_tuple(x, y))) {
            continue;
          }
          ++out.checked;
          if (out.first) {
            continue;
          }
          auto report = check_conditions(map, s, x, y);
          if (report.a && !report.a->holds) {
            out.first = MoebiusWitness{s, s.five_tuple(x, y), 'A', report.a->lhs, report.a->rhs};
          } else if (report.b && !report.b->holds) {
            out.first = MoebiusWitness{s, s.five_tuple(x, y), 'B', report.b->lhs, report.b->rhs};
          }
        }
      }
    }
    return out;
  });
  MoebiusVerdict verdict;
  for (auto& chunk : chunks) {
    verdict.checked_tuples += chunk.checked;
    if (!verdict.witness && chunk.first) {
      verdict.is_moebius = false;
      verdict.witness = std::move(chunk.first);
    }
  }
  return verdict;
}

NotMoebiusError::NotMoebiusError(MoebiusVerdict verdict)
    : Error("the table is not a Moebius structure: condition (" +
            std::string(1, verdict.witness ? verdict.witness->condition : '?') + ") fails"),
      verdict_(std::move(verdict)) {}

SemiMetricSpace scaled_semimetric(const SubMoebiusMap& map, const ScaleTriple& s) {
  return SemiMetricSpace::from_function(map.labels(), s.omega, map.scale(),
                                        [&](PointId x, PointId y) {
                                          return scaled_distance(map, s, x, y,
                                                                 y != s.alpha ? Side::alpha
                                                                              : Side::beta);
                                        });
}

SemiMetricSpace reconstruct_semimetric(const SubMoebiusMap& map, const ScaleTriple& s,
                                       unsigned jobs) {
  auto verdict = is_moebius(map, jobs);
  if (!verdict.is_moebius) {
    throw NotMoebiusError(std::move(verdict));
  }
  return scaled_semimetric(map, s);
}

ScaleChange scale_change_factor(const SubMoebiusMap& map, const ScaleTriple& s, PointId y) {
  if (y == s.omega) {
    throw PreconditionError("scale change factors are not defined for y = omega");
  }
  const Tuple4 p1{y, s.alpha, s.beta, s.omega};
  ScaleChange out;
  if (y != s.alpha) {
    out.lambda = coord(map, p1, 1).reciprocal();
  }
  if (y != s.beta) {
    out.mu = coord(map, p1, 0);
  }
  return out;
}

}  // namespace moebius
