#include "moebius/semimetric.hpp"

#include <algorithm>

#include "moebius/cross_ratio.hpp"
#include "moebius/errors.hpp"
#include "moebius/formal_product.hpp"

namespace moebius {

SemiMetricSpace::SemiMetricSpace(Labels labels, std::vector<Magnitude> matrix,
                                 std::optional<PointId> omega, Scale scale)
    : labels_(std::move(labels)), matrix_(std::move(matrix)), omega_(omega), scale_(scale) {
  const std::size_t n = labels_.size();
  if (matrix_.size() != n * n) {
    throw InputError("distance matrix has " + std::to_string(matrix_.size()) +
                     " entries, expected " + std::to_string(n * n));
  }
  for (const auto& m : matrix_) {
    if (m.scale() != scale_) {
      throw InputError("distance matrix mixes multiplicative and logarithmic entries");
    }
  }
  if (omega_ && *omega_ >= n) {
    throw InputError("omega index out of range");
  }
  std::vector<std::string> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("duplicate point label");
  }
}

std::optional<PointId> SemiMetricSpace::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    return std::nullopt;
  }
  return static_cast<PointId>(it - labels_.begin());
}

PointId SemiMetricSpace::require_index(const std::string& label) const {
  auto idx = index_of(label);
  if (!idx) {
    throw InputError("unknown point '" + label + "'");
  }
  return *idx;
}

std::vector<PointId> infinitely_remote_points(const SemiMetricSpace& space) {
  const auto n = static_cast<PointId>(space.size());
  std::vector<PointId> remote;
  if (n < 2) {
    return remote;
  }
  for (PointId p = 0; p < n; ++p) {
    bool all_inf = true;
    for (PointId x = 0; x < n && all_inf; ++x) {
      if (x != p) {
        all_inf = space.dist(x, p).is_infinite() && space.dist(p, x).is_infinite();
      }
    }
    if (all_inf) {
      remote.push_back(p);
    }
  }
  return remote;
}

ValidationReport validate_semimetric(const SemiMetricSpace& space) {
  ValidationReport report;
  const auto n = static_cast<PointId>(space.size());
  auto add = [&](std::string kind, std::vector<PointId> where, std::string detail) {
    report.violations.push_back({std::move(kind), std::move(where), std::move(detail)});
  };

  for (PointId i = 0; i < n; ++i) {
    if (!space.dist(i, i).is_zero()) {
      add("diagonal_nonzero", {i}, "d(" + space.label(i) + "," + space.label(i) +
                                       ") = " + space.dist(i, i).to_string());
    }
  }
  for (PointId i = 0; i < n; ++i) {
    for (PointId j = i + 1; j < n; ++j) {
      if (space.dist(i, j) != space.dist(j, i)) {
        add("asymmetric", {i, j},
            "d(" + space.label(i) + "," + space.label(j) + ") = " + space.dist(i, j).to_string() +
                " but d(" + space.label(j) + "," + space.label(i) +
                ") = " + space.dist(j, i).to_string());
      }
    }
  }
  for (PointId i = 0; i < n; ++i) {
    for (PointId j = 0; j < n; ++j) {
      if (i != j && space.dist(i, j).is_zero()) {
        add("nonpositive", {i, j},
            "d(" + space.label(i) + "," + space.label(j) + ") = 0 off the diagonal");
      }
    }
  }

  const auto remote = infinitely_remote_points(space);
  if (remote.size() > 1) {
    add("multiple_infinitely_remote", remote, "more than one infinitely remote point");
  }
  auto is_remote = [&](PointId p) {
    return std::find(remote.begin(), remote.end(), p) != remote.end();
  };
  for (PointId i = 0; i < n; ++i) {
    for (PointId j = i + 1; j < n; ++j) {
      bool inf = space.dist(i, j).is_infinite() || space.dist(j, i).is_infinite();
      if (inf && !is_remote(i) && !is_remote(j)) {
        add("stray_infinity", {i, j},
            "infinite distance between " + space.label(i) + " and " + space.label(j) +
                ", neither of which is infinitely remote");
      }
    }
  }

  if (space.omega() && !is_remote(*space.omega())) {
    add("omega_mismatch", {*space.omega()},
        "declared omega " + space.label(*space.omega()) + " is not infinitely remote");
  }
  if (!space.omega() && remote.size() == 1) {
    add("omega_mismatch", remote,
        space.label(remote.front()) + " is infinitely remote but omega is not declared");
  }
  return report;
}

SemiMetricSpace metric_inversion(const SemiMetricSpace& space, PointId center,
                                 const Magnitude& radius_squared) {
  if (center >= space.size()) {
    throw PreconditionError("inversion center out of range");
  }
  require_same_scale(space.scale(), radius_squared.scale());
  if (!radius_squared.is_finite_positive()) {
    throw PreconditionError("inversion radius must be finite and positive");
  }
  const auto remote = infinitely_remote_points(space);
  if (std::find(remote.begin(), remote.end(), center) != remote.end()) {
    throw PreconditionError("point " + space.label(center) + " is already infinitely remote");
  }
  return SemiMetricSpace::from_function(
      space.labels(), center, space.scale(), [&](PointId x, PointId y) {
        FormalProduct p(space.scale());
        p.multiply(radius_squared).multiply(space.dist(x, y));
        p.divide(space.dist(x, center)).divide(space.dist(y, center));
        return p.value();
      });
}

SemiMetricSpace metric_inversion(const SemiMetricSpace& space, PointId center,
                                 const Rational& radius) {
  if (sgn(radius) <= 0) {
    throw PreconditionError("inversion radius must be positive");
  }
  Magnitude r = Magnitude::from_rational(radius);
  if (space.scale() == Scale::logarithmic) {
    throw PreconditionError("a rational radius needs a multiplicative space");
  }
  return metric_inversion(space, center, r.squared());
}

SemiMetricSpace rescale(const SemiMetricSpace& space, const Magnitude& lambda) {
  require_same_scale(space.scale(), lambda.scale());
  if (!lambda.is_finite_positive()) {
    throw PreconditionError("rescaling factor must be finite and positive");
  }
  return SemiMetricSpace::from_function(space.labels(), space.omega(), space.scale(),
                                        [&](PointId x, PointId y) {
                                          return space.dist(x, y).times(lambda);
                                        });
}

EquivalenceResult moebius_equivalent(const SemiMetricSpace& first,
                                     const SemiMetricSpace& second) {
  if (first.size() != second.size()) {
    throw PreconditionError("Moebius equivalence needs spaces over the same point set");
  }
  require_same_scale(first.scale(), second.scale());
  const auto n = static_cast<PointId>(first.size());
  EquivalenceResult result;
  Tuple4 t{};
  for (t[0] = 0; t[0] < n; ++t[0]) {
    for (t[1] = 0; t[1] < n; ++t[1]) {
      for (t[2] = 0; t[2] < n; ++t[2]) {
        for (t[3] = 0; t[3] < n; ++t[3]) {
          if (!is_admissible(t)) {
            continue;
          }
          auto lhs = moebius_value(first, t);
          auto rhs = moebius_value(second, t);
          if (lhs != rhs) {
            result.equivalent = false;
            result.witness = t;
            result.first_value = lhs.coords();
            result.second_value = rhs.coords();
            return result;
          }
        }
      }
    }
  }
  return result;
}

}  // namespace moebius
