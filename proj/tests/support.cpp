#include "support.hpp"

#include <cstdlib>
#include <string>

#include "demo.hpp"

namespace moebius::testing {

SemiMetricSpace random_space(std::mt19937_64& rng, std::size_t n, bool omega) {
  std::uniform_int_distribution<long> num(1, 30);
  std::uniform_int_distribution<long> den(1, 6);
  Labels labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("p" + std::to_string(i));
  }
  std::optional<PointId> w;
  if (omega) {
    w = static_cast<PointId>(n - 1);
    labels.back() = "w";
  }
  std::vector<Magnitude> matrix(n * n, Magnitude::zero(Scale::multiplicative));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Magnitude d = (w && (i == *w || j == *w))
                        ? Magnitude::infinity(Scale::multiplicative)
                        : Magnitude::from_rational(Rational(num(rng), den(rng)));
      matrix[i * n + j] = d;
      matrix[j * n + i] = d;
    }
  }
  return SemiMetricSpace(std::move(labels), std::move(matrix), w, Scale::multiplicative);
}

std::vector<SemiMetricSpace> generated_spaces(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<SemiMetricSpace> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(random_space(rng, 4 + i % 4, (i / 4) % 2 == 1));
  }
  return out;
}

namespace {

SemiMetricSpace on_line(Labels labels, const std::vector<long>& xs, std::optional<PointId> w) {
  return SemiMetricSpace::from_function(
      std::move(labels), w, Scale::multiplicative, [&](PointId i, PointId j) {
        if (w && (i == *w || j == *w)) {
          return Magnitude::infinity(Scale::multiplicative);
        }
        return Magnitude::from_rational(std::labs(xs[i] - xs[j]));
      });
}

}  // namespace

SemiMetricSpace line_space() { return on_line({"0", "1", "3", "7"}, {0, 1, 3, 7}, std::nullopt); }

SemiMetricSpace normalized_line_space() {
  return on_line({"a", "b", "c", "d", "w"}, {0, 1, 3, 7, 0}, PointId{4});
}

std::array<Rational, 3> oracle_cross_ratios(const SemiMetricSpace& space, const Tuple4& p) {
  const Rational big("1000000000000000000000000000000");
  auto d = [&](int i, int j) -> Rational {
    const Magnitude& m = space.dist(p[i - 1], p[j - 1]);
    return m.is_infinite() ? big : m.stored().value();
  };
  std::array<Rational, 3> out{Rational(d(1, 3) * d(2, 4) / (d(1, 4) * d(2, 3))),
                              Rational(d(1, 4) * d(2, 3) / (d(1, 2) * d(3, 4))),
                              Rational(d(1, 2) * d(3, 4) / (d(1, 3) * d(2, 4)))};
  for (auto& q : out) {
    q.canonicalize();
  }
  return out;
}

std::optional<L4Kind> oracle_degenerate_kind(const Tuple4& p) {
  // M(x1,x1,x3,x4) = M(x1,x2,x3,x3) = A, M(x1,x2,x1,x4) = M(x1,x2,x3,x2) = B,
  // M(x1,x2,x3,x1) = M(x1,x2,x2,x4) = C.
  if (p[0] == p[1] || p[2] == p[3]) {
    return L4Kind::A;
  }
  if (p[0] == p[2] || p[1] == p[3]) {
    return L4Kind::B;
  }
  if (p[0] == p[3] || p[1] == p[2]) {
    return L4Kind::C;
  }
  return std::nullopt;
}

std::array<Rational, 3> rationals(const Triple& t) {
  return {t[0].stored().value(), t[1].stored().value(), t[2].stored().value()};
}

TreeSource binary_tree(int depth) {
  TreeSource tree;
  tree.root = "r";
  std::vector<std::string> level{"r"};
  for (int k = 1; k <= depth; ++k) {
    std::vector<std::string> next;
    for (const auto& parent : level) {
      for (int c = 0; c < 2; ++c) {
        const std::string child = (k == depth ? "l" : "v" + std::to_string(k) + "_") +
                                  std::to_string(next.size());
        tree.edges.push_back({parent, child, 1});
        next.push_back(child);
      }
    }
    level = std::move(next);
  }
  return tree;
}

TreeSource caterpillar_tree(int legs) {
  TreeSource tree;
  tree.root = "r";
  std::string spine = "r";
  for (int k = 1; k <= legs; ++k) {
    tree.edges.push_back({spine, "leg" + std::to_string(k), Rational(k, 2)});
    if (k < legs) {
      const std::string next = "s" + std::to_string(k);
      tree.edges.push_back({spine, next, k});
      spine = next;
    }
  }
  return tree;
}

MetricSource cycle_metric(int k) {
  MetricSource source;
  for (int i = 0; i < k; ++i) {
    source.points.push_back("c" + std::to_string(i));
  }
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const int gap = std::abs(i - j);
      source.dist.emplace_back(std::min(gap, k - gap));
    }
  }
  source.basepoint = "c0";
  return source;
}

MetricSource grid_metric(int w, int h) {
  MetricSource source;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      source.points.push_back("g" + std::to_string(x) + std::to_string(y));
    }
  }
  const int n = w * h;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      source.dist.emplace_back(std::abs(i % w - j % w) + std::abs(i / w - j / w));
    }
  }
  source.basepoint = source.points.front();
  return source;
}

GromovProductModel frozen_model() { return build_model(cli::demo_cycle_metric()); }

SubMoebiusMap frozen_perturbed() {
  const GromovProductModel model = frozen_model();
  return symmetrize(perturb(model, 4 * model.h(), cli::kDemoSeed));
}

MoebiusWitness frozen_witness() {
  MoebiusWitness w;
  w.scale = ScaleTriple::make(0, 1, 2);
  w.tuple = {3, 4, 0, 1, 2};
  w.condition = 'A';
  w.lhs = Magnitude::from_log(ExtReal(Rational(-829, 2000)));
  w.rhs = Magnitude::from_log(ExtReal(Rational(-1171, 6000)));
  return w;
}

std::string data_path(const std::string& name) {
  return std::string(MOEBIUS_TEST_DATA_DIR) + "/" + name;
}

std::vector<std::pair<PointId, PointId>> admissible_pairs(std::size_t n, const ScaleTriple& a) {
  std::vector<std::pair<PointId, PointId>> out;
  for (PointId x = 0; x < n; ++x) {
    for (PointId y = 0; y < n; ++y) {
      const Tuple5 t = a.five_tuple(x, y);
      if (is_admissible(t)) {
        out.emplace_back(x, y);
      }
    }
  }
  return out;
}

}  // namespace moebius::testing
