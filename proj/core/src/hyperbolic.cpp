#include "moebius/hyperbolic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <random>

#include "moebius/errors.hpp"
#include "moebius/parallel.hpp"

namespace moebius {

namespace {

void require_distinct(const Labels& labels, const std::string& what) {
  Labels sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("duplicate " + what + " label");
  }
}

struct Tree {
  std::vector<std::string> names;  // order of first appearance
  std::map<std::string, std::size_t> index;
  std::vector<std::optional<std::size_t>> parent;
  std::vector<Rational> up_length;
  std::vector<std::size_t> children;
  std::size_t root = 0;

  std::size_t add(const std::string& name) {
    auto [it, inserted] = index.emplace(name, names.size());
    if (inserted) {
      names.push_back(name);
      parent.emplace_back();
      up_length.emplace_back(0);
      children.push_back(0);
    }
    return it->second;
  }
};

Tree parse_tree(const TreeSource& source) {
  Tree tree;
  for (const auto& e : source.edges) {
    if (e.parent == e.child) {
      throw InputError("tree edge " + e.parent + " -> " + e.child + " is a loop");
    }
    if (sgn(e.length) <= 0) {
      throw InputError("tree edge " + e.parent + " -> " + e.child + " has nonpositive length");
    }
    const std::size_t p = tree.add(e.parent);
    const std::size_t c = tree.add(e.child);
    if (tree.parent[c]) {
      throw InputError("tree vertex " + e.child + " has more than one parent");
    }
    tree.parent[c] = p;
    tree.up_length[c] = e.length;
    ++tree.children[p];
  }
  auto root = tree.index.find(source.root);
  if (root == tree.index.end()) {
    throw InputError("tree root " + source.root + " does not occur in any edge");
  }
  tree.root = root->second;
  if (tree.parent[tree.root]) {
    throw InputError("tree root " + source.root + " has a parent");
  }
  // Every vertex must reach the root in fewer than |V| steps.
  for (std::size_t v = 0; v < tree.names.size(); ++v) {
    std::size_t cur = v;
    std::size_t steps = 0;
    while (cur != tree.root) {
      if (!tree.parent[cur] || ++steps > tree.names.size()) {
        throw InputError("tree vertex " + tree.names[v] + " is not connected to the root");
      }
      cur = *tree.parent[cur];
    }
  }
  return tree;
}

std::vector<std::size_t> path_to_root(const Tree& tree, std::size_t v) {
  std::vector<std::size_t> path{v};
  while (path.back() != tree.root) {
    path.push_back(*tree.parent[path.back()]);
  }
  return path;
}

Rational depth(const Tree& tree, std::size_t v) {
  Rational d = 0;
  for (; v != tree.root; v = *tree.parent[v]) {
    d += tree.up_length[v];
  }
  return d;
}

const Rational& log_value(const Magnitude& m) { return m.stored().value(); }

}  // namespace

GromovProductModel::GromovProductModel(Labels boundary, std::vector<ExtReal> gp)
    : boundary_(std::move(boundary)), gp_(std::move(gp)) {
  const std::size_t n = boundary_.size();
  if (gp_.size() != n * n) {
    throw InputError("Gromov product matrix has " + std::to_string(gp_.size()) +
                     " entries, expected " + std::to_string(n * n));
  }
  require_distinct(boundary_, "boundary");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const ExtReal& v = gp_[i * n + j];
      const std::string where = "(" + boundary_[i] + "|" + boundary_[j] + ")";
      if (i == j && !v.is_pos_inf()) {
        throw InputError("Gromov product " + where + " must be inf on the diagonal");
      }
      if (i != j && !v.is_finite()) {
        throw InputError("Gromov product " + where + " must be finite off the diagonal");
      }
      if (v != gp_[j * n + i]) {
        throw InputError("Gromov product matrix is not symmetric at " + where);
      }
    }
  }
  h_ = hyperbolicity_constant(gp_, n);
}

Rational hyperbolicity_constant(const std::vector<ExtReal>& gp, std::size_t n) {
  Rational h = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      for (std::size_t z = y + 1; z < n; ++z) {
        std::array<Rational, 3> t{gp[x * n + y].value(), gp[x * n + z].value(),
                                  gp[y * n + z].value()};
        std::sort(t.begin(), t.end());
        if (t[1] - t[0] > h) {
          h = t[1] - t[0];
        }
      }
    }
  }
  return h;
}

GromovProductModel build_model(const MetricSource& source) {
  const std::size_t n = source.points.size();
  if (source.dist.size() != n * n) {
    throw InputError("metric has " + std::to_string(source.dist.size()) + " entries, expected " +
                     std::to_string(n * n));
  }
  require_distinct(source.points, "point");
  auto it = std::find(source.points.begin(), source.points.end(), source.basepoint);
  if (it == source.points.end()) {
    throw InputError("basepoint " + source.basepoint + " is not a point of the metric");
  }
  const auto o = static_cast<std::size_t>(it - source.points.begin());
  auto d = [&](std::size_t i, std::size_t j) -> const Rational& { return source.dist[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::string where = "d(" + source.points[i] + "," + source.points[j] + ")";
      if (i == j ? sgn(d(i, j)) != 0 : sgn(d(i, j)) <= 0) {
        throw InputError("metric entry " + where + " violates positivity");
      }
      if (d(i, j) != d(j, i)) {
        throw InputError("metric is not symmetric at " + where);
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (d(i, j) > d(i, k) + d(k, j)) {
          throw InputError("triangle inequality fails for " + where + " via " + source.points[k]);
        }
      }
    }
  }
  if (n < 3) {
    throw InputError("a metric source needs at least two points besides the basepoint");
  }
  Labels boundary;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != o) {
      boundary.push_back(source.points[i]);
      idx.push_back(i);
    }
  }
  const std::size_t m = idx.size();
  std::vector<ExtReal> gp(m * m, ExtReal::pos_infinity());
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a != b) {
        Rational v = (d(idx[a], o) + d(idx[b], o) - d(idx[a], idx[b])) / 2;
        gp[a * m + b] = v;
      }
    }
  }
  return GromovProductModel(std::move(boundary), std::move(gp));
}

GromovProductModel build_model(const TreeSource& source) {
  const Tree tree = parse_tree(source);
  std::vector<std::size_t> leaves;
  for (std::size_t v = 0; v < tree.names.size(); ++v) {
    if (v != tree.root && tree.children[v] == 0) {
      leaves.push_back(v);
    }
  }
  if (leaves.size() < 2) {
    throw InputError("a tree source needs at least two leaves");
  }
  const std::size_t m = leaves.size();
  std::vector<std::vector<std::size_t>> paths;
  for (auto v : leaves) {
    paths.push_back(path_to_root(tree, v));
  }
  Labels boundary;
  std::vector<ExtReal> gp(m * m, ExtReal::pos_infinity());
  for (std::size_t a = 0; a < m; ++a) {
    boundary.push_back(tree.names[leaves[a]]);
    for (std::size_t b = a + 1; b < m; ++b) {
      // Walk both root paths from the top; the last shared vertex is the LCA.
      auto pa = paths[a].rbegin();
      auto pb = paths[b].rbegin();
      std::size_t lca = tree.root;
      for (; pa != paths[a].rend() && pb != paths[b].rend() && *pa == *pb; ++pa, ++pb) {
        lca = *pa;
      }
      const Rational v = depth(tree, lca);
      gp[a * m + b] = v;
      gp[b * m + a] = v;
    }
  }
  return GromovProductModel(std::move(boundary), std::move(gp));
}

TreeSource reroot(const TreeSource& source, const std::string& new_root) {
  const Tree tree = parse_tree(source);
  auto it = tree.index.find(new_root);
  if (it == tree.index.end()) {
    throw InputError("vertex " + new_root + " is not in the tree");
  }
  const std::size_t r = it->second;
  if (r != tree.root && tree.children[r] == 0) {
    throw InputError("cannot reroot at the leaf " + new_root);
  }
  // Edges on the path from the new root up to the old root flip direction;
  // everything else, including the edge order, is unchanged.
  std::vector<bool> on_path(tree.names.size(), false);
  for (auto v : path_to_root(tree, r)) {
    on_path[v] = true;
  }
  TreeSource out{source.edges, new_root};
  for (auto& e : out.edges) {
    const std::size_t c = tree.index.at(e.child);
    if (on_path[c]) {
      std::swap(e.parent, e.child);
    }
  }
  return out;
}

SemiMetricSpace basepoint_semimetric(const GromovProductModel& model) {
  return SemiMetricSpace::from_function(
      model.boundary(), std::nullopt, Scale::logarithmic,
      [&](PointId x, PointId y) { return Magnitude::from_log(-model.gp(x, y)); });
}

SubMoebiusMap basepoint_moebius(const GromovProductModel& model, unsigned jobs) {
  return moebius_of(basepoint_semimetric(model), jobs);
}

Rational perturbation_noise(const Rational& eps, std::uint64_t seed, std::size_t code,
                            unsigned component) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(code), static_cast<std::uint32_t>(code >> 32),
                    static_cast<std::uint32_t>(component)};
  std::mt19937_64 engine(seq);
  // Plain modulo keeps the draw identical across standard libraries.
  const long k = static_cast<long>(engine() % 2001) - 1000;
  Rational step(k, 1000);
  step.canonicalize();
  return eps * step;
}

SubMoebiusMap perturb(const GromovProductModel& model, const Rational& eps, std::uint64_t seed,
                      unsigned jobs) {
  if (sgn(eps) < 0) {
    throw PreconditionError("perturbation size must be nonnegative");
  }
  SubMoebiusMap map = basepoint_moebius(model, jobs);
  const auto& tuples = map.admissible_tuples();
  using Chunk = std::vector<std::pair<std::size_t, Triple>>;
  auto chunks = parallel_chunks<Chunk>(tuples.size(), jobs, [&](std::size_t b, std::size_t e) {
    Chunk out;
    for (std::size_t i = b; i < e; ++i) {
      const Tuple4& t = tuples[i];
      if (!is_nondegenerate(t)) {
        continue;
      }
      const Triple& value = map.at(t);
      const std::size_t code = map.code(t);
      Rational a = log_value(value[0]) + perturbation_noise(eps, seed, code, 0);
      Rational b = log_value(value[1]) + perturbation_noise(eps, seed, code, 1);
      Rational c = -(a + b);
      out.emplace_back(i, Triple{{Magnitude::from_log(a), Magnitude::from_log(b),
                                  Magnitude::from_log(c)}});
    }
    return out;
  });
  for (auto& chunk : chunks) {
    for (auto& [i, value] : chunk) {
      map.set(tuples[i], std::move(value));
    }
  }
  return map;
}

SubMoebiusMap symmetrize(const SubMoebiusMap& raw, unsigned jobs) {
  if (raw.scale() != Scale::logarithmic) {
    throw PreconditionError("symmetrize needs a log-backed table (exact averaging of logarithms)");
  }
  const auto& tuples = raw.admissible_tuples();
  for (const auto& t : tuples) {
    const auto& value = raw.entry(t);
    if (!value) {
      throw PreconditionError("symmetrize needs a value on every admissible tuple");
    }
    if (auto pattern = degenerate_pattern(t)) {
      if (*value != pinned_pattern(*pattern, raw.scale())) {
        throw PreconditionError("degenerate tuple carries a value other than its pinned pattern");
      }
    } else if (classify(*value) != L4Kind::regular) {
      throw PreconditionError("nondegenerate tuple carries a non-regular value");
    }
  }

  struct Element {
    Perm4 perm;
    int sign;
    Perm3 phi_inverse;
  };
  std::vector<Element> group;
  for (const auto& rho : Perm4::all()) {
    group.push_back({rho, sign_of(rho), phi(rho.inverse())});
  }

  using Chunk = std::vector<std::pair<std::size_t, Triple>>;
  auto chunks = parallel_chunks<Chunk>(tuples.size(), jobs, [&](std::size_t b, std::size_t e) {
    Chunk out;
    for (std::size_t i = b; i < e; ++i) {
      const Tuple4& p = tuples[i];
      if (!is_nondegenerate(p)) {
        continue;
      }
      std::array<Rational, 3> sum{0, 0, 0};
      for (const auto& g : group) {
        const Triple term = signed_permute(g.phi_inverse, g.sign, raw.at(act_on_tuple(g.perm, p)));
        for (std::size_t k = 0; k < 3; ++k) {
          sum[k] += log_value(term[k]);
        }
      }
      Triple avg;
      for (std::size_t k = 0; k < 3; ++k) {
        avg[k] = Magnitude::from_log(Rational(sum[k] / 24));
      }
      out.emplace_back(i, std::move(avg));
    }
    return out;
  });
  SubMoebiusMap out = raw;
  for (auto& chunk : chunks) {
    for (auto& [i, value] : chunk) {
      out.set(tuples[i], std::move(value));
    }
  }
  return out;
}

DeviationReport deviation_check(const SubMoebiusMap& m, const SubMoebiusMap& m_o,
                                const Rational& h, unsigned jobs) {
  if (m.labels() != m_o.labels()) {
    throw PreconditionError("deviation check needs two tables over the same domain");
  }
  if (m.scale() != Scale::logarithmic || m_o.scale() != Scale::logarithmic) {
    throw PreconditionError("deviation check compares log-backed tables");
  }
  if (sgn(h) < 0) {
    throw PreconditionError("hyperbolicity constant must be nonnegative");
  }
  const auto& tuples = m.admissible_tuples();
  struct Chunk {
    Rational best = 0;
    std::optional<std::size_t> where;
    std::size_t compared = 0;
  };
  auto chunks = parallel_chunks<Chunk>(tuples.size(), jobs, [&](std::size_t b, std::size_t e) {
    Chunk out;
    for (std::size_t i = b; i < e; ++i) {
      const Tuple4& p = tuples[i];
      if (!is_nondegenerate(p)) {
        continue;
      }
      const Triple& x = m.at(p);
      const Triple& y = m_o.at(p);
      if (classify(x) != L4Kind::regular || classify(y) != L4Kind::regular) {
        throw PreconditionError("deviation check met a non-regular value on a nondegenerate tuple");
      }
      Rational norm = 0;
      for (std::size_t k = 0; k < 3; ++k) {
        Rational diff = log_value(x[k]) - log_value(y[k]);
        norm += diff * diff;
      }
      ++out.compared;
      if (!out.where || norm > out.best) {
        out.best = norm;
        out.where = i;
      }
    }
    return out;
  });
  DeviationReport report;
  report.h = h;
  report.max_norm_squared = 0;
  std::optional<std::size_t> where;
  for (const auto& chunk : chunks) {
    report.compared += chunk.compared;
    if (chunk.where && (!where || chunk.best > report.max_norm_squared)) {
      report.max_norm_squared = chunk.best;
      where = chunk.where;
    }
  }
  if (where) {
    report.worst = tuples[*where];
  }
  report.max_norm = std::sqrt(report.max_norm_squared.get_d());
  return report;
}

}  // namespace moebius
