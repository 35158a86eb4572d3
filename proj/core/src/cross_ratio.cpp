#include "moebius/cross_ratio.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "moebius/errors.hpp"
#include "moebius/formal_product.hpp"
#include "moebius/parallel.hpp"

namespace moebius {

namespace {

struct SignedElement {
  Perm4 perm;
  int sign;
  Perm3 image;
};

const std::array<SignedElement, 24>& signed_elements() {
  static const std::array<SignedElement, 24> table = [] {
    std::array<SignedElement, 24> out{};
    const auto& all = Perm4::all();
    for (std::size_t i = 0; i < all.size(); ++i) {
      out[i] = {all[i], sign_of(all[i]), phi(all[i])};
    }
    return out;
  }();
  return table;
}

std::shared_ptr<const std::vector<Tuple4>> admissible_list(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const std::vector<Tuple4>>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    auto list = std::make_shared<std::vector<Tuple4>>();
    const auto m = static_cast<PointId>(n);
    Tuple4 t{};
    for (t[0] = 0; t[0] < m; ++t[0]) {
      for (t[1] = 0; t[1] < m; ++t[1]) {
        for (t[2] = 0; t[2] < m; ++t[2]) {
          for (t[3] = 0; t[3] < m; ++t[3]) {
            if (is_admissible(t)) {
              list->push_back(t);
            }
          }
        }
      }
    }
    slot = std::move(list);
  }
  return slot;
}

std::string render(const Labels& labels, const Tuple4& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < 4; ++i) {
    s += labels[t[i]];
    s += i < 3 ? "," : ")";
  }
  return s;
}

}  // namespace

bool is_admissible(std::span<const PointId> tuple) {
  if (tuple.size() < 4) {
    return false;
  }
  if (tuple.size() == 4) {
    for (std::size_t i = 0; i < 4; ++i) {
      if (std::count(tuple.begin(), tuple.end(), tuple[i]) >= 3) {
        return false;
      }
    }
    return true;
  }
  std::vector<PointId> deletion(tuple.size() - 1);
  for (std::size_t skip = 0; skip < tuple.size(); ++skip) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (i != skip) {
        deletion[k++] = tuple[i];
      }
    }
    if (!is_admissible(deletion)) {
      return false;
    }
  }
  return true;
}

bool is_nondegenerate(std::span<const PointId> tuple) {
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    for (std::size_t j = i + 1; j < tuple.size(); ++j) {
      if (tuple[i] == tuple[j]) {
        return false;
      }
    }
  }
  return true;
}

std::optional<L4Kind> degenerate_pattern(const Tuple4& t) {
  if (t[0] == t[1] || t[2] == t[3]) {
    return L4Kind::A;
  }
  if (t[0] == t[2] || t[1] == t[3]) {
    return L4Kind::B;
  }
  if (t[0] == t[3] || t[1] == t[2]) {
    return L4Kind::C;
  }
  return std::nullopt;
}

Magnitude cross_difference(const SemiMetricSpace& space, const Tuple4& t) {
  if (!is_admissible(t)) {
    throw PreconditionError("cross-difference of an inadmissible tuple");
  }
  FormalProduct p(space.scale());
  p.multiply(space.dist(t[0], t[2])).multiply(space.dist(t[1], t[3]));
  p.divide(space.dist(t[0], t[3])).divide(space.dist(t[1], t[2]));
  return p.value();
}

L4Point moebius_value(const SemiMetricSpace& space, const Tuple4& t) {
  if (!is_admissible(t)) {
    throw PreconditionError("Moebius structure is undefined on inadmissible tuples");
  }
  if (auto pattern = degenerate_pattern(t)) {
    return L4Point::degenerate(*pattern, space.scale());
  }
  // a = cd(x1,x2,x3,x4), b = cd(x1,x3,x4,x2); a + b + c = 0 fixes c.
  Magnitude a = cross_difference(space, t);
  Magnitude b = cross_difference(space, {t[0], t[2], t[3], t[1]});
  Magnitude c = a.times(b).reciprocal();
  return L4Point::make(a, b, c);
}

SubMoebiusMap::SubMoebiusMap(Labels labels, Scale scale)
    : labels_(std::move(labels)),
      scale_(scale),
      admissible_(admissible_list(labels_.size())),
      entries_(labels_.size() * labels_.size() * labels_.size() * labels_.size()) {
  if (labels_.size() > 255) {
    throw InputError("domain too large for an extensional 4-tuple table");
  }
}

SubMoebiusMap SubMoebiusMap::with_pinned_degenerates(Labels labels, Scale scale) {
  SubMoebiusMap map(std::move(labels), scale);
  for (const auto& t : map.admissible_tuples()) {
    if (auto pattern = degenerate_pattern(t)) {
      map.entries_[map.code(t)] = pinned_pattern(*pattern, scale);
    }
  }
  return map;
}

std::size_t SubMoebiusMap::code(const Tuple4& t) const {
  const std::size_t n = size();
  for (auto v : t) {
    if (v >= n) {
      throw InputError("point index out of range");
    }
  }
  return ((t[0] * n + t[1]) * n + t[2]) * n + t[3];
}

Tuple4 SubMoebiusMap::tuple(std::size_t code) const {
  const std::size_t n = size();
  Tuple4 t{};
  for (int i = 3; i >= 0; --i) {
    t[static_cast<std::size_t>(i)] = static_cast<PointId>(code % n);
    code /= n;
  }
  return t;
}

const Triple& SubMoebiusMap::at(const Tuple4& t) const {
  const auto& e = entries_[code(t)];
  if (!e) {
    throw PreconditionError("no value stored for tuple " + render(labels_, t));
  }
  return *e;
}

void SubMoebiusMap::set(const Tuple4& t, Triple value) {
  if (!is_admissible(t)) {
    throw PreconditionError("tuple " + render(labels_, t) + " is not admissible");
  }
  for (const auto& c : value.coords) {
    if (c.scale() != scale_) {
      throw ScaleMismatchError("value backing differs from the table backing");
    }
  }
  entries_[code(t)] = std::move(value);
}

std::size_t SubMoebiusMap::missing_count() const {
  std::size_t missing = 0;
  for (const auto& t : admissible_tuples()) {
    missing += entries_[code(t)] ? 0 : 1;
  }
  return missing;
}

std::size_t SubMoebiusMap::complete_by_equivariance() {
  std::vector<bool> present(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    present[i] = entries_[i].has_value();
  }
  std::size_t filled = 0;
  for (const auto& p : admissible_tuples()) {
    const std::size_t pc = code(p);
    if (present[pc]) {
      continue;
    }
    // p = pi r for the stored r = pi^-1 p, hence M(p) = sign(pi) phi(pi) M(r).
    for (const auto& g : signed_elements()) {
      const Tuple4 r = act_on_tuple(g.perm.inverse(), p);
      const std::size_t rc = code(r);
      if (present[rc]) {
        entries_[pc] = signed_permute(g.image, g.sign, *entries_[rc]);
        ++filled;
        break;
      }
    }
  }
  return filled;
}

SubMoebiusMap moebius_of(const SemiMetricSpace& space, unsigned jobs) {
  SubMoebiusMap map(space.labels(), space.scale());
  const auto& tuples = map.admissible_tuples();
  using Chunk = std::vector<std::pair<std::size_t, Triple>>;
  auto chunks = parallel_chunks<Chunk>(tuples.size(), jobs, [&](std::size_t b, std::size_t e) {
    Chunk out;
    out.reserve(e - b);
    for (std::size_t i = b; i < e; ++i) {
      out.emplace_back(i, moebius_value(space, tuples[i]).coords());
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

AxiomReport check_axioms(const SubMoebiusMap& map, unsigned jobs, std::size_t max_listed) {
  const auto& tuples = map.admissible_tuples();
  struct Chunk {
    std::size_t count = 0;
    std::vector<AxiomViolation> listed;
  };
  auto key = [&map](const AxiomViolation& v) {
    return std::make_tuple(v.axiom, map.code(v.tuple), v.perm ? v.perm->rank() : 0);
  };
  auto trim = [&](std::vector<AxiomViolation>& list) {
    std::sort(list.begin(), list.end(),
              [&](const AxiomViolation& a, const AxiomViolation& b) { return key(a) < key(b); });
    if (list.size() > max_listed) {
      list.resize(max_listed);
    }
  };

  auto chunks = parallel_chunks<Chunk>(tuples.size(), jobs, [&](std::size_t b, std::size_t e) {
    Chunk out;
    auto report = [&](AxiomViolation v) {
      ++out.count;
      out.listed.push_back(std::move(v));
    };
    for (std::size_t i = b; i < e; ++i) {
      const Tuple4& p = tuples[i];
      const auto& value = map.entry(p);
      if (!value) {
        report({"coverage", p, std::nullopt, std::nullopt, std::nullopt,
                "no value for admissible tuple " + render(map.labels(), p)});
        continue;
      }
      const auto pattern = degenerate_pattern(p);
      const auto kind = classify(*value);

      // (b): regular exactly on nondegenerate tuples.
      if (!kind) {
        report({"b", p, std::nullopt, std::nullopt, *value, "value is not a point of extended L4"});
      } else if (!pattern && *kind != L4Kind::regular) {
        report({"b", p, std::nullopt, std::nullopt, *value,
                "nondegenerate tuple has a degenerate value"});
      } else if (pattern && *kind == L4Kind::regular) {
        report({"b", p, std::nullopt, pinned_pattern(*pattern, map.scale()), *value,
                "degenerate tuple has a regular value"});
      }

      // (c) and the six degenerate equalities it implies together with (a).
      if (pattern) {
        const Triple expected = pinned_pattern(*pattern, map.scale());
        if (*value != expected) {
          const bool normalization = p[0] == p[1];
          report({normalization ? "c" : "degenerate", p, std::nullopt, expected, *value,
                  std::string("expected the ") + std::string(to_string(*pattern)) + " pattern"});
        }
      }

      // (a): M(pi P) = sign(pi) phi(pi) M(P) for every pi.
      for (const auto& g : signed_elements()) {
        if (g.perm == Perm4::identity()) {
          continue;
        }
        const Tuple4 q = act_on_tuple(g.perm, p);
        const auto& image = map.entry(q);
        if (!image) {
          continue;  // reported as coverage on q
        }
        Triple expected = signed_permute(g.image, g.sign, *value);
        if (*image != expected) {
          report({"a", p, g.perm, std::move(expected), *image,
                  "M(" + g.perm.to_string() + " P) != sign * phi * M(P)"});
        }
      }
    }
    trim(out.listed);
    return out;
  });

  AxiomReport report;
  report.checked_tuples = tuples.size();
  for (auto& chunk : chunks) {
    report.violation_count += chunk.count;
    for (auto& v : chunk.listed) {
      report.violations.push_back(std::move(v));
    }
  }
  trim(report.violations);
  return report;
}

}  // namespace moebius
