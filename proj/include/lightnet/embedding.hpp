#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lightnet/incidence.hpp"
#include "lightnet/polyring/factor.hpp"
#include "lightnet/polyring/ideal.hpp"
#include "lightnet/polyring/minimal_primes.hpp"
#include "lightnet/polyring/polynomial.hpp"

namespace lightnet {

using Point3 = std::array<Polynomial, 3>;

/// Homogeneous polynomial coordinates for each point of an incidence structure.
class PreEmbedding {
 public:
  PreEmbedding(std::size_t arity, std::vector<Point3> points) : arity_(arity), points_(std::move(points)) {
    for (auto& p : points_) {
      for (auto& c : p) {
        if (c.used_arity() > arity_) throw std::invalid_argument("PreEmbedding: coordinate outside ring");
        c = c.with_arity(arity_);
      }
      const Polynomial g = polynomial_gcd(polynomial_gcd(p[0], p[1]), p[2]);
      if (!g.is_constant()) throw std::invalid_argument("PreEmbedding: coordinates share a nonunit factor");
    }
  }

  std::size_t arity() const { return arity_; }
  std::size_t size() const { return points_.size(); }
  const Point3& operator[](std::size_t p) const { return points_.at(p); }
  const std::vector<Point3>& points() const { return points_; }

 private:
  std::size_t arity_;
  std::vector<Point3> points_;
};

namespace detail {

inline Point3 point(std::size_t arity, const std::array<int, 3>& spec) {
  // Nonnegative entries are constants; -k stands for the variable t_k.
  Point3 p{Polynomial(arity), Polynomial(arity), Polynomial(arity)};
  for (std::size_t i = 0; i < 3; ++i) {
    p[i] = spec[i] >= 0 ? Polynomial::constant(arity, spec[i])
                        : Polynomial::variable(arity, static_cast<std::size_t>(-spec[i] - 1));
  }
  return p;
}

}  // namespace detail

inline constexpr std::size_t kStandardArity = 17;

/// The 18 points over t1..t17 for a well-indexed order-6 multinet with a
/// superline of length 2. Points 15, 16, 17 reuse the x coordinate of
/// points 3, 4, 5 and the y coordinate of points 9, 10, 11.
inline PreEmbedding standard_preembedding() {
  const std::vector<std::array<int, 3>> spec{
      {1, 0, 0},     {1, -1, 0},    {-4, -5, 1},   {-6, -7, 1},   {-8, -9, 1},   {-10, -11, 1},
      {0, 1, 0},     {1, -2, 0},    {1, 0, 1},     {-12, -13, 1}, {-14, -15, 1}, {-16, -17, 1},
      {1, 1, 0},     {1, -3, 0},    {0, 0, 1},     {-6, -13, 1},  {-8, -15, 1},  {-10, -17, 1},
  };
  std::vector<Point3> pts;
  for (const auto& s : spec) pts.push_back(detail::point(kStandardArity, s));
  return PreEmbedding(kStandardArity, std::move(pts));
}

/// Checked variant: m must be a well-indexed order-6 multinet whose superline
/// has length 2.
inline PreEmbedding standard_preembedding(const Multinet& m) {
  if (m.order() != 6) throw std::invalid_argument("standard_preembedding: order must be 6");
  if (longest_line_length(m) != 2) throw std::invalid_argument("standard_preembedding: superline length must be 2");
  if (!is_well_indexed(m, 2)) throw std::invalid_argument("standard_preembedding: multinet is not well-indexed");
  return standard_preembedding();
}

/// Nine-point dual 3-net of Z3 with coordinates over t1..t13.
inline std::pair<IncidenceStructure, PreEmbedding> z3_example_preembedding() {
  constexpr std::size_t arity = 13;
  IncidenceStructure s(9, {{0, 3, 6}, {0, 4, 7}, {0, 5, 8}, {1, 3, 7}, {1, 4, 8}, {1, 5, 6}, {2, 3, 8}, {2, 4, 6}, {2, 5, 7}});
  const std::vector<std::array<int, 3>> spec{
      {1, 0, 0}, {-1, -2, -13},  {-3, -4, -13},   {0, 1, 0}, {-5, -6, -13},
      {-7, -8, -13}, {1, 1, 0},  {-9, -10, -13},  {-11, -12, -13},
  };
  std::vector<Point3> pts;
  for (const auto& p : spec) pts.push_back(detail::point(arity, p));
  return {std::move(s), PreEmbedding(arity, std::move(pts))};
}

/// Determinants of all collinear triples, identically zero ones dropped.
inline Ideal collinearity_ideal(const IncidenceStructure& s, const PreEmbedding& xi) {
  if (xi.size() != s.num_points()) throw std::invalid_argument("collinearity_ideal: point count mismatch");
  std::vector<Polynomial> eqs;
  for (const auto& b : s.blocks()) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        for (std::size_t k = j + 1; k < b.size(); ++k) {
          auto d = det3(xi[static_cast<std::size_t>(b[i])], xi[static_cast<std::size_t>(b[j])], xi[static_cast<std::size_t>(b[k])]);
          if (!d.is_zero()) eqs.push_back(std::move(d));
        }
      }
    }
  }
  return Ideal(xi.arity(), std::move(eqs));
}

/// Whether the points stay pairwise distinct and not all collinear modulo p.
/// Cross products are tested first.
inline bool is_admissible(const Ideal& p, const PreEmbedding& xi, Budget* budget = nullptr) {
  const auto& g = p.groebner_basis(MonomialOrder::degrevlex(), budget);
  if (g.size() == 1 && g.front().is_constant()) throw std::invalid_argument("is_admissible: unit ideal");
  const auto ord = MonomialOrder::degrevlex();
  auto vanishes = [&](const Polynomial& f) { return f.is_zero() || reduces_to_zero(f, g, ord, budget); };
  const std::size_t n = xi.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto c = cross(xi[a], xi[b]);
      if (vanishes(c[0]) && vanishes(c[1]) && vanishes(c[2])) return false;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        if (!vanishes(det3(xi[a], xi[b], xi[c]))) return true;
      }
    }
  }
  return false;
}

struct MergedBlock {
  enum class Kind { kWithinPart, kLongLine };
  std::vector<int> points;
  Kind kind;
  int part;           // 0, 1 or 2 for kWithinPart, else -1
  std::size_t length; // common trace size for kLongLine, else 0
};

/// Point sets forced collinear modulo p that are not blocks of m. Triples
/// with determinant in p are united while two sets share two points.
inline std::vector<MergedBlock> merged_blocks(const Multinet& m, const PreEmbedding& xi, const Ideal& p,
                                              Budget* budget = nullptr) {
  const std::size_t np = xi.size();
  if (np != m.num_points()) throw std::invalid_argument("merged_blocks: point count mismatch");
  const auto& g = p.groebner_basis(MonomialOrder::degrevlex(), budget);
  const auto ord = MonomialOrder::degrevlex();
  std::vector<std::vector<int>> sets;
  for (std::size_t a = 0; a < np; ++a) {
    for (std::size_t b = a + 1; b < np; ++b) {
      for (std::size_t c = b + 1; c < np; ++c) {
        const auto d = det3(xi[a], xi[b], xi[c]);
        if (d.is_zero() || reduces_to_zero(d, g, ord, budget)) {
          sets.push_back({static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)});
        }
      }
    }
  }
  auto shared = [](const std::vector<int>& x, const std::vector<int>& y) {
    std::size_t k = 0;
    for (int v : x) k += std::binary_search(y.begin(), y.end(), v) ? 1 : 0;
    return k;
  };
  for (std::size_t i = 0; i < sets.size();) {
    std::vector<std::size_t> hits;
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (shared(sets[i], sets[j]) > 1) hits.push_back(j);
    }
    if (hits.empty()) {
      ++i;
      continue;
    }
    for (auto it = hits.rbegin(); it != hits.rend(); ++it) {
      std::vector<int> u;
      std::set_union(sets[i].begin(), sets[i].end(), sets[*it].begin(), sets[*it].end(), std::back_inserter(u));
      sets[i] = std::move(u);
      sets.erase(sets.begin() + static_cast<std::ptrdiff_t>(*it));
    }
  }
  std::sort(sets.begin(), sets.end());

  const std::size_t n = m.order();
  std::vector<MergedBlock> out;
  for (auto& s : sets) {
    if (m.base().has_block(s)) continue;
    const auto t = traces(n, s);
    const int nonempty = (t[0] > 0) + (t[1] > 0) + (t[2] > 0);
    if (nonempty == 1) {
      const int part = t[0] > 0 ? 0 : (t[1] > 0 ? 1 : 2);
      out.push_back({std::move(s), MergedBlock::Kind::kWithinPart, part, 0});
    } else if (t[0] == t[1] && t[1] == t[2] && t[0] >= 2) {
      const std::size_t len = t[0];
      out.push_back({std::move(s), MergedBlock::Kind::kLongLine, -1, len});
    } else {
      throw InvariantViolation("merged_blocks: merged set with unequal traces");
    }
  }
  return out;
}

struct Component {
  Ideal prime;
  bool admissible;
  std::optional<int> dimension;
};

/// Minimal-prime candidates of a collinearity ideal, with the merged blocks of
/// the first admissible one.
struct ComponentReport {
  std::string multinet_id;
  std::vector<Component> components;
  std::optional<std::size_t> admissible_index;
  std::vector<MergedBlock> merged;

  std::size_t admissible_count() const {
    return static_cast<std::size_t>(
        std::count_if(components.begin(), components.end(), [](const Component& c) { return c.admissible; }));
  }
};

/// Collinearity ideal of m under xi, its minimal primes, their admissibility
/// and dimension, and the merged blocks of the admissible one.
inline ComponentReport analyze(const Multinet& m, const PreEmbedding& xi, Budget* budget = nullptr,
                               SplitProgressFn progress = {}) {
  ComponentReport out;
  out.multinet_id = m.name();
  for (auto& p : minimal_primes(collinearity_ideal(m.base(), xi), budget, std::move(progress))) {
    const bool adm = is_admissible(p, xi, budget);
    const int dim = krull_dimension(p, budget);
    out.components.push_back({std::move(p), adm, dim});
  }
  for (std::size_t k = 0; k < out.components.size(); ++k) {
    if (out.components[k].admissible) {
      out.admissible_index = k;
      break;
    }
  }
  if (out.admissible_index) out.merged = merged_blocks(m, xi, out.components[*out.admissible_index].prime, budget);
  return out;
}

/// Standard pre-embedding analysis of a well-indexed order-6 multinet.
inline ComponentReport analyze(const Multinet& m, Budget* budget = nullptr, SplitProgressFn progress = {}) {
  return analyze(m, standard_preembedding(m), budget, std::move(progress));
}

enum class Verdict { kEmbeds, kDoesNotEmbed };

/// Embeddable iff some component is admissible.
inline Verdict embedding_verdict(const ComponentReport& r) {
  return r.admissible_index ? Verdict::kEmbeds : Verdict::kDoesNotEmbed;
}

/// Merged blocks in the shape of a table row: new long lines, and the sizes of
/// within-part blocks per part in decreasing order.
struct MergedSummary {
  std::size_t long_lines = 0;
  std::array<std::vector<std::size_t>, 3> part_sizes;
  friend bool operator==(const MergedSummary&, const MergedSummary&) = default;
};

inline MergedSummary summarize(const std::vector<MergedBlock>& blocks) {
  MergedSummary s;
  for (const auto& b : blocks) {
    if (b.kind == MergedBlock::Kind::kLongLine) {
      ++s.long_lines;
    } else {
      s.part_sizes[static_cast<std::size_t>(b.part)].push_back(b.points.size());
    }
  }
  for (auto& v : s.part_sizes) std::sort(v.rbegin(), v.rend());
  return s;
}

}  // namespace lightnet
