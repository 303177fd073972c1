#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lightnet/quasigroup.hpp"

namespace lightnet {

using Block = std::vector<int>;
using Permutation = std::vector<int>;

/// Raised when a structure fails an invariant that the library itself should
/// have maintained.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Simple point-line incidence structure on points 0..num_points-1.
/// Blocks are stored sorted, in lexicographic order.
class IncidenceStructure {
 public:
  IncidenceStructure() = default;

  IncidenceStructure(std::size_t num_points, std::vector<Block> blocks) : num_points_(num_points) {
    for (auto& b : blocks) {
      std::sort(b.begin(), b.end());
      if (b.size() < 3) throw std::invalid_argument("IncidenceStructure: block with fewer than 3 points");
      if (std::adjacent_find(b.begin(), b.end()) != b.end()) {
        throw std::invalid_argument("IncidenceStructure: repeated point in block");
      }
      if (b.front() < 0 || static_cast<std::size_t>(b.back()) >= num_points) {
        throw std::invalid_argument("IncidenceStructure: point out of range");
      }
    }
    std::sort(blocks.begin(), blocks.end());
    if (std::adjacent_find(blocks.begin(), blocks.end()) != blocks.end()) {
      throw std::invalid_argument("IncidenceStructure: repeated block");
    }
    blocks_ = std::move(blocks);
  }

  std::size_t num_points() const { return num_points_; }
  const std::vector<Block>& blocks() const { return blocks_; }

  bool has_block(const Block& b) const {
    Block s = b;
    std::sort(s.begin(), s.end());
    return std::binary_search(blocks_.begin(), blocks_.end(), s);
  }

  /// Image under a point permutation; perm[p] is the new index of p.
  IncidenceStructure relabeled(const Permutation& perm) const {
    if (perm.size() != num_points_) throw std::invalid_argument("relabeled: permutation size mismatch");
    std::vector<Block> out;
    out.reserve(blocks_.size());
    for (const auto& b : blocks_) {
      Block nb;
      for (int p : b) nb.push_back(perm[static_cast<std::size_t>(p)]);
      out.push_back(std::move(nb));
    }
    return IncidenceStructure(num_points_, std::move(out));
  }

  friend bool operator==(const IncidenceStructure&, const IncidenceStructure&) = default;

 private:
  std::size_t num_points_ = 0;
  std::vector<Block> blocks_;
};

/// Source data of a constructed multinet.
struct Labeling {
  LatinSquare square;
  std::optional<SubsquareTriple> superline;
};

/// Light dual multinet of order n on 3n points with parts
/// P1 = [0, n), P2 = [n, 2n), P3 = [2n, 3n).
class Multinet {
 public:
  Multinet(std::size_t n, IncidenceStructure base, std::optional<Labeling> labeling = std::nullopt,
           std::string name = {}, std::vector<std::string> quasigroups = {});

  std::size_t order() const { return n_; }
  const IncidenceStructure& base() const { return base_; }
  const std::vector<Block>& blocks() const { return base_.blocks(); }
  std::size_t num_points() const { return base_.num_points(); }
  const std::optional<Labeling>& labeling() const { return labeling_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& quasigroups() const { return quasigroups_; }

  /// Part index 0, 1 or 2 of a point.
  int part_of(int p) const { return p / static_cast<int>(n_); }

 private:
  std::size_t n_;
  IncidenceStructure base_;
  std::optional<Labeling> labeling_;
  std::string name_;
  std::vector<std::string> quasigroups_;
};

/// Sizes of the intersections of a block with the three parts.
inline std::array<std::size_t, 3> traces(std::size_t n, const Block& b) {
  std::array<std::size_t, 3> t{0, 0, 0};
  for (int p : b) ++t[static_cast<std::size_t>(p) / n];
  return t;
}

/// Violations of the multinet axioms, empty when none. With a labeling the
/// cover condition is checked through the quasigroup; without one, every pair
/// of points from different parts must lie on a block.
inline std::vector<std::string> multinet_violations(std::size_t n, const IncidenceStructure& s,
                                                    const std::optional<Labeling>& labeling) {
  std::vector<std::string> out;
  const std::size_t np = s.num_points();
  if (n == 0 || np != 3 * n) {
    out.push_back("point count is not 3n");
    return out;
  }
  if (s.blocks().size() <= 1) out.push_back("fewer than two blocks");
  std::vector<int> line(np * np, -1);
  for (std::size_t bi = 0; bi < s.blocks().size(); ++bi) {
    const auto& b = s.blocks()[bi];
    const auto t = traces(n, b);
    if (t[0] != t[1] || t[1] != t[2]) out.push_back("block " + std::to_string(bi) + " has unequal traces");
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        auto& cell = line[static_cast<std::size_t>(b[i]) * np + static_cast<std::size_t>(b[j])];
        if (cell != -1) {
          out.push_back("points " + std::to_string(b[i]) + "," + std::to_string(b[j]) + " lie on two blocks");
        }
        cell = static_cast<int>(bi);
      }
    }
  }
  auto block_of = [&](int p, int q) { return line[static_cast<std::size_t>(std::min(p, q)) * np + static_cast<std::size_t>(std::max(p, q))]; };
  const int ni = static_cast<int>(n);
  if (labeling) {
    const auto& q = labeling->square;
    if (q.order() != n) {
      out.push_back("labeling quasigroup has wrong order");
      return out;
    }
    for (int x = 0; x < ni; ++x) {
      for (int y = 0; y < ni; ++y) {
        const int b = block_of(x, ni + y);
        const int c = 2 * ni + q.multiply(x, y);
        if (b == -1 || b != block_of(x, c)) {
          out.push_back("no block through (" + std::to_string(x) + "," + std::to_string(y) + ",xy)");
        }
      }
    }
  } else {
    for (int p = 0; p < 2 * ni; ++p) {
      for (int r = std::max(p + 1, (p / ni + 1) * ni); r < 3 * ni; ++r) {
        if (block_of(p, r) == -1) out.push_back("points " + std::to_string(p) + "," + std::to_string(r) + " share no block");
      }
    }
  }
  return out;
}

inline Multinet::Multinet(std::size_t n, IncidenceStructure base, std::optional<Labeling> labeling, std::string name,
                          std::vector<std::string> quasigroups)
    : n_(n),
      base_(std::move(base)),
      labeling_(std::move(labeling)),
      name_(std::move(name)),
      quasigroups_(std::move(quasigroups)) {
  const auto v = multinet_violations(n_, base_, labeling_);
  if (!v.empty()) throw std::invalid_argument("Multinet: " + v.front());
}

/// Blocks {x, n+y, 2n+x*y}, emitted with y outer and x inner.
inline Multinet dual_3net(const LatinSquare& q) {
  const int n = static_cast<int>(q.order());
  std::vector<Block> blocks;
  blocks.reserve(q.order() * q.order());
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) blocks.push_back({x, n + y, 2 * n + q.multiply(x, y)});
  }
  std::vector<std::string> names;
  if (!q.name().empty()) names.push_back(q.name());
  return Multinet(q.order(), IncidenceStructure(3 * q.order(), std::move(blocks)), Labeling{q, std::nullopt}, q.name(),
                  names);
}

/// The dual 3-net of q with the r^2 lines inside the subsquare s replaced by
/// their union.
inline Multinet multinet_with_superline(const LatinSquare& q, const SubsquareTriple& s) {
  if (!is_subsquare(q, s)) throw std::invalid_argument("multinet_with_superline: not a subsquare");
  if (s.order() < 2 || s.order() >= q.order()) {
    throw std::invalid_argument("multinet_with_superline: subsquare order must be in [2, n)");
  }
  const int n = static_cast<int>(q.order());
  auto in = [](const std::vector<Element>& v, int x) { return std::binary_search(v.begin(), v.end(), x); };
  std::vector<Block> blocks;
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      if (in(s.s1, x) && in(s.s2, y)) continue;
      blocks.push_back({x, n + y, 2 * n + q.multiply(x, y)});
    }
  }
  blocks.push_back(s.points(q.order()));
  std::vector<std::string> names;
  if (!q.name().empty()) names.push_back(q.name());
  return Multinet(q.order(), IncidenceStructure(3 * q.order(), std::move(blocks)), Labeling{q, s}, q.name(), names);
}

inline std::size_t line_length(const Multinet& m, const Block& block) {
  if (!m.base().has_block(block)) throw std::invalid_argument("line_length: not a block");
  const auto t = traces(m.order(), block);
  if (t[0] != t[1] || t[1] != t[2]) throw InvariantViolation("line_length: traces of unequal size");
  return t[0];
}

inline std::size_t longest_line_length(const Multinet& m) {
  std::size_t r = 0;
  for (const auto& b : m.blocks()) r = std::max(r, line_length(m, b));
  return r;
}

/// Whether the superline {0..r-1, n..n+r-1, 2n..2n+r-1} is a block and the
/// triples {0, n+j, 2n+j}, {j, n, 2n+j} are blocks for r <= j < n.
inline bool is_well_indexed(const Multinet& m, std::size_t r) {
  const int n = static_cast<int>(m.order());
  const int ri = static_cast<int>(r);
  if (ri < 1 || ri >= n) return false;
  Block sl;
  for (int part = 0; part < 3; ++part) {
    for (int i = 0; i < ri; ++i) sl.push_back(part * n + i);
  }
  if (!m.base().has_block(sl)) return false;
  for (int j = ri; j < n; ++j) {
    if (!m.base().has_block({0, n + j, 2 * n + j}) || !m.base().has_block({j, n, 2 * n + j})) return false;
  }
  return true;
}

/// Relabeling that puts the last longest block first in each part and aligns
/// the remaining points along the lines through the first superline points.
/// The labeling is dropped; names are kept.
inline Multinet well_index(const Multinet& m) {
  const int n = static_cast<int>(m.order());
  const auto& blocks = m.blocks();
  std::size_t maxsize = 0;
  for (const auto& b : blocks) maxsize = std::max(maxsize, b.size());
  if (maxsize < 6) throw std::invalid_argument("well_index: no block of length at least 2");
  const int r = static_cast<int>(maxsize / 3);
  Block sl;
  for (const auto& b : blocks) {
    if (b.size() == maxsize) sl = b;
  }
  if (line_length(m, sl) != static_cast<std::size_t>(r)) throw InvariantViolation("well_index: malformed superline");

  const std::size_t np = m.num_points();
  std::vector<int> line(np * np, -1);
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    for (int p : blocks[bi]) {
      for (int q : blocks[bi]) {
        if (p != q) line[static_cast<std::size_t>(p) * np + static_cast<std::size_t>(q)] = static_cast<int>(bi);
      }
    }
  }
  auto third = [&](int p, int q, int part) {
    const int bi = line[static_cast<std::size_t>(p) * np + static_cast<std::size_t>(q)];
    if (bi < 0) throw InvariantViolation("well_index: pair on no block");
    const auto& b = blocks[static_cast<std::size_t>(bi)];
    if (b.size() != 3) throw InvariantViolation("well_index: expected a short line");
    for (int x : b) {
      if (x / n == part) return x;
    }
    throw InvariantViolation("well_index: short line misses a part");
  };

  std::vector<int> a(np, -1);
  for (int i = 0; i < r; ++i) {
    a[static_cast<std::size_t>(i)] = sl[static_cast<std::size_t>(i)];
    a[static_cast<std::size_t>(n + i)] = sl[static_cast<std::size_t>(r + i)];
    a[static_cast<std::size_t>(2 * n + i)] = sl[static_cast<std::size_t>(2 * r + i)];
  }
  {
    int k = n + r;
    for (int x = n; x < 2 * n; ++x) {
      if (!std::binary_search(sl.begin(), sl.end(), x)) a[static_cast<std::size_t>(k++)] = x;
    }
  }
  for (int j = r; j < n; ++j) a[static_cast<std::size_t>(2 * n + j)] = third(a[0], a[static_cast<std::size_t>(n + j)], 2);
  for (int j = r; j < n; ++j) {
    a[static_cast<std::size_t>(j)] = third(a[static_cast<std::size_t>(n)], a[static_cast<std::size_t>(2 * n + j)], 0);
  }
  Permutation inv(np, -1);
  for (std::size_t k = 0; k < np; ++k) {
    if (a[k] < 0 || inv[static_cast<std::size_t>(a[k])] != -1) throw InvariantViolation("well_index: not a bijection");
    inv[static_cast<std::size_t>(a[k])] = static_cast<int>(k);
  }
  return Multinet(m.order(), m.base().relabeled(inv), std::nullopt, m.name(), m.quasigroups());
}

/// Witness of an isomorphism: mapping[p] is the image of point p.
struct IsoCertificate {
  std::optional<Permutation> mapping;
  explicit operator bool() const { return mapping.has_value(); }
};

namespace detail {

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Point and point-pair invariants used to prune the search.
struct IncidenceProfile {
  explicit IncidenceProfile(const IncidenceStructure& s) : n(s.num_points()), blocks(&s.blocks()) {
    point_sig.assign(n, 0);
    pair_key.assign(n * n, 0);
    point_blocks.assign(n, {});
    for (std::size_t bi = 0; bi < s.blocks().size(); ++bi) {
      const auto& b = s.blocks()[bi];
      const std::uint64_t h = mix64(b.size());
      for (int p : b) {
        point_sig[static_cast<std::size_t>(p)] += h;
        point_blocks[static_cast<std::size_t>(p)].push_back(bi);
        for (int q : b) {
          if (p != q) pair_key[static_cast<std::size_t>(p) * n + static_cast<std::size_t>(q)] += h;
        }
      }
    }
    for (std::size_t p = 0; p < n; ++p) point_sig[p] = mix64(point_sig[p] ^ (point_blocks[p].size() << 48));
  }

  std::uint64_t pair(int p, int q) const { return pair_key[static_cast<std::size_t>(p) * n + static_cast<std::size_t>(q)]; }

  std::size_t n;
  const std::vector<Block>* blocks;
  std::vector<std::uint64_t> point_sig;
  std::vector<std::uint64_t> pair_key;
  std::vector<std::vector<std::size_t>> point_blocks;
};

/// Backtracking search for a block-preserving bijection a -> b that extends
/// the given partial assignment (forced[p] == -1 means free).
class IsoSearch {
 public:
  IsoSearch(const IncidenceStructure& a, const IncidenceStructure& b, const IncidenceProfile& pa,
            const IncidenceProfile& pb, const std::vector<int>& order)
      : a_(a), b_(b), pa_(pa), pb_(pb), order_(order) {
    const std::size_t n = a.num_points();
    std::vector<std::size_t> position(n);
    for (std::size_t k = 0; k < order_.size(); ++k) position[static_cast<std::size_t>(order_[k])] = k;
    completed_.assign(n, {});
    for (std::size_t bi = 0; bi < a.blocks().size(); ++bi) {
      std::size_t last = 0;
      for (int p : a.blocks()[bi]) last = std::max(last, position[static_cast<std::size_t>(p)]);
      completed_[last].push_back(bi);
    }
  }

  std::optional<Permutation> run(const std::vector<int>& forced) {
    const std::size_t n = a_.num_points();
    image_.assign(n, -1);
    used_.assign(n, false);
    forced_ = &forced;
    if (extend(0)) return image_;
    return std::nullopt;
  }

 private:
  bool block_ok(std::size_t bi) const {
    Block mapped;
    for (int p : a_.blocks()[bi]) mapped.push_back(image_[static_cast<std::size_t>(p)]);
    std::sort(mapped.begin(), mapped.end());
    return std::binary_search(b_.blocks().begin(), b_.blocks().end(), mapped);
  }

  bool try_candidate(std::size_t k, int c) {
    const int p = order_[k];
    if (used_[static_cast<std::size_t>(c)] || pa_.point_sig[static_cast<std::size_t>(p)] != pb_.point_sig[static_cast<std::size_t>(c)]) {
      return false;
    }
    for (std::size_t i = 0; i < k; ++i) {
      const int q = order_[i];
      if (pa_.pair(p, q) != pb_.pair(c, image_[static_cast<std::size_t>(q)])) return false;
    }
    image_[static_cast<std::size_t>(p)] = c;
    used_[static_cast<std::size_t>(c)] = true;
    bool ok = true;
    for (auto bi : completed_[k]) {
      if (!block_ok(bi)) {
        ok = false;
        break;
      }
    }
    if (ok && extend(k + 1)) return true;
    image_[static_cast<std::size_t>(p)] = -1;
    used_[static_cast<std::size_t>(c)] = false;
    return false;
  }

  bool extend(std::size_t k) {
    if (k == order_.size()) return true;
    const int p = order_[k];
    const int f = (*forced_)[static_cast<std::size_t>(p)];
    if (f >= 0) return try_candidate(k, f);
    for (int c = 0; c < static_cast<int>(b_.num_points()); ++c) {
      if (try_candidate(k, c)) return true;
    }
    return false;
  }

  const IncidenceStructure& a_;
  const IncidenceStructure& b_;
  const IncidenceProfile& pa_;
  const IncidenceProfile& pb_;
  const std::vector<int>& order_;
  std::vector<std::vector<std::size_t>> completed_;
  const std::vector<int>* forced_ = nullptr;
  Permutation image_;
  std::vector<bool> used_;
};

/// Points listed first in `prefix`, then greedily by the number of
/// invariant-bearing pairs with points already listed.
inline std::vector<int> search_order(const IncidenceProfile& p, const std::vector<int>& prefix) {
  const std::size_t n = p.n;
  std::vector<int> order = prefix;
  std::vector<bool> taken(n, false);
  for (int x : prefix) taken[static_cast<std::size_t>(x)] = true;
  std::vector<std::size_t> links(n, 0);
  for (int x : prefix) {
    for (std::size_t y = 0; y < n; ++y) links[y] += p.pair(x, static_cast<int>(y)) != 0;
  }
  if (order.empty() && n > 0) {
    // Start from the rarest point signature.
    std::size_t best = 0;
    std::size_t best_count = n + 1;
    for (std::size_t x = 0; x < n; ++x) {
      const auto c = static_cast<std::size_t>(std::count(p.point_sig.begin(), p.point_sig.end(), p.point_sig[x]));
      if (c < best_count) {
        best = x;
        best_count = c;
      }
    }
    order.push_back(static_cast<int>(best));
    taken[best] = true;
    for (std::size_t y = 0; y < n; ++y) links[y] += p.pair(static_cast<int>(best), static_cast<int>(y)) != 0;
  }
  while (order.size() < n) {
    std::size_t best = n;
    for (std::size_t x = 0; x < n; ++x) {
      if (!taken[x] && (best == n || links[x] > links[best])) best = x;
    }
    order.push_back(static_cast<int>(best));
    taken[best] = true;
    for (std::size_t y = 0; y < n; ++y) links[y] += p.pair(static_cast<int>(best), static_cast<int>(y)) != 0;
  }
  return order;
}

inline bool same_shape(const IncidenceStructure& a, const IncidenceStructure& b, const IncidenceProfile& pa,
                       const IncidenceProfile& pb) {
  if (a.num_points() != b.num_points() || a.blocks().size() != b.blocks().size()) return false;
  auto sa = pa.point_sig;
  auto sb = pb.point_sig;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return sa == sb;
}

}  // namespace detail

inline IsoCertificate is_isomorphic(const IncidenceStructure& a, const IncidenceStructure& b) {
  const detail::IncidenceProfile pa(a);
  const detail::IncidenceProfile pb(b);
  if (!detail::same_shape(a, b, pa, pb)) return {};
  const auto order = detail::search_order(pa, {});
  detail::IsoSearch search(a, b, pa, pb, order);
  const std::vector<int> forced(a.num_points(), -1);
  return {search.run(forced)};
}

inline IsoCertificate is_isomorphic(const Multinet& a, const Multinet& b) { return is_isomorphic(a.base(), b.base()); }

/// Checks that `mapping` carries the blocks of a bijectively onto those of b.
inline bool is_isomorphism(const IncidenceStructure& a, const IncidenceStructure& b, const Permutation& mapping) {
  if (a.num_points() != b.num_points() || a.blocks().size() != b.blocks().size()) return false;
  if (!is_permutation_of_range(mapping, a.num_points())) return false;
  return a.relabeled(mapping) == b;
}

struct AutomorphismGroup {
  std::vector<Permutation> generators;
  std::uint64_t order = 1;
};

/// Generators and order through a stabilizer chain: at each base point the
/// orbit under the pointwise stabilizer of the earlier base points is found
/// by direct search.
inline AutomorphismGroup automorphism_group(const IncidenceStructure& s) {
  const std::size_t n = s.num_points();
  const detail::IncidenceProfile prof(s);
  const auto base = detail::search_order(prof, {});
  AutomorphismGroup g;
  std::vector<int> fixed;
  for (int b : base) {
    // Searching with the fixed prefix first keeps pruning effective.
    std::vector<int> prefix = fixed;
    prefix.push_back(b);
    const auto order = detail::search_order(prof, prefix);
    detail::IsoSearch search(s, s, prof, prof, order);
    std::vector<int> forced(n, -1);
    for (int f : fixed) forced[static_cast<std::size_t>(f)] = f;

    std::vector<bool> in_orbit(n, false);
    std::vector<int> orbit{b};
    in_orbit[static_cast<std::size_t>(b)] = true;
    std::vector<Permutation> level;
    for (int c = 0; c < static_cast<int>(n); ++c) {
      if (in_orbit[static_cast<std::size_t>(c)] || prof.point_sig[static_cast<std::size_t>(c)] != prof.point_sig[static_cast<std::size_t>(b)]) {
        continue;
      }
      forced[static_cast<std::size_t>(b)] = c;
      auto found = search.run(forced);
      if (!found) continue;
      level.push_back(*found);
      g.generators.push_back(*found);
      for (std::size_t i = 0; i < orbit.size(); ++i) {
        for (const auto& h : level) {
          const int img = h[static_cast<std::size_t>(orbit[i])];
          if (!in_orbit[static_cast<std::size_t>(img)]) {
            in_orbit[static_cast<std::size_t>(img)] = true;
            orbit.push_back(img);
          }
        }
      }
    }
    if (__builtin_mul_overflow(g.order, static_cast<std::uint64_t>(orbit.size()), &g.order)) {
      throw std::overflow_error("automorphism_group: order exceeds 64 bits");
    }
    fixed.push_back(b);
  }
  return g;
}

inline AutomorphismGroup automorphism_group(const Multinet& m) { return automorphism_group(m.base()); }

}  // namespace lightnet
