#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lightnet {

using Element = int;

/// Finite quasigroup given by its Cayley table on {0, ..., n-1}.
/// Immutable; left and right division tables are built on construction.
class LatinSquare {
 public:
  LatinSquare() = default;

  /// `table[x][y]` is x*y, zero-based. Throws std::invalid_argument unless
  /// every row and column is a permutation.
  explicit LatinSquare(const std::vector<std::vector<Element>>& table, std::string name = {})
      : n_(table.size()), name_(std::move(name)) {
    if (n_ == 0) throw std::invalid_argument("LatinSquare: empty table");
    cells_.resize(n_ * n_);
    ldiv_.assign(n_ * n_, -1);
    rdiv_.assign(n_ * n_, -1);
    for (std::size_t x = 0; x < n_; ++x) {
      if (table[x].size() != n_) throw std::invalid_argument("LatinSquare: table is not square");
      for (std::size_t y = 0; y < n_; ++y) {
        const Element z = table[x][y];
        if (z < 0 || static_cast<std::size_t>(z) >= n_) {
          throw std::invalid_argument("LatinSquare: entry out of range");
        }
        cells_[x * n_ + y] = z;
        auto& l = ldiv_[x * n_ + static_cast<std::size_t>(z)];
        auto& r = rdiv_[static_cast<std::size_t>(z) * n_ + y];
        if (l != -1) throw std::invalid_argument("LatinSquare: row " + std::to_string(x) + " repeats an entry");
        if (r != -1) throw std::invalid_argument("LatinSquare: column " + std::to_string(y) + " repeats an entry");
        l = static_cast<Element>(y);
        r = static_cast<Element>(x);
      }
    }
  }

  /// Builds from a one-based table such as the catalog listings.
  static LatinSquare from_one_based(const std::vector<std::vector<Element>>& table, std::string name = {}) {
    auto t = table;
    for (auto& row : t) {
      for (auto& v : row) --v;
    }
    return LatinSquare(t, std::move(name));
  }

  std::size_t order() const { return n_; }
  const std::string& name() const { return name_; }

  Element multiply(Element x, Element y) const {
    check(x);
    check(y);
    return cells_[idx(x) * n_ + idx(y)];
  }
  /// The unique y with x*y = z.
  Element left_divide(Element x, Element z) const {
    check(x);
    check(z);
    return ldiv_[idx(x) * n_ + idx(z)];
  }
  /// The unique x with x*y = z.
  Element right_divide(Element z, Element y) const {
    check(z);
    check(y);
    return rdiv_[idx(z) * n_ + idx(y)];
  }

  std::vector<std::vector<Element>> table() const {
    std::vector<std::vector<Element>> t(n_, std::vector<Element>(n_));
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) t[x][y] = cells_[x * n_ + y];
    }
    return t;
  }

  /// Two-sided identity, if any.
  std::optional<Element> unit() const {
    for (std::size_t e = 0; e < n_; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < n_ && ok; ++x) {
        ok = cells_[e * n_ + x] == static_cast<Element>(x) && cells_[x * n_ + e] == static_cast<Element>(x);
      }
      if (ok) return static_cast<Element>(e);
    }
    return std::nullopt;
  }

  /// Tables are compared; names are ignored.
  friend bool operator==(const LatinSquare& a, const LatinSquare& b) { return a.n_ == b.n_ && a.cells_ == b.cells_; }

 private:
  void check(Element x) const {
    if (x < 0 || static_cast<std::size_t>(x) >= n_) throw std::out_of_range("LatinSquare: element out of range");
  }
  static std::size_t idx(Element x) { return static_cast<std::size_t>(x); }

  std::size_t n_ = 0;
  std::vector<Element> cells_;
  std::vector<Element> ldiv_;
  std::vector<Element> rdiv_;
  std::string name_;
};

inline Element multiply(const LatinSquare& q, Element x, Element y) { return q.multiply(x, y); }
inline Element left_divide(const LatinSquare& q, Element x, Element z) { return q.left_divide(x, z); }
inline Element right_divide(const LatinSquare& q, Element z, Element y) { return q.right_divide(z, y); }

/// Permutation of the three operand roles, zero-based: sigma[i] is the image of i.
using RolePermutation = std::array<int, 3>;

inline constexpr RolePermutation kIdentityRoles{0, 1, 2};

/// (a * b)(i) = a(b(i)).
inline RolePermutation compose(const RolePermutation& a, const RolePermutation& b) {
  return {a[static_cast<std::size_t>(b[0])], a[static_cast<std::size_t>(b[1])], a[static_cast<std::size_t>(b[2])]};
}

inline RolePermutation inverse(const RolePermutation& s) {
  RolePermutation r{};
  for (int i = 0; i < 3; ++i) r[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])] = i;
  return r;
}

inline bool is_role_permutation(const RolePermutation& s) {
  auto t = s;
  std::sort(t.begin(), t.end());
  return t == kIdentityRoles;
}

/// The sigma-conjugate: x1 o x2 = x3 iff x_sigma(1) * x_sigma(2) = x_sigma(3).
inline LatinSquare conjugate(const LatinSquare& q, const RolePermutation& sigma) {
  if (!is_role_permutation(sigma)) throw std::invalid_argument("conjugate: not a permutation of {0,1,2}");
  const auto n = static_cast<Element>(q.order());
  std::vector<std::vector<Element>> t(q.order(), std::vector<Element>(q.order()));
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const std::array<Element, 3> triple{a, b, q.multiply(a, b)};
      std::array<Element, 3> x{};
      for (std::size_t k = 0; k < 3; ++k) x[static_cast<std::size_t>(sigma[k])] = triple[k];
      t[static_cast<std::size_t>(x[0])][static_cast<std::size_t>(x[1])] = x[2];
    }
  }
  return LatinSquare(t, q.name());
}

/// Quadruple (sigma, gamma1, gamma2, gamma3) carrying Q onto R by
/// gamma1(x1) o gamma2(x2) = gamma3(x3) iff x_sigma(1) * x_sigma(2) = x_sigma(3).
struct Isostrophism {
  RolePermutation sigma = kIdentityRoles;
  std::vector<Element> gamma1;
  std::vector<Element> gamma2;
  std::vector<Element> gamma3;
};

inline bool is_permutation_of_range(const std::vector<Element>& g, std::size_t n) {
  if (g.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (auto v : g) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

/// Image of q under an isostrophism.
inline LatinSquare apply(const Isostrophism& iso, const LatinSquare& q) {
  const std::size_t n = q.order();
  if (!is_permutation_of_range(iso.gamma1, n) || !is_permutation_of_range(iso.gamma2, n) ||
      !is_permutation_of_range(iso.gamma3, n)) {
    throw std::invalid_argument("Isostrophism: gamma maps must be permutations");
  }
  const LatinSquare c = conjugate(q, iso.sigma);
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto z = static_cast<std::size_t>(c.multiply(static_cast<Element>(x), static_cast<Element>(y)));
      t[static_cast<std::size_t>(iso.gamma1[x])][static_cast<std::size_t>(iso.gamma2[y])] = iso.gamma3[z];
    }
  }
  return LatinSquare(t, q.name());
}

/// Principal loop isotope x o y = (x/u) * (v\y); its unit is v*u.
inline LatinSquare principal_isotope(const LatinSquare& q, Element u, Element v) {
  const auto n = static_cast<Element>(q.order());
  std::vector<std::vector<Element>> t(q.order(), std::vector<Element>(q.order()));
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = q.multiply(q.right_divide(x, u), q.left_divide(v, y));
    }
  }
  return LatinSquare(t, q.name());
}

/// Subsquare (S1, S2, S3): S1*S2 in S3, S1\S3 in S2, S3/S2 in S1.
/// Sets are sorted; all three have the same size, the order.
struct SubsquareTriple {
  std::vector<Element> s1;
  std::vector<Element> s2;
  std::vector<Element> s3;

  std::size_t order() const { return s1.size(); }

  /// Point indices in a three-part structure with parts of size n.
  std::vector<int> points(std::size_t n) const {
    std::vector<int> p;
    p.reserve(3 * s1.size());
    for (auto x : s1) p.push_back(x);
    for (auto x : s2) p.push_back(static_cast<int>(n) + x);
    for (auto x : s3) p.push_back(2 * static_cast<int>(n) + x);
    return p;
  }

  friend bool operator==(const SubsquareTriple&, const SubsquareTriple&) = default;
};

inline bool is_subsquare(const LatinSquare& q, const SubsquareTriple& s) {
  if (s.s1.size() != s.s2.size() || s.s2.size() != s.s3.size()) return false;
  auto in = [](const std::vector<Element>& v, Element x) { return std::binary_search(v.begin(), v.end(), x); };
  for (auto x : s.s1) {
    for (auto y : s.s2) {
      if (!in(s.s3, q.multiply(x, y))) return false;
    }
    for (auto z : s.s3) {
      if (!in(s.s2, q.left_divide(x, z))) return false;
    }
  }
  for (auto z : s.s3) {
    for (auto y : s.s2) {
      if (!in(s.s1, q.right_divide(z, y))) return false;
    }
  }
  return true;
}

/// Smallest subsquare containing (u1, u2, u3), by closing under products and
/// both divisions. At least two of the closed sets must be nonempty (or all
/// empty); otherwise the sizes cannot agree and std::invalid_argument is thrown.
inline SubsquareTriple generated_subsquare(const LatinSquare& q, const std::vector<Element>& u1,
                                           const std::vector<Element>& u2, const std::vector<Element>& u3) {
  const std::size_t n = q.order();
  std::array<std::vector<bool>, 3> in{std::vector<bool>(n), std::vector<bool>(n), std::vector<bool>(n)};
  std::array<std::vector<Element>, 3> sets;
  auto add = [&](std::size_t part, Element x) {
    if (x < 0 || static_cast<std::size_t>(x) >= n) throw std::out_of_range("generated_subsquare: element out of range");
    if (!in[part][static_cast<std::size_t>(x)]) {
      in[part][static_cast<std::size_t>(x)] = true;
      sets[part].push_back(x);
      return true;
    }
    return false;
  };
  for (auto x : u1) add(0, x);
  for (auto x : u2) add(1, x);
  for (auto x : u3) add(2, x);
  for (bool grew = true; grew;) {
    grew = false;
    const auto a = sets[0];
    const auto b = sets[1];
    const auto c = sets[2];
    for (auto x : a) {
      for (auto y : b) grew |= add(2, q.multiply(x, y));
      for (auto z : c) grew |= add(1, q.left_divide(x, z));
    }
    for (auto z : c) {
      for (auto y : b) grew |= add(0, q.right_divide(z, y));
    }
  }
  for (auto& s : sets) std::sort(s.begin(), s.end());
  if (sets[0].size() != sets[1].size() || sets[1].size() != sets[2].size()) {
    throw std::invalid_argument("generated_subsquare: generators meet fewer than two components");
  }
  return {sets[0], sets[1], sets[2]};
}

/// Lexicographic order of the point tuples of two subsquares of an order-n square.
inline bool subsquare_less(const SubsquareTriple& a, const SubsquareTriple& b, std::size_t n) {
  const auto pa = a.points(n);
  const auto pb = b.points(n);
  return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
}

/// Whether seeding closures from ({x,y},{z},{}) reaches every proper subsquare.
/// Proper subsquares have order at most n/2, so for n <= 7 none of order 3
/// contains one of order 2.
inline bool subsquare_seeding_is_exhaustive(std::size_t n) { return n <= 7; }

/// All proper subsquares (order between 2 and n-1), deduplicated and sorted by
/// point tuple. Complete when subsquare_seeding_is_exhaustive(order).
inline std::vector<SubsquareTriple> all_proper_subsquares(const LatinSquare& q) {
  const auto n = static_cast<Element>(q.order());
  std::vector<SubsquareTriple> out;
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        auto s = generated_subsquare(q, {x, y}, {z}, {});
        if (s.order() < q.order() && std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [&](const SubsquareTriple& a, const SubsquareTriple& b) { return subsquare_less(a, b, q.order()); });
  return out;
}

}  // namespace lightnet
