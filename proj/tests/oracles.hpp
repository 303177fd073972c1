#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "lightnet/lightnet.hpp"

namespace oracle {

using lightnet::Block;
using lightnet::Element;
using lightnet::IncidenceStructure;
using lightnet::LatinSquare;
using lightnet::Monomial;
using lightnet::Polynomial;
using lightnet::Rational;
using lightnet::SubsquareTriple;

inline std::vector<std::vector<Element>> subsets_of_size(std::size_t n, std::size_t r) {
  std::vector<std::vector<Element>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != r) continue;
    std::vector<Element> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) s.push_back(static_cast<Element>(i));
    }
    out.push_back(std::move(s));
  }
  return out;
}

/// Every triple of equal-size sets with S1*S2 inside S3, orders 2..n-1.
inline std::vector<SubsquareTriple> brute_force_subsquares(const LatinSquare& q) {
  const std::size_t n = q.order();
  std::vector<SubsquareTriple> out;
  for (std::size_t r = 2; r < n; ++r) {
    const auto subs = subsets_of_size(n, r);
    for (const auto& a : subs) {
      for (const auto& b : subs) {
        std::vector<Element> prod;
        for (auto x : a) {
          for (auto y : b) prod.push_back(q.multiply(x, y));
        }
        std::sort(prod.begin(), prod.end());
        prod.erase(std::unique(prod.begin(), prod.end()), prod.end());
        if (prod.size() == r) out.push_back({a, b, prod});
      }
    }
  }
  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return lightnet::subsquare_less(x, y, n); });
  return out;
}

/// Any point permutation carrying the blocks of a onto those of b, by trying all of them.
inline bool exhaustive_isomorphic(const IncidenceStructure& a, const IncidenceStructure& b) {
  if (a.num_points() != b.num_points() || a.blocks().size() != b.blocks().size()) return false;
  std::vector<int> perm(a.num_points());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  do {
    bool ok = true;
    for (const auto& blk : a.blocks()) {
      Block img;
      for (int p : blk) img.push_back(perm[static_cast<std::size_t>(p)]);
      if (!b.has_block(img)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline std::uint64_t exhaustive_automorphism_count(const IncidenceStructure& a) {
  std::vector<int> perm(a.num_points());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (const auto& blk : a.blocks()) {
      Block img;
      for (int p : blk) img.push_back(perm[static_cast<std::size_t>(p)]);
      if (!a.has_block(img)) {
        ok = false;
        break;
      }
    }
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

inline std::vector<Monomial> monomials_up_to(std::size_t arity, unsigned degree) {
  std::vector<Monomial> out{Monomial()};
  std::vector<Monomial> layer{Monomial()};
  for (unsigned d = 1; d <= degree; ++d) {
    std::vector<Monomial> next;
    for (const auto& m : layer) {
      // extend only by variables >= the last one used, so each monomial appears once
      std::size_t start = 0;
      for (std::size_t v = 0; v < arity; ++v) {
        if (m[v] > 0) start = v;
      }
      for (std::size_t v = start; v < arity; ++v) next.push_back(m * Monomial::variable(v));
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

struct DegRevLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return lightnet::MonomialOrder::degrevlex().compare(a, b) < 0;
  }
};

/// Whether f is a Q-combination of the products m*g with deg(m*g) <= degree.
/// A true answer is a certificate of membership; false only says no
/// certificate exists within the degree bound.
inline bool bounded_membership(const Polynomial& f, const std::vector<Polynomial>& gens, std::size_t arity,
                               unsigned degree) {
  // row echelon form keyed by pivot monomial (largest in the row)
  using Row = std::map<Monomial, Rational, DegRevLexLess>;
  std::map<Monomial, Row, DegRevLexLess> rows;
  auto to_row = [](const Polynomial& p) {
    Row r;
    for (const auto& t : p.terms()) r.emplace(t.monomial, t.coefficient);
    return r;
  };
  auto reduce = [&](Row r) {
    while (!r.empty()) {
      auto lead = std::prev(r.end());
      auto it = rows.find(lead->first);
      if (it == rows.end()) return r;
      const Rational c = lead->second;
      for (const auto& [m, v] : it->second) {
        auto& slot = r[m];
        slot -= c * v;
        if (slot == 0) r.erase(m);
      }
    }
    return r;
  };
  for (const auto& g : gens) {
    if (g.is_zero() || g.total_degree() > degree) continue;
    for (const auto& m : monomials_up_to(arity, degree - g.total_degree())) {
      auto r = reduce(to_row(g.times_monomial(m)));
      if (r.empty()) continue;
      const Rational lead = std::prev(r.end())->second;
      for (auto& [k, v] : r) v /= lead;
      const Monomial key = std::prev(r.end())->first;
      rows.emplace(key, std::move(r));
    }
  }
  return reduce(to_row(f)).empty();
}

inline Polynomial random_polynomial(std::mt19937& rng, std::size_t arity, unsigned max_degree, int terms) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, arity - 1);
  std::vector<lightnet::Term> ts;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    const unsigned d = deg(rng);
    for (unsigned e = 0; e < d; ++e) m = m * Monomial::variable(var(rng));
    ts.push_back({m, Rational(coef(rng))});
  }
  return Polynomial::from_terms(arity, std::move(ts));
}

}  // namespace oracle
