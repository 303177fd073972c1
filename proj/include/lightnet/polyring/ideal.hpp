#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lightnet/polyring/groebner.hpp"
#include "lightnet/polyring/polynomial.hpp"

namespace lightnet {

/// Finitely generated ideal of Q[t1..tn]. Reduced Groebner bases are computed
/// on demand and cached per term order; copies share the cache.
class Ideal {
 public:
  Ideal() : Ideal(0, {}) {}

  Ideal(std::size_t arity, std::vector<Polynomial> generators)
      : arity_(arity), cache_(std::make_shared<Cache>()) {
    if (arity > kMaxVariables) throw std::invalid_argument("Ideal: arity exceeds kMaxVariables");
    gens_.reserve(generators.size());
    for (auto& g : generators) {
      if (g.used_arity() > arity) throw std::invalid_argument("Ideal: generator outside ring");
      if (!g.is_zero()) gens_.push_back(g.with_arity(arity));
    }
  }

  static Ideal unit(std::size_t arity) { return Ideal(arity, {Polynomial::one(arity)}); }

  /// Wraps a list already known to be the reduced basis for `ord`.
  static Ideal from_reduced_basis(std::size_t arity, std::vector<Polynomial> basis, const MonomialOrder& ord) {
    Ideal i(arity, basis);
    i.cache_->bases.emplace(ord, i.gens_);
    return i;
  }

  std::size_t arity() const { return arity_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  const std::vector<Polynomial>& groebner_basis(const MonomialOrder& ord = MonomialOrder::degrevlex(),
                                                Budget* budget = nullptr) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->bases.find(ord);
    if (it == cache_->bases.end()) {
      auto basis = buchberger(gens_, ord, budget);
      for (auto& b : basis) b = b.with_arity(arity_);
      it = cache_->bases.emplace(ord, std::move(basis)).first;
    }
    return it->second;
  }

  bool is_unit(Budget* budget = nullptr) const {
    const auto& g = groebner_basis(MonomialOrder::degrevlex(), budget);
    return g.size() == 1 && g.front().is_constant();
  }

  bool is_zero() const { return gens_.empty(); }

  Ideal with(const Polynomial& f) const {
    auto gens = gens_;
    gens.push_back(f.with_arity(std::max(arity_, f.arity())));
    return Ideal(arity_, std::move(gens));
  }

  friend Ideal operator+(const Ideal& a, const Ideal& b) {
    auto gens = a.gens_;
    gens.insert(gens.end(), b.gens_.begin(), b.gens_.end());
    return Ideal(std::max(a.arity_, b.arity_), std::move(gens));
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<MonomialOrder, std::vector<Polynomial>> bases;
  };

  std::size_t arity_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

inline bool ideal_membership(const Polynomial& f, const Ideal& i, Budget* budget = nullptr) {
  if (f.is_zero()) return true;
  return reduces_to_zero(f, i.groebner_basis(MonomialOrder::degrevlex(), budget), MonomialOrder::degrevlex(), budget);
}

/// True iff j is a subset of i.
inline bool ideal_contains(const Ideal& i, const Ideal& j, Budget* budget = nullptr) {
  const auto& basis = i.groebner_basis(MonomialOrder::degrevlex(), budget);
  if (basis.size() == 1 && basis.front().is_constant()) return true;
  for (const auto& g : j.generators()) {
    if (!reduces_to_zero(g, basis, MonomialOrder::degrevlex(), budget)) return false;
  }
  return true;
}

inline bool same_ideal(const Ideal& a, const Ideal& b, Budget* budget = nullptr) {
  return a.groebner_basis(MonomialOrder::degrevlex(), budget) == b.groebner_basis(MonomialOrder::degrevlex(), budget);
}

/// Intersection of the ideal with the subring in the variables outside `mask`.
inline Ideal elimination_ideal(const Ideal& i, std::uint32_t mask, Budget* budget = nullptr) {
  const auto ord = MonomialOrder::eliminating(mask);
  std::vector<Polynomial> kept;
  for (const auto& g : i.groebner_basis(ord, budget)) {
    if ((g.support() & mask) == 0) kept.push_back(g);
  }
  return Ideal(i.arity(), std::move(kept));
}

/// i : f^infinity via an auxiliary variable w and elimination of w from
/// i + <1 - w*f>.
inline Ideal saturate(const Ideal& i, const Polynomial& f, Budget* budget = nullptr) {
  if (f.is_zero()) throw std::invalid_argument("saturate: f must be nonzero");
  if (f.is_constant()) return i;
  const std::size_t n = std::max(i.arity(), f.arity());
  if (n + 1 > kMaxVariables) throw std::invalid_argument("saturate: no room for the auxiliary variable");
  std::vector<Polynomial> gens;
  gens.reserve(i.generators().size() + 1);
  for (const auto& g : i.generators()) gens.push_back(g.with_arity(n + 1));
  const Polynomial w = Polynomial::variable(n + 1, n);
  gens.push_back(Polynomial::one(n + 1) - w * f.with_arity(n + 1));
  const std::uint32_t mask = 1u << n;
  const auto ord = MonomialOrder::eliminating(mask);
  std::vector<Polynomial> kept;
  for (const auto& g : buchberger(gens, ord, budget)) {
    if ((g.support() & mask) == 0) kept.push_back(g.with_arity(n));
  }
  return Ideal(n, std::move(kept));
}

/// Krull dimension of Q[t1..tn]/i: the largest set of variables that contains
/// the support of no leading monomial of a Groebner basis.
inline int krull_dimension(const Ideal& i, Budget* budget = nullptr) {
  const auto& basis = i.groebner_basis(MonomialOrder::degrevlex(), budget);
  if (basis.size() == 1 && basis.front().is_constant()) {
    throw std::invalid_argument("krull_dimension: unit ideal");
  }
  std::vector<std::uint32_t> supports;
  for (const auto& g : basis) supports.push_back(g.terms().front().monomial.support());
  const std::size_t n = i.arity();
  // Smallest hitting set of the supports; its complement is a maximal
  // independent set.
  int best = static_cast<int>(n);
  std::vector<std::uint32_t> sorted = supports;
  std::sort(sorted.begin(), sorted.end(), [](std::uint32_t a, std::uint32_t b) {
    return __builtin_popcount(a) < __builtin_popcount(b);
  });
  auto search = [&](auto&& self, std::uint32_t chosen, int count) -> void {
    if (count >= best) return;
    for (auto s : sorted) {
      if ((s & chosen) == 0) {
        for (std::uint32_t m = s; m != 0; m &= m - 1) self(self, chosen | (m & -m), count + 1);
        return;
      }
    }
    best = count;
  };
  search(search, 0u, 0);
  return static_cast<int>(n) - best;
}

}  // namespace lightnet
