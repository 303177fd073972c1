#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lightnet/polyring/polynomial.hpp"

namespace lightnet {

/// Thrown when a computation runs out of its step or time budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::size_t basis_size, std::size_t pending_pairs, std::size_t reductions)
      : std::runtime_error(what),
        basis_size_(basis_size),
        pending_pairs_(pending_pairs),
        reductions_(reductions) {}

  std::size_t basis_size() const { return basis_size_; }
  std::size_t pending_pairs() const { return pending_pairs_; }
  std::size_t reductions() const { return reductions_; }

 private:
  std::size_t basis_size_;
  std::size_t pending_pairs_;
  std::size_t reductions_;
};

/// Step and wall-clock allowance shared by a group of computations.
/// A default-constructed budget is unlimited.
class Budget {
 public:
  using Clock = std::chrono::steady_clock;

  Budget() = default;

  static Budget seconds(double s) {
    Budget b;
    b.deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(s));
    return b;
  }

  static Budget steps(std::size_t n) {
    Budget b;
    b.max_steps_ = n;
    return b;
  }

  /// Returns false once the allowance is used up.
  bool charge(std::size_t n = 1) {
    steps_ += n;
    if (steps_ > max_steps_) return false;
    if (deadline_ && steps_ - checked_ >= 64) {
      checked_ = steps_;
      return Clock::now() < *deadline_;
    }
    return true;
  }

  bool expired() const {
    return steps_ > max_steps_ || (deadline_ && Clock::now() >= *deadline_);
  }

  std::size_t steps_used() const { return steps_; }

 private:
  std::optional<Clock::time_point> deadline_;
  std::size_t max_steps_ = std::numeric_limits<std::size_t>::max();
  std::size_t steps_ = 0;
  std::size_t checked_ = 0;
};

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division: f = sum(quotients[i] * divisors[i]) + remainder,
/// where no term of the remainder is divisible by a leading monomial of a
/// divisor. The first divisor whose leading monomial divides is used.
inline DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& ord) {
  std::size_t arity = f.arity();
  for (const auto& g : divisors) arity = std::max(arity, g.arity());
  DivisionResult res{std::vector<Polynomial>(divisors.size(), Polynomial(arity)), Polynomial(arity)};
  std::vector<Term> leads;
  leads.reserve(divisors.size());
  for (const auto& g : divisors) {
    leads.push_back(g.is_zero() ? Term{Monomial(), 0} : g.leading_term(ord));
  }
  Polynomial p = f.with_arity(arity);
  std::vector<Term> rem;
  while (!p.is_zero()) {
    const Term lt = p.leading_term(ord);
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (divisors[i].is_zero() || !leads[i].monomial.divides(lt.monomial)) continue;
      const Monomial q = lt.monomial / leads[i].monomial;
      const Rational c = lt.coefficient / leads[i].coefficient;
      res.quotients[i] += Polynomial::monomial(arity, q, c);
      p -= divisors[i].times_monomial(q, c);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(lt);
      p -= Polynomial::monomial(arity, lt.monomial, lt.coefficient);
    }
  }
  res.remainder = Polynomial::from_terms(arity, std::move(rem));
  return res;
}

/// Remainder of f on division by `divisors` (see divide()).
inline Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& ord) {
  return divide(f, divisors, ord).remainder;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  const Term& a = f.leading_term(ord);
  const Term& b = g.leading_term(ord);
  const Monomial l = Monomial::lcm(a.monomial, b.monomial);
  return f.times_monomial(l / a.monomial, Rational(1 / a.coefficient)) -
         g.times_monomial(l / b.monomial, Rational(1 / b.coefficient));
}

namespace detail {

/// Integer polynomial sorted in descending order for one fixed term order.
struct IPoly {
  std::vector<Monomial> mons;
  std::vector<Integer> coefs;
  unsigned sugar = 0;

  bool empty() const { return mons.empty(); }
  std::size_t size() const { return mons.size(); }
  const Monomial& lm() const { return mons.front(); }
  const Integer& lc() const { return coefs.front(); }
};

inline void make_primitive(IPoly& p) {
  if (p.empty()) return;
  Integer g = 0;
  for (const auto& c : p.coefs) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (p.coefs.front() < 0) g = -g;
  if (g != 1) {
    for (auto& c : p.coefs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

inline IPoly to_ipoly(const Polynomial& f, const MonomialOrder& ord) {
  IPoly p;
  std::vector<const Term*> ts;
  ts.reserve(f.size());
  for (const auto& t : f.terms()) ts.push_back(&t);
  if (ord.kind() != MonomialOrder::Kind::kDegRevLex) {
    std::sort(ts.begin(), ts.end(), [&](const Term* a, const Term* b) { return ord.greater(a->monomial, b->monomial); });
  }
  Integer den = 1;
  for (const auto* t : ts) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t->coefficient.get_den_mpz_t());
  p.mons.reserve(ts.size());
  p.coefs.reserve(ts.size());
  for (const auto* t : ts) {
    p.mons.push_back(t->monomial);
    Integer c = den / t->coefficient.get_den();
    c *= t->coefficient.get_num();
    p.coefs.push_back(std::move(c));
  }
  p.sugar = f.total_degree();
  make_primitive(p);
  return p;
}

inline Polynomial to_polynomial(const IPoly& p, std::size_t arity, bool monic) {
  std::vector<Term> ts;
  ts.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rational c(p.coefs[i]);
    if (monic) {
      c /= p.coefs.front();
      c.canonicalize();
    }
    ts.push_back({p.mons[i], std::move(c)});
  }
  return Polynomial::from_terms(arity, std::move(ts));
}

/// Fraction-free polynomial reducer for one term order.
class Reducer {
 public:
  Reducer(const MonomialOrder& ord, Budget* budget) : ord_(ord), budget_(budget) {}

  /// Fully reduces `f` by `basis[idx]` for idx in `active` (skipping `skip`).
  /// The result is primitive and a nonzero integer multiple of a remainder.
  IPoly reduce(IPoly f, const std::vector<IPoly>& basis, const std::vector<std::size_t>& active,
               std::size_t skip = static_cast<std::size_t>(-1)) {
    IPoly r;
    r.sugar = f.sugar;
    std::size_t pos = 0;
    std::size_t steps = 0;
    IPoly scratch;
    while (pos < f.size()) {
      const Monomial& t = f.mons[pos];
      const IPoly* g = nullptr;
      for (auto idx : active) {
        if (idx == skip) continue;
        const IPoly& cand = basis[idx];
        if (cand.lm().divides(t) && (g == nullptr || cand.size() < g->size())) g = &cand;
      }
      if (g == nullptr) {
        r.mons.push_back(t);
        r.coefs.push_back(std::move(f.coefs[pos]));
        ++pos;
        continue;
      }
      const Monomial m = t / g->lm();
      Integer gc;
      mpz_gcd(gc.get_mpz_t(), g->lc().get_mpz_t(), f.coefs[pos].get_mpz_t());
      Integer a = g->lc() / gc;
      Integer b = f.coefs[pos] / gc;
      if (budget_ != nullptr) {
        // One unit per 16 limb-terms touched.
        const std::size_t limbs = 1 + mpz_size(a.get_mpz_t()) + mpz_size(b.get_mpz_t()) + mpz_size(f.coefs[pos].get_mpz_t());
        if (!budget_->charge(1 + (f.size() - pos + g->size()) * limbs / 16)) {
          throw BudgetExceeded("budget exhausted during reduction", basis.size(), 0, budget_->steps_used());
        }
      }
      subtract_multiple(f, pos, a, b, m, *g, scratch);
      std::swap(f, scratch);
      pos = 0;
      f.sugar = std::max(f.sugar, g->sugar + m.degree());
      r.sugar = std::max(r.sugar, f.sugar);
      if (a != 1) {
        for (auto& c : r.coefs) c *= a;
      }
      if (++steps % 32 == 0) remove_common_content(r, f);
    }
    make_primitive(r);
    return r;
  }

 private:
  /// out = a * f[pos+1..] - b * m * g[1..]
  void subtract_multiple(const IPoly& f, std::size_t pos, const Integer& a, const Integer& b, const Monomial& m,
                         const IPoly& g, IPoly& out) const {
    out.mons.clear();
    out.coefs.clear();
    out.mons.reserve(f.size() - pos + g.size());
    out.coefs.reserve(f.size() - pos + g.size());
    out.sugar = f.sugar;
    std::size_t i = pos + 1;
    std::size_t j = 1;
    const bool a_one = a == 1;
    Monomial gm;
    bool gm_valid = false;
    while (i < f.size() || j < g.size()) {
      if (j < g.size() && !gm_valid) {
        gm = g.mons[j] * m;
        gm_valid = true;
      }
      int c;
      if (i == f.size()) {
        c = -1;
      } else if (j == g.size()) {
        c = 1;
      } else {
        c = ord_.compare(f.mons[i], gm);
      }
      if (c > 0) {
        out.mons.push_back(f.mons[i]);
        if (a_one) {
          out.coefs.push_back(f.coefs[i]);
        } else {
          out.coefs.emplace_back(f.coefs[i] * a);
        }
        ++i;
      } else if (c < 0) {
        out.mons.push_back(gm);
        out.coefs.emplace_back(-(g.coefs[j] * b));
        ++j;
        gm_valid = false;
      } else {
        Integer v = f.coefs[i] * a;
        mpz_submul(v.get_mpz_t(), g.coefs[j].get_mpz_t(), b.get_mpz_t());
        if (v != 0) {
          out.mons.push_back(gm);
          out.coefs.push_back(std::move(v));
        }
        ++i;
        ++j;
        gm_valid = false;
      }
    }
  }

  static void remove_common_content(IPoly& r, IPoly& f) {
    Integer g = 0;
    for (const auto& c : r.coefs) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) return;
    }
    for (const auto& c : f.coefs) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) return;
    }
    if (g == 0) return;
    for (auto& c : r.coefs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    for (auto& c : f.coefs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }

  MonomialOrder ord_;
  Budget* budget_;
};

/// Buchberger's algorithm with the Gebauer-Moeller pair criteria and sugar
/// pair selection.
class BuchbergerEngine {
 public:
  BuchbergerEngine(const MonomialOrder& ord, Budget* budget) : ord_(ord), budget_(budget), reducer_(ord, budget) {}

  std::vector<IPoly> run(std::vector<IPoly> inputs) {
    std::sort(inputs.begin(), inputs.end(), [&](const IPoly& a, const IPoly& b) {
      return ord_.compare(a.lm(), b.lm()) < 0;
    });
    for (auto& f : inputs) {
      IPoly h = reducer_.reduce(std::move(f), polys_, active_);
      if (!h.empty() && insert(std::move(h))) return unit();
      if (should_stop()) return {};
    }
    while (!pairs_.empty()) {
      if (budget_ != nullptr && !budget_->charge()) fail();
      const std::size_t k = select_pair();
      const Pair pr = pairs_[k];
      pairs_[k] = pairs_.back();
      pairs_.pop_back();
      IPoly s = spoly(pr);
      if (s.empty()) continue;
      IPoly h = reducer_.reduce(std::move(s), polys_, active_);
      if (!h.empty() && insert(std::move(h))) return unit();
      if (should_stop()) return {};
    }
    return interreduce();
  }

  void stop_when(std::function<bool(const IPoly&)> pred) { stop_ = std::move(pred); }
  std::optional<std::size_t> stopped_at() const { return stopped_; }
  const std::vector<IPoly>& polys() const { return polys_; }

 private:
  bool should_stop() {
    if (!stop_ || polys_.empty() || active_.empty() || active_.back() != polys_.size() - 1) return false;
    if (checked_ == polys_.size()) return false;
    checked_ = polys_.size();
    if (!stop_(polys_.back())) return false;
    stopped_ = polys_.size() - 1;
    return true;
  }

  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    unsigned sugar;
  };

  [[noreturn]] void fail() const {
    throw BudgetExceeded("budget exhausted during Buchberger", active_.size(), pairs_.size(),
                         budget_ != nullptr ? budget_->steps_used() : 0);
  }

  std::vector<IPoly> unit() const {
    IPoly one;
    one.mons.push_back(Monomial());
    one.coefs.push_back(1);
    return {one};
  }

  std::size_t select_pair() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.sugar < b.sugar || (a.sugar == b.sugar && ord_.compare(a.lcm, b.lcm) < 0)) best = k;
    }
    return best;
  }

  IPoly spoly(const Pair& pr) const {
    const IPoly& f = polys_[pr.i];
    const IPoly& g = polys_[pr.j];
    const Monomial mf = pr.lcm / f.lm();
    const Monomial mg = pr.lcm / g.lm();
    Integer gc;
    mpz_gcd(gc.get_mpz_t(), f.lc().get_mpz_t(), g.lc().get_mpz_t());
    const Integer a = g.lc() / gc;  // multiplies f
    const Integer b = f.lc() / gc;  // multiplies g
    IPoly out;
    out.sugar = std::max(f.sugar + mf.degree(), g.sugar + mg.degree());
    std::size_t i = 1;
    std::size_t j = 1;
    while (i < f.size() || j < g.size()) {
      int c;
      Monomial x;
      Monomial y;
      if (i < f.size()) x = f.mons[i] * mf;
      if (j < g.size()) y = g.mons[j] * mg;
      if (i == f.size()) {
        c = -1;
      } else if (j == g.size()) {
        c = 1;
      } else {
        c = ord_.compare(x, y);
      }
      if (c > 0) {
        out.mons.push_back(x);
        out.coefs.emplace_back(f.coefs[i] * a);
        ++i;
      } else if (c < 0) {
        out.mons.push_back(y);
        out.coefs.emplace_back(-(g.coefs[j] * b));
        ++j;
      } else {
        Integer v = f.coefs[i] * a;
        mpz_submul(v.get_mpz_t(), g.coefs[j].get_mpz_t(), b.get_mpz_t());
        if (v != 0) {
          out.mons.push_back(x);
          out.coefs.push_back(std::move(v));
        }
        ++i;
        ++j;
      }
    }
    make_primitive(out);
    return out;
  }

  /// Adds h to the basis and updates the pair set. Returns true if h is a
  /// nonzero constant.
  bool insert(IPoly h) {
    if (h.lm().is_one()) return true;
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    const Monomial& lh = polys_[hi].lm();

    std::vector<Pair> c;
    c.reserve(active_.size());
    for (auto g : active_) {
      c.push_back({g, hi, Monomial::lcm(polys_[g].lm(), lh),
                   std::max(polys_[g].sugar + (Monomial::lcm(polys_[g].lm(), lh) / polys_[g].lm()).degree(),
                            polys_[hi].sugar + (Monomial::lcm(polys_[g].lm(), lh) / lh).degree())});
    }
    std::vector<Pair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Pair& p = c[k];
      bool keep = polys_[p.i].lm().coprime(lh);
      if (!keep) {
        keep = true;
        for (std::size_t q = k + 1; q < c.size() && keep; ++q) {
          if (c[q].lcm.divides(p.lcm)) keep = false;
        }
        for (std::size_t q = 0; q < d.size() && keep; ++q) {
          if (d[q].lcm.divides(p.lcm)) keep = false;
        }
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> next;
    next.reserve(pairs_.size() + d.size());
    for (auto& p : pairs_) {
      const bool drop = lh.divides(p.lcm) && !(Monomial::lcm(polys_[p.i].lm(), lh) == p.lcm) &&
                        !(Monomial::lcm(polys_[p.j].lm(), lh) == p.lcm);
      if (!drop) next.push_back(std::move(p));
    }
    for (auto& p : d) {
      if (!polys_[p.i].lm().coprime(lh)) next.push_back(std::move(p));
    }
    pairs_ = std::move(next);

    std::vector<std::size_t> act;
    act.reserve(active_.size() + 1);
    for (auto g : active_) {
      if (!lh.divides(polys_[g].lm())) act.push_back(g);
    }
    act.push_back(hi);
    active_ = std::move(act);
    return false;
  }

  std::vector<IPoly> interreduce() {
    std::sort(active_.begin(), active_.end(), [&](std::size_t a, std::size_t b) {
      return ord_.compare(polys_[a].lm(), polys_[b].lm()) < 0;
    });
    std::vector<IPoly> out;
    out.reserve(active_.size());
    for (auto idx : active_) {
      // Leading monomials of a minimal basis are pairwise non-dividing, so
      // reducing by the others only touches the tail.
      IPoly red = reducer_.reduce(polys_[idx], polys_, active_, idx);
      out.push_back(std::move(red));
    }
    return out;
  }

  MonomialOrder ord_;
  Budget* budget_;
  Reducer reducer_;
  std::vector<IPoly> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
  std::function<bool(const IPoly&)> stop_;
  std::optional<std::size_t> stopped_;
  std::size_t checked_ = 0;
};

}  // namespace detail

/// Reduced Groebner basis of the ideal generated by `gens`: monic under `ord`
/// and sorted by ascending leading monomial. The zero ideal gives {} and the
/// unit ideal gives {1}.
inline std::vector<Polynomial> buchberger(std::span<const Polynomial> gens, const MonomialOrder& ord,
                                          Budget* budget = nullptr) {
  std::size_t arity = 0;
  for (const auto& g : gens) arity = std::max(arity, g.arity());
  std::vector<detail::IPoly> inputs;
  for (const auto& g : gens) {
    if (!g.is_zero()) inputs.push_back(detail::to_ipoly(g, ord));
  }
  if (inputs.empty()) return {};
  detail::BuchbergerEngine engine(ord, budget);
  std::vector<detail::IPoly> basis = engine.run(std::move(inputs));
  std::vector<Polynomial> out;
  out.reserve(basis.size());
  for (const auto& b : basis) out.push_back(detail::to_polynomial(b, arity, true));
  return out;
}

/// Outcome of buchberger_until: either the reduced basis, or the generators
/// collected when `stop` accepted a new element (`element`, also among
/// `generators`). The generators span the same ideal as the input.
struct InterruptedBasis {
  std::vector<Polynomial> generators;
  Polynomial element;
};

/// Buchberger that returns early once a newly added basis element satisfies
/// `stop`. The unit ideal is never interrupted.
inline std::variant<std::vector<Polynomial>, InterruptedBasis> buchberger_until(
    std::span<const Polynomial> gens, const MonomialOrder& ord, Budget* budget,
    const std::function<bool(const Polynomial&)>& stop) {
  std::size_t arity = 0;
  for (const auto& g : gens) arity = std::max(arity, g.arity());
  std::vector<detail::IPoly> inputs;
  for (const auto& g : gens) {
    if (!g.is_zero()) inputs.push_back(detail::to_ipoly(g, ord));
  }
  if (inputs.empty()) return std::vector<Polynomial>{};
  detail::BuchbergerEngine engine(ord, budget);
  engine.stop_when([&](const detail::IPoly& p) { return stop(detail::to_polynomial(p, arity, true)); });
  std::vector<detail::IPoly> basis = engine.run(std::move(inputs));
  if (const auto at = engine.stopped_at()) {
    // Inputs not yet reduced when the engine stopped are kept too.
    InterruptedBasis out{{gens.begin(), gens.end()}, detail::to_polynomial(engine.polys()[*at], arity, true)};
    for (const auto& q : engine.polys()) {
      auto p = detail::to_polynomial(q, arity, true);
      if (std::find(out.generators.begin(), out.generators.end(), p) == out.generators.end()) out.generators.push_back(std::move(p));
    }
    return out;
  }
  std::vector<Polynomial> out;
  for (const auto& b : basis) out.push_back(detail::to_polynomial(b, arity, true));
  return out;
}

/// True iff f reduces to zero modulo `basis` (fraction-free, no quotients).
inline bool reduces_to_zero(const Polynomial& f, std::span<const Polynomial> basis, const MonomialOrder& ord,
                            Budget* budget = nullptr) {
  if (f.is_zero()) return true;
  std::vector<detail::IPoly> polys;
  std::vector<std::size_t> active;
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    active.push_back(polys.size());
    polys.push_back(detail::to_ipoly(g, ord));
  }
  detail::Reducer red(ord, budget);
  return red.reduce(detail::to_ipoly(f, ord), polys, active).empty();
}

}  // namespace lightnet
