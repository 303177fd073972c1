#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lightnet/polyring/groebner.hpp"
#include "lightnet/polyring/poly_io.hpp"
#include "lightnet/polyring/polynomial.hpp"

namespace lightnet {

namespace detail {

/// Coefficients of f as a polynomial in variable `var`; entry k belongs to var^k.
inline std::vector<Polynomial> coefficients_in(const Polynomial& f, std::size_t var) {
  std::vector<std::vector<Term>> buckets(f.degree_in(var) + 1);
  for (const auto& t : f.terms()) {
    Monomial m = t.monomial;
    const unsigned e = m[var];
    m.set(var, 0);
    buckets[e].push_back({m, t.coefficient});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Polynomial::from_terms(f.arity(), std::move(b)));
  return out;
}

inline int top_variable(std::uint32_t support) {
  return support == 0 ? -1 : 31 - __builtin_clz(support);
}

inline Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t var) {
  const unsigned db = b.degree_in(var);
  const Polynomial lb = coefficients_in(b, var).back();
  while (!a.is_zero() && (a.support() & (1u << var)) != 0 && a.degree_in(var) >= db) {
    const unsigned da = a.degree_in(var);
    const Polynomial la = coefficients_in(a, var).back();
    a = lb * a - (la * b).times_monomial(Monomial::variable(var, da - db));
  }
  if (db == 0) return Polynomial(a.arity());
  return a;
}

}  // namespace detail

/// Quotient a / b when b divides a exactly, otherwise nullopt.
inline std::optional<Polynomial> exact_quotient(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) return std::nullopt;
  const std::vector<Polynomial> divisor{b};
  auto res = divide(a, divisor, MonomialOrder::lex());
  if (!res.remainder.is_zero()) return std::nullopt;
  return res.quotients.front();
}

inline Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b);

/// Greatest common divisor of the coefficients of f viewed in variable `var`.
inline Polynomial content_in(const Polynomial& f, std::size_t var) {
  Polynomial g(f.arity());
  for (const auto& c : detail::coefficients_in(f, var)) {
    if (c.is_zero()) continue;
    g = polynomial_gcd(g, c);
    if (g.is_constant()) return Polynomial::one(f.arity());
  }
  return g;
}

/// Multivariate gcd over Q, normalized to a primitive integer polynomial with
/// positive leading coefficient. Computed recursively through contents and
/// primitive pseudo-remainder sequences.
inline Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b) {
  const std::size_t arity = std::max(a.arity(), b.arity());
  if (a.is_zero()) return b.primitive().with_arity(arity);
  if (b.is_zero()) return a.primitive().with_arity(arity);
  if (a.is_constant() || b.is_constant()) return Polynomial::one(arity);
  const auto x = static_cast<std::size_t>(detail::top_variable(a.support() | b.support()));
  const std::uint32_t bit = 1u << x;
  if ((a.support() & bit) == 0) return polynomial_gcd(a, content_in(b, x));
  if ((b.support() & bit) == 0) return polynomial_gcd(content_in(a, x), b);

  const Polynomial ca = content_in(a, x);
  const Polynomial cb = content_in(b, x);
  const Polynomial c = polynomial_gcd(ca, cb);
  Polynomial pa = *exact_quotient(a, ca);
  Polynomial pb = *exact_quotient(b, cb);
  if (pa.degree_in(x) < pb.degree_in(x)) std::swap(pa, pb);
  for (;;) {
    Polynomial r = detail::pseudo_remainder(pa, pb, x);
    if (r.is_zero()) break;
    if ((r.support() & bit) == 0) {
      pb = Polynomial::one(arity);
      break;
    }
    pa = std::move(pb);
    pb = *exact_quotient(r, content_in(r, x));
  }
  Polynomial g = pb.is_constant() ? Polynomial::one(arity) : *exact_quotient(pb, content_in(pb, x));
  return (c * g).primitive().with_arity(arity);
}

/// f = unit * product(factors). Factors are primitive integer polynomials
/// with positive leading coefficient, listed with multiplicity.
struct Factorization {
  Rational unit = 1;
  std::vector<Polynomial> factors;
};

/// Splits f using monomial content, content with respect to each variable and
/// squarefree parts (gcd with partial derivatives). Factors are not
/// guaranteed irreducible.
inline Factorization factor_split(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("factor_split: zero polynomial");
  Factorization out;
  const Polynomial prim = f.primitive();
  out.unit = f.terms().front().coefficient / prim.terms().front().coefficient;
  std::vector<Polynomial> work{prim};
  while (!work.empty()) {
    Polynomial g = std::move(work.back());
    work.pop_back();
    if (g.is_constant()) continue;

    Monomial mc = g.terms().front().monomial;
    for (const auto& t : g.terms()) mc = Monomial::gcd(mc, t.monomial);
    if (!mc.is_one()) {
      for (std::size_t v = 0; v < g.arity(); ++v) {
        for (unsigned k = 0; k < mc[v]; ++k) out.factors.push_back(Polynomial::variable(g.arity(), v));
      }
      std::vector<Term> ts;
      for (const auto& t : g.terms()) ts.push_back({t.monomial / mc, t.coefficient});
      work.push_back(Polynomial::from_terms(g.arity(), std::move(ts)).primitive());
      continue;
    }

    bool split = false;
    for (std::uint32_t s = g.support(); s != 0 && !split; s &= s - 1) {
      const auto v = static_cast<std::size_t>(__builtin_ctz(s));
      const Polynomial c = content_in(g, v);
      if (!c.is_constant()) {
        work.push_back(c);
        work.push_back(exact_quotient(g, c)->primitive());
        split = true;
      }
    }
    for (std::uint32_t s = g.support(); s != 0 && !split; s &= s - 1) {
      const auto v = static_cast<std::size_t>(__builtin_ctz(s));
      const Polynomial d = polynomial_gcd(g, g.derivative(v));
      if (!d.is_constant()) {
        work.push_back(d);
        work.push_back(exact_quotient(g, d)->primitive());
        split = true;
      }
    }
    if (!split) out.factors.push_back(g.primitive());
  }
  // The unit absorbs the signs fixed by primitive().
  Polynomial prod = Polynomial::one(f.arity());
  for (const auto& p : out.factors) prod *= p;
  if (!prod.is_zero()) out.unit = f.terms().front().coefficient / prod.terms().front().coefficient;
  std::sort(out.factors.begin(), out.factors.end(), [](const Polynomial& a, const Polynomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    if (a.size() != b.size()) return a.size() < b.size();
    return to_string(a) < to_string(b);
  });
  return out;
}

/// The distinct factors of factor_split(f), in the same order.
inline std::vector<Polynomial> distinct_factors(const Polynomial& f) {
  auto fs = factor_split(f).factors;
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  return fs;
}

}  // namespace lightnet
