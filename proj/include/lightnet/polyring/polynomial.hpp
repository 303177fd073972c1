#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lightnet/polyring/monomial.hpp"

namespace lightnet {

using Rational = mpq_class;
using Integer = mpz_class;

struct Term {
  Monomial monomial;
  Rational coefficient;
};

/// Multivariate polynomial over Q in `arity` variables t1..tn.
///
/// Terms are kept sorted in descending degrevlex order with no zero
/// coefficients, which makes equality structural.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t arity) : arity_(check_arity(arity)) {}

  static Polynomial constant(std::size_t arity, const Rational& c) {
    Polynomial p(arity);
    if (c != 0) p.terms_.push_back({Monomial(), c});
    return p;
  }
  static Polynomial one(std::size_t arity) { return constant(arity, 1); }

  /// The variable t_{index+1}.
  static Polynomial variable(std::size_t arity, std::size_t index) {
    if (index >= arity) throw std::out_of_range("Polynomial::variable: index out of range");
    Polynomial p(arity);
    p.terms_.push_back({Monomial::variable(index), 1});
    return p;
  }

  static Polynomial monomial(std::size_t arity, const Monomial& m, const Rational& c = 1) {
    if (m.used_arity() > arity) throw std::out_of_range("Polynomial::monomial: variable out of range");
    Polynomial p(arity);
    if (c != 0) p.terms_.push_back({m, c});
    return p;
  }

  /// Builds from unsorted terms; merges duplicates and drops zeros.
  static Polynomial from_terms(std::size_t arity, std::vector<Term> terms) {
    Polynomial p(arity);
    const auto ord = MonomialOrder::degrevlex();
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
      return ord.greater(a.monomial, b.monomial);
    });
    for (auto& t : terms) {
      if (t.monomial.used_arity() > arity) throw std::out_of_range("Polynomial: variable out of range");
      if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
        p.terms_.back().coefficient += t.coefficient;
        if (p.terms_.back().coefficient == 0) p.terms_.pop_back();
      } else if (t.coefficient != 0) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  std::size_t arity() const { return arity_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

  Rational constant_term() const {
    if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
    return 0;
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
  }

  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
    return d;
  }

  /// Bit mask of variables that occur.
  std::uint32_t support() const {
    std::uint32_t s = 0;
    for (const auto& t : terms_) s |= t.monomial.support();
    return s;
  }

  const Term& leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw std::domain_error("leading_term of zero polynomial");
    if (ord.kind() == MonomialOrder::Kind::kDegRevLex) return terms_.front();
    const Term* best = &terms_.front();
    for (const auto& t : terms_) {
      if (ord.greater(t.monomial, best->monomial)) best = &t;
    }
    return *best;
  }
  const Monomial& leading_monomial(const MonomialOrder& ord) const { return leading_term(ord).monomial; }

  /// Same polynomial viewed in a ring with more (or equally many) variables.
  Polynomial with_arity(std::size_t arity) const {
    if (support() != 0 && arity < used_arity()) {
      throw std::invalid_argument("with_arity: polynomial uses variables beyond new arity");
    }
    Polynomial p = *this;
    p.arity_ = check_arity(arity);
    return p;
  }

  std::size_t used_arity() const {
    std::size_t a = 0;
    for (const auto& t : terms_) a = std::max(a, t.monomial.used_arity());
    return a;
  }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coefficient = -t.coefficient;
    return p;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, 1); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, -1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_) {
      for (const auto& y : b.terms_) out.push_back({x.monomial * y.monomial, x.coefficient * y.coefficient});
    }
    return from_terms(std::max(a.arity_, b.arity_), std::move(out));
  }

  friend Polynomial operator*(const Rational& c, const Polynomial& p) {
    if (c == 0) return Polynomial(p.arity_);
    Polynomial r = p;
    for (auto& t : r.terms_) t.coefficient *= c;
    return r;
  }

  Polynomial times_monomial(const Monomial& m, const Rational& c = 1) const {
    if (c == 0) return Polynomial(arity_);
    Polynomial r(arity_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coefficient * c});
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned e) const {
    Polynomial r = one(arity_);
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

  /// Partial derivative with respect to variable `var`.
  Polynomial derivative(std::size_t var) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      const unsigned e = t.monomial[var];
      if (e == 0) continue;
      Monomial m = t.monomial;
      m.set(var, e - 1);
      out.push_back({m, t.coefficient * e});
    }
    return from_terms(arity_, std::move(out));
  }

  /// Scalar multiple with coprime integer coefficients and positive leading
  /// coefficient (degrevlex). Zero stays zero.
  Polynomial primitive() const {
    if (terms_.empty()) return *this;
    Integer den_lcm = 1;
    Integer num_gcd = 0;
    for (const auto& t : terms_) {
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coefficient.get_den_mpz_t());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coefficient.get_num_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (terms_.front().coefficient < 0) scale = -scale;
    return scale * *this;
  }

  /// Scalar multiple with leading coefficient 1 under `ord`.
  Polynomial monic(const MonomialOrder& ord) const {
    if (terms_.empty()) return *this;
    const Rational lc = leading_term(ord).coefficient;
    return Rational(1 / lc) * *this;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coefficient != b.terms_[i].coefficient) {
        return false;
      }
    }
    return true;
  }

 private:
  static std::size_t check_arity(std::size_t arity) {
    if (arity > kMaxVariables) throw std::invalid_argument("Polynomial: arity exceeds kMaxVariables");
    return arity;
  }

  static Polynomial combine(const Polynomial& a, const Polynomial& b, int sign) {
    Polynomial r(std::max(a.arity_, b.arity_));
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    const auto ord = MonomialOrder::degrevlex();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int c;
      if (i == a.terms_.size()) {
        c = -1;
      } else if (j == b.terms_.size()) {
        c = 1;
      } else {
        c = ord.compare(a.terms_[i].monomial, b.terms_[j].monomial);
      }
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back(b.terms_[j++]);
        if (sign < 0) r.terms_.back().coefficient = -r.terms_.back().coefficient;
      } else {
        Rational s = sign > 0 ? Rational(a.terms_[i].coefficient + b.terms_[j].coefficient)
                              : Rational(a.terms_[i].coefficient - b.terms_[j].coefficient);
        if (s != 0) r.terms_.push_back({a.terms_[i].monomial, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::size_t arity_ = 0;
  std::vector<Term> terms_;
};

/// Determinant of the 3x3 matrix whose rows are a, b, c.
inline Polynomial det3(const std::array<Polynomial, 3>& a, const std::array<Polynomial, 3>& b,
                       const std::array<Polynomial, 3>& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

/// Cross product a x b.
inline std::array<Polynomial, 3> cross(const std::array<Polynomial, 3>& a, const std::array<Polynomial, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace lightnet
