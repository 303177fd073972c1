#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "lightnet/lightnet.hpp"
#include "oracles.hpp"

namespace {

using namespace lightnet;

Polynomial P(const std::string& s, std::size_t arity = 4) { return parse_polynomial(s, arity); }

Ideal I(std::size_t arity, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> v;
  for (const char* g : gens) v.push_back(P(g, arity));
  return Ideal(arity, v);
}

struct RandomIdeal {
  std::size_t arity;
  std::vector<Polynomial> gens;
};

std::vector<RandomIdeal> random_ideals(std::size_t count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> nvars(2, 4);
  std::uniform_int_distribution<int> ngens(1, 3);
  std::uniform_int_distribution<int> nterms(2, 4);
  std::vector<RandomIdeal> out;
  while (out.size() < count) {
    RandomIdeal r{nvars(rng), {}};
    const int k = ngens(rng);
    for (int i = 0; i < k; ++i) {
      auto g = oracle::random_polynomial(rng, r.arity, 3, nterms(rng));
      if (!g.is_zero() && !g.is_constant()) r.gens.push_back(g);
    }
    if (!r.gens.empty()) out.push_back(std::move(r));
  }
  return out;
}

TEST(PolynomialTest, ArithmeticAndPrinting) {
  const auto x = Polynomial::variable(3, 0);
  const auto y = Polynomial::variable(3, 1);
  const auto f = (x + y) * (x - y);
  EXPECT_EQ(f, x * x - y * y);
  EXPECT_EQ(to_string(f), "t1^2 - t2^2");
  EXPECT_EQ(to_string(Rational(3, 2) * x - Polynomial::one(3)), "3/2*t1 - 1");
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ(f.total_degree(), 2u);
}

TEST(PolynomialTest, ParseRoundTrip) {
  for (const char* s : {"t1^2*t3 - 3/2*t2 + 7", "-t4", "t1*t2*t3*t4 + t1^3", "0"}) {
    const auto p = P(s);
    EXPECT_EQ(P(to_string(p)), p) << s;
  }
}

TEST(PolynomialTest, ParseErrors) {
  EXPECT_THROW(P("t9"), ParseError);
  EXPECT_THROW(P("t1 +"), ParseError);
  EXPECT_THROW(P("t1 $ t2"), ParseError);
}

TEST(GeneratorFileTest, RoundTripAndLineNumbers) {
  std::stringstream s;
  write_generator_file(s, 3, MonomialOrder::lex(), {P("t1 - t2", 3), P("t3^2", 3)});
  const auto f = read_generator_file(s);
  EXPECT_EQ(f.arity, 3u);
  EXPECT_EQ(f.order, MonomialOrder::lex());
  ASSERT_EQ(f.generators.size(), 2u);
  EXPECT_EQ(f.generators[1], P("t3^2", 3));

  std::istringstream bad("ideal 2 degrevlex\nt1\nt1 $ t2\n");
  try {
    read_generator_file(bad);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(FactorSplit, Examples) {
  auto fs = distinct_factors(P("t13*t2 - t13*t4", 13));
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_NE(std::find(fs.begin(), fs.end(), P("t13", 13)), fs.end());
  EXPECT_NE(std::find(fs.begin(), fs.end(), P("t2 - t4", 13)), fs.end());

  fs = distinct_factors(P("t1^2*t2 - t1*t2^2", 2));
  ASSERT_EQ(fs.size(), 3u);
  for (const char* g : {"t1", "t2", "t1 - t2"}) EXPECT_NE(std::find(fs.begin(), fs.end(), P(g, 2)), fs.end()) << g;

  EXPECT_EQ(distinct_factors(P("t1^2 + t2^2 + 1", 2)), std::vector<Polynomial>{P("t1^2 + t2^2 + 1", 2)});
}

TEST(FactorSplit, ProductRecoversInput) {
  std::mt19937 rng(11);
  for (int k = 0; k < 40; ++k) {
    const auto a = oracle::random_polynomial(rng, 3, 2, 3);
    const auto b = oracle::random_polynomial(rng, 3, 2, 3);
    const auto f = a * b;
    if (f.is_zero()) continue;
    const auto fac = factor_split(f);
    Polynomial prod = Polynomial::constant(3, fac.unit);
    for (const auto& g : fac.factors) prod *= g;
    EXPECT_EQ(prod, f);
  }
}

TEST(Division, QuotientsWitnessRemainder) {
  std::mt19937 rng(5);
  for (int k = 0; k < 40; ++k) {
    const auto f = oracle::random_polynomial(rng, 3, 4, 5);
    const std::vector<Polynomial> g{oracle::random_polynomial(rng, 3, 2, 3), oracle::random_polynomial(rng, 3, 2, 3)};
    if (g[0].is_zero() || g[1].is_zero()) continue;
    for (const auto& ord : {MonomialOrder::lex(), MonomialOrder::degrevlex()}) {
      const auto d = divide(f, g, ord);
      Polynomial sum = d.remainder;
      for (std::size_t i = 0; i < g.size(); ++i) sum += d.quotients[i] * g[i];
      EXPECT_EQ(sum, f);
    }
  }
}

TEST(Groebner, SPolynomialsReduceToZero) {
  for (const auto& r : random_ideals(60, 1)) {
    for (const auto& ord : {MonomialOrder::degrevlex(), MonomialOrder::lex()}) {
      const auto basis = buchberger(r.gens, ord);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
          EXPECT_TRUE(normal_form(s_polynomial(basis[i], basis[j], ord), basis, ord).is_zero());
        }
      }
      for (const auto& g : r.gens) EXPECT_TRUE(reduces_to_zero(g, basis, ord));
    }
  }
}

TEST(Groebner, Deterministic) {
  for (const auto& r : random_ideals(20, 2)) {
    EXPECT_EQ(buchberger(r.gens, MonomialOrder::degrevlex()), buchberger(r.gens, MonomialOrder::degrevlex()));
  }
}

TEST(Groebner, MembershipAgreesWithLinearAlgebra) {
  std::mt19937 rng(3);
  int members = 0;
  int others = 0;
  for (const auto& r : random_ideals(60, 4)) {
    const Ideal ideal(r.arity, r.gens);
    Polynomial f(r.arity);
    unsigned deg = 0;
    for (const auto& g : r.gens) {
      const auto h = oracle::random_polynomial(rng, r.arity, 1, 2);
      f += h * g;
      deg = std::max(deg, h.total_degree() + g.total_degree());
    }
    EXPECT_TRUE(ideal_membership(f, ideal));
    EXPECT_TRUE(oracle::bounded_membership(f, r.gens, r.arity, std::max(deg, 1u)));
    ++members;

    const auto g = oracle::random_polynomial(rng, r.arity, 3, 3);
    const bool lib = ideal_membership(g, ideal);
    bool lin = false;
    for (unsigned d = std::max(g.total_degree(), 3u); d <= 7 && !lin; ++d) lin = oracle::bounded_membership(g, r.gens, r.arity, d);
    EXPECT_EQ(lib, lin) << to_string(g);
    ++others;
  }
  EXPECT_GE(members + others, 100);
}

TEST(Groebner, NormalFormIsRingHomomorphism) {
  std::mt19937 rng(9);
  const auto ord = MonomialOrder::degrevlex();
  for (const auto& r : random_ideals(20, 6)) {
    const auto basis = buchberger(r.gens, ord);
    const auto f = oracle::random_polynomial(rng, r.arity, 3, 3);
    const auto g = oracle::random_polynomial(rng, r.arity, 3, 3);
    auto nf = [&](const Polynomial& p) { return normal_form(p, basis, ord); };
    EXPECT_EQ(nf(f + g), nf(nf(f) + nf(g)));
    EXPECT_EQ(nf(f * g), nf(nf(f) * nf(g)));
  }
}

TEST(Groebner, BudgetIsReported) {
  const auto i = I(4, {"t1^3 - t2*t3 + t4", "t2^3 - t1*t4 + 1", "t3^3 - t1*t2 - t4^2"});
  auto budget = Budget::steps(3);
  EXPECT_THROW(buchberger(i.generators(), MonomialOrder::lex(), &budget), BudgetExceeded);
}

TEST(IdealTest, ContainmentAndEquality) {
  const auto a = I(2, {"t1", "t2"});
  const auto b = I(2, {"t1*t2", "t1^2"});
  EXPECT_TRUE(ideal_contains(a, b));
  EXPECT_FALSE(ideal_contains(b, a));
  EXPECT_TRUE(ideal_contains(a, a));
  EXPECT_TRUE(ideal_contains(Ideal::unit(2), a));
  EXPECT_TRUE(same_ideal(I(2, {"t1 + t2", "t1 - t2"}), a));
}

TEST(IdealTest, Saturation) {
  EXPECT_TRUE(same_ideal(saturate(I(2, {"t1*t2"}), P("t1", 2)), I(2, {"t2"})));
  EXPECT_TRUE(saturate(I(2, {"t1^2"}), P("t1", 2)).is_unit());
  const auto i = I(3, {"t1*t2 - t1*t3", "t1^2*t3"});
  EXPECT_TRUE(same_ideal(saturate(i, Polynomial::one(3)), i));
  const auto s = saturate(i, P("t1", 3));
  EXPECT_TRUE(same_ideal(saturate(s, P("t1", 3)), s));
}

TEST(IdealTest, KrullDimension) {
  EXPECT_EQ(krull_dimension(I(13, {"t13"})), 12);
  EXPECT_EQ(krull_dimension(I(3, {"t1*t2", "t1*t3"})), 2);
  EXPECT_EQ(krull_dimension(I(3, {"t1 - t2", "t2 - t3"})), 1);
  EXPECT_EQ(krull_dimension(Ideal(3, {})), 3);
  EXPECT_THROW(krull_dimension(Ideal::unit(2)), std::invalid_argument);
}

TEST(MinimalPrimes, SmallExamples) {
  auto ps = minimal_primes(I(3, {"t1*t2", "t1*t3"}));
  ASSERT_EQ(ps.size(), 2u);
  EXPECT_TRUE(same_ideal(ps[0], I(3, {"t1"})) || same_ideal(ps[1], I(3, {"t1"})));
  EXPECT_TRUE(same_ideal(ps[0], I(3, {"t2", "t3"})) || same_ideal(ps[1], I(3, {"t2", "t3"})));

  ps = minimal_primes(I(2, {"t1^2"}));
  ASSERT_EQ(ps.size(), 1u);
  EXPECT_TRUE(same_ideal(ps[0], I(2, {"t1"})));

  ps = minimal_primes(I(2, {"t1^2*t2 - t1*t2^2"}));
  EXPECT_EQ(ps.size(), 3u);

  EXPECT_THROW(minimal_primes(Ideal::unit(2)), std::invalid_argument);
}

TEST(MinimalPrimes, ComponentsContainIdealAndAreIncomparable) {
  for (const auto& r : random_ideals(25, 8)) {
    const Ideal ideal(r.arity, r.gens);
    if (ideal.is_unit()) continue;
    const auto ps = minimal_primes(ideal);
    ASSERT_FALSE(ps.empty());
    for (std::size_t a = 0; a < ps.size(); ++a) {
      EXPECT_TRUE(ideal_contains(ps[a], ideal));
      for (std::size_t b = 0; b < ps.size(); ++b) {
        if (a == b) continue;
        EXPECT_FALSE(ideal_contains(ps[a], ps[b]));
      }
    }
  }
}

}  // namespace
