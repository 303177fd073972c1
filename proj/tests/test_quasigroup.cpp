#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "lightnet/lightnet.hpp"
#include "oracles.hpp"

namespace {

using namespace lightnet;

const std::vector<RolePermutation>& all_roles() {
  static const std::vector<RolePermutation> roles{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  return roles;
}

TEST(Catalog, HasTwelveNamedTables) {
  const auto cat = load_catalog();
  ASSERT_EQ(cat.size(), 12u);
  for (std::size_t k = 0; k < cat.size(); ++k) {
    EXPECT_EQ(cat[k].order(), 6u);
    EXPECT_EQ(cat[k].name(), "#6." + std::to_string(k + 1) + ".1.1");
  }
}

TEST(Catalog, FirstTableSecondRow) {
  const auto q = load_catalog().front();
  const std::vector<Element> row{1, 2, 3, 4, 5, 0};
  EXPECT_EQ(q.table()[1], row);
}

TEST(Catalog, LeftDivideExample) { EXPECT_EQ(left_divide(load_catalog().front(), 0, 3), 3); }

TEST(Catalog, DataFilesMatchEmbeddedTables) {
  const auto cat = load_catalog();
  for (std::size_t k = 0; k < cat.size(); ++k) {
    std::ifstream in(std::string(LIGHTNET_DATA_DIR) + "/catalog/6." + std::to_string(k + 1) + ".txt");
    ASSERT_TRUE(in) << "missing data file for table " << k + 1;
    const auto q = read_cayley(in);
    EXPECT_EQ(q.name(), cat[k].name());
    EXPECT_EQ(q.table(), cat[k].table());
  }
}

TEST(LatinSquareTest, DivisionsInvertMultiplication) {
  for (const auto& q : load_catalog()) {
    for (Element x = 0; x < 6; ++x) {
      for (Element y = 0; y < 6; ++y) {
        const Element z = multiply(q, x, y);
        EXPECT_EQ(left_divide(q, x, z), y);
        EXPECT_EQ(right_divide(q, z, y), x);
      }
    }
  }
}

TEST(LatinSquareTest, RejectsRepeatedEntries) {
  EXPECT_THROW(LatinSquare({{0, 1}, {0, 1}}), std::invalid_argument);
  EXPECT_THROW(LatinSquare({{0, 0}, {1, 1}}), std::invalid_argument);
  EXPECT_THROW(LatinSquare({{0, 2}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(LatinSquare({{0, 1}}), std::invalid_argument);
}

TEST(LatinSquareTest, OutOfRangeElement) {
  const auto q = load_catalog().front();
  EXPECT_THROW(q.multiply(6, 0), std::out_of_range);
  EXPECT_THROW(q.left_divide(0, -1), std::out_of_range);
}

TEST(ReadCayley, ParsesNameAndRows) {
  std::istringstream in("# demo\n3\n1 2 3\n2 3 1\n3 1 2\n");
  const auto q = read_cayley(in);
  EXPECT_EQ(q.name(), "demo");
  EXPECT_EQ(q.order(), 3u);
  EXPECT_EQ(q.multiply(1, 2), 0);
}

TEST(ReadCayley, ReportsLineOfBadRow) {
  std::istringstream in("3\n1 2 3\n2 3\n3 1 2\n");
  try {
    read_cayley(in);
    FAIL() << "accepted a short row";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(ReadCayley, ReportsOutOfRangeEntry) {
  std::istringstream in("2\n1 2\n2 7\n");
  try {
    read_cayley(in);
    FAIL() << "accepted entry 7";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(ReadCayley, RejectsNonLatinTable) {
  std::istringstream in("2\n1 2\n1 2\n");
  EXPECT_THROW(read_cayley(in), ParseError);
}

TEST(ReadCayley, RoundTrip) {
  for (const auto& q : load_catalog()) {
    std::stringstream s;
    write_cayley(s, q);
    const auto back = read_cayley(s);
    EXPECT_EQ(back.table(), q.table());
    EXPECT_EQ(back.name(), q.name());
  }
}

TEST(Conjugate, IdentityAndInverse) {
  for (const auto& q : load_catalog()) {
    EXPECT_EQ(conjugate(q, kIdentityRoles).table(), q.table());
    for (const auto& s : all_roles()) {
      EXPECT_EQ(conjugate(conjugate(q, s), inverse(s)).table(), q.table());
    }
  }
}

TEST(Conjugate, SwapIsTranspose) {
  const auto q = load_catalog().front();
  const auto t = conjugate(q, {1, 0, 2});
  for (Element x = 0; x < 6; ++x) {
    for (Element y = 0; y < 6; ++y) EXPECT_EQ(t.multiply(x, y), q.multiply(y, x));
  }
}

TEST(Conjugate, RespectsComposition) {
  for (const auto& q : load_catalog()) {
    for (const auto& s : all_roles()) {
      for (const auto& t : all_roles()) {
        EXPECT_EQ(conjugate(conjugate(q, s), t).table(), conjugate(q, compose(t, s)).table());
      }
    }
  }
}

TEST(PrincipalIsotope, HasTwoSidedUnit) {
  for (const auto& q : load_catalog()) {
    for (Element u = 0; u < 6; ++u) {
      for (Element v = 0; v < 6; ++v) {
        const auto l = principal_isotope(q, u, v);
        const Element e = q.multiply(v, u);
        for (Element x = 0; x < 6; ++x) {
          EXPECT_EQ(l.multiply(e, x), x);
          EXPECT_EQ(l.multiply(x, e), x);
        }
      }
    }
  }
}

TEST(PrincipalIsotope, GroupAtUnitIsUnchanged) {
  const auto q = load_catalog().front();
  const auto e = q.unit();
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(principal_isotope(q, *e, *e).table(), q.table());
}

TEST(GeneratedSubsquare, Examples) {
  const auto q = load_catalog().front();
  const auto s = generated_subsquare(q, {0, 2}, {0}, {});
  const std::vector<Element> evens{0, 2, 4};
  EXPECT_EQ(s.s1, evens);
  EXPECT_EQ(s.s2, evens);
  EXPECT_EQ(s.s3, evens);

  const auto one = generated_subsquare(q, {3}, {4}, {});
  EXPECT_EQ(one.order(), 1u);
  EXPECT_EQ(one.s3, std::vector<Element>{q.multiply(3, 4)});

  const std::vector<Element> all{0, 1, 2, 3, 4, 5};
  const auto full = generated_subsquare(q, all, all, all);
  EXPECT_EQ(full.s1, all);
  EXPECT_EQ(full.s3, all);
}

TEST(GeneratedSubsquare, Idempotent) {
  for (const auto& q : load_catalog()) {
    for (Element x = 0; x < 6; ++x) {
      for (Element y = x + 1; y < 6; ++y) {
        for (Element z = 0; z < 6; ++z) {
          const auto s = generated_subsquare(q, {x, y}, {z}, {});
          EXPECT_EQ(generated_subsquare(q, s.s1, s.s2, s.s3), s);
          EXPECT_TRUE(is_subsquare(q, s));
        }
      }
    }
  }
}

TEST(Subsquares, MatchBruteForceOnEveryTable) {
  for (const auto& q : load_catalog()) {
    EXPECT_EQ(all_proper_subsquares(q), oracle::brute_force_subsquares(q)) << q.name();
  }
}

TEST(Subsquares, OrdersTwoOrThreeWithoutNesting) {
  for (const auto& q : load_catalog()) {
    const auto subs = all_proper_subsquares(q);
    for (const auto& s : subs) {
      EXPECT_TRUE(s.order() == 2 || s.order() == 3);
      if (s.order() != 3) continue;
      for (const auto& t : subs) {
        if (t.order() != 2) continue;
        const bool inside = std::includes(s.s1.begin(), s.s1.end(), t.s1.begin(), t.s1.end()) &&
                            std::includes(s.s2.begin(), s.s2.end(), t.s2.begin(), t.s2.end()) &&
                            std::includes(s.s3.begin(), s.s3.end(), t.s3.begin(), t.s3.end());
        EXPECT_FALSE(inside);
      }
    }
  }
}

TEST(Subsquares, CyclicTableHasOrderThreeSubsquares) {
  const auto subs = all_proper_subsquares(load_catalog().front());
  const auto threes = std::count_if(subs.begin(), subs.end(), [](const auto& s) { return s.order() == 3; });
  EXPECT_EQ(threes, 4);
}

}  // namespace
