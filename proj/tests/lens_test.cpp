#include <gtest/gtest.h>

#include <numeric>

#include "lensurg/lens.hpp"
#include "oracles/residue_scan.hpp"

using namespace lensurg;

TEST(CanonicalForm, Examples) {
  EXPECT_EQ(canonical_form(LensParams(5, 4)), LensParams(5, 1));
  EXPECT_EQ(canonical_form(LensParams(16, 9)), LensParams(16, 7));
  EXPECT_EQ(canonical_form(LensParams(7, 2)), LensParams(7, 2));
  EXPECT_EQ(canonical_form(LensParams(7, 3)), LensParams(7, 2));
  EXPECT_EQ(canonical_form(LensParams(2, 1)), LensParams(2, 1));
}

TEST(Homeomorphic, Examples) {
  EXPECT_TRUE(homeomorphic(LensParams(16, 9), LensParams(16, 7)));
  EXPECT_TRUE(homeomorphic(LensParams(5, 4), LensParams(5, 1)));
  EXPECT_FALSE(homeomorphic(LensParams(7, 1), LensParams(7, 2)));
  EXPECT_FALSE(homeomorphic(LensParams(7, 1), LensParams(8, 1)));
  EXPECT_TRUE(homeomorphic(LensParams(11, 3), LensParams(11, 3)));
}

TEST(CanonicalForm, ExhaustiveAgainstOrbitOracle) {
  for (Int p = 2; p <= 200; ++p) {
    std::vector<Int> qs;
    for (Int q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1)
        qs.push_back(q);
    for (Int a : qs) {
      const LensParams la(p, a);
      const LensParams ca = canonical_form(la);
      ASSERT_EQ(canonical_form(ca), ca);
      ASSERT_LE(2 * ca.q(), p);
      ASSERT_TRUE(homeomorphic(la, ca));
      for (Int b : qs) {
        const LensParams lb(p, b);
        const bool h = homeomorphic(la, lb);
        ASSERT_EQ(h, oracle_scan::same_lens(p, a, b)) << p << ": " << a << " vs " << b;
        ASSERT_EQ(h, ca == canonical_form(lb));
      }
    }
  }
}

TEST(Homeomorphic, EquivalenceRelation) {
  for (Int p = 2; p <= 100; ++p) {
    std::vector<LensParams> ls;
    for (Int q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1)
        ls.emplace_back(p, q);
    for (const auto &a : ls) {
      ASSERT_TRUE(homeomorphic(a, a));
      for (const auto &b : ls) {
        ASSERT_EQ(homeomorphic(a, b), homeomorphic(b, a));
        if (!homeomorphic(a, b))
          continue;
        for (const auto &c : ls)
          if (homeomorphic(b, c))
            ASSERT_TRUE(homeomorphic(a, c));
      }
    }
  }
}

TEST(NormalizeU, Examples) {
  EXPECT_EQ(normalize_u(DualKnotSpec(LensParams(5, 1), 3)).u(), 2);
  EXPECT_EQ(normalize_u(DualKnotSpec(LensParams(5, 1), 2)).u(), 2);
  EXPECT_EQ(normalize_u(DualKnotSpec(LensParams(16, 7), 13)).u(), 3);
}

TEST(NormalizeU, IdempotentAndInRange) {
  for (Int p = 2; p <= 60; ++p)
    for (Int u = 1; u < p; ++u) {
      const DualKnotSpec s(LensParams(p, 1), u);
      const auto n = normalize_u(s);
      EXPECT_EQ(normalize_u(n), n);
      EXPECT_GE(n.u(), 1);
      EXPECT_LE(2 * n.u(), p);
    }
}

TEST(Moser, TorusKnotLensSpaces) {
  EXPECT_EQ(oracle::moser_lens_space({5, 3, +1}), LensParams(16, 7));
  EXPECT_EQ(oracle::moser_lens_space({7, 3, -1}), LensParams(20, 9));
  EXPECT_EQ(oracle::moser_lens_space({2, 3, -1}), LensParams(5, 1));
  // Mirrors land in the same unoriented class.
  EXPECT_EQ(oracle::moser_lens_space({-5, 3, -1}), LensParams(16, 7));
}

TEST(Moser, Validation) {
  EXPECT_THROW(oracle::TorusKnotSurgery(4, 2, 1), std::invalid_argument);
  EXPECT_THROW(oracle::TorusKnotSurgery(1, 3, 1), std::invalid_argument);
  EXPECT_THROW(oracle::TorusKnotSurgery(2, 3, 0), std::invalid_argument);
}
