#include <gtest/gtest.h>

#include <random>

#include "prymslope/toroidal.hpp"

using prym::IntMatrix;
using prym::Rational;
using prym::SemiIntegralMatrix;

namespace {

// Dim-2 exhaustive search with the 2x2 PSD test written out directly.
Rational oracle_full_min_2(const IntMatrix& t, int bound) {
  const int k = bound * bound * 2;
  std::optional<Rational> best;
  for (int a = 0; a <= k; ++a) {
    for (int c = 0; c <= k; ++c) {
      for (int b = -k; b <= k; ++b) {
        if (a == 0 && b == 0 && c == 0) continue;
        if (static_cast<long long>(a) * c < static_cast<long long>(b) * b) continue;
        const Rational value = Rational(t[0][0] * a + 2 * t[0][1] * b + t[1][1] * c, 2);
        if (!best || value < *best) best = value;
      }
    }
  }
  return *best;
}

Rational oracle_rank_one_2(const IntMatrix& t, int bound) {
  std::optional<Rational> best;
  for (int x = -bound; x <= bound; ++x) {
    for (int y = -bound; y <= bound; ++y) {
      if (x == 0 && y == 0) continue;
      const Rational value = Rational(t[0][0] * x * x + 2 * t[0][1] * x * y + t[1][1] * y * y, 2);
      if (!best || value < *best) best = value;
    }
  }
  return *best;
}

}  // namespace

TEST(GeneralSlope, MinConventions) {
  const prym::BoundaryWeightedClass h{12, {Rational(3, 2), 0, 2}};
  EXPECT_EQ(prym::general_slope(h).value(), 8);
  EXPECT_TRUE(prym::general_slope(h, prym::MinConvention::AllDivisors).is_infinite());
  EXPECT_TRUE(prym::general_slope({5, {0, 0}}).is_infinite());
  EXPECT_EQ(prym::general_slope({108, {14}}).value(), Rational(54, 7));
}

TEST(Psd, IntegerAndRationalTestsAgree) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 300; ++trial) {
      IntMatrix m(n, std::vector<std::int64_t>(n));
      std::vector<std::vector<Rational>> r(n, std::vector<Rational>(n));
      for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
          m[i][j] = m[j][i] = entry(rng);
          r[i][j] = r[j][i] = m[i][j];
        }
      }
      EXPECT_EQ(prym::is_positive_semidefinite(m), prym::is_positive_semidefinite(r));
    }
  }
}

TEST(Psd, KnownCases) {
  EXPECT_TRUE(prym::is_positive_semidefinite(IntMatrix{{1, 1}, {1, 1}}));
  EXPECT_FALSE(prym::is_positive_semidefinite(IntMatrix{{0, 1}, {1, 0}}));
  EXPECT_FALSE(prym::is_positive_semidefinite(IntMatrix{{0, 0}, {0, -1}}));
  EXPECT_EQ(prym::matrix_rank(IntMatrix{{1, 1}, {1, 1}}), 1);
  EXPECT_EQ(prym::matrix_rank(IntMatrix{{2, 1, 0}, {1, 2, 1}, {0, 1, 2}}), 3);
}

TEST(SemiIntegral, Construction) {
  const auto s = SemiIntegralMatrix::from_entries({{1, Rational(1, 2)}, {Rational(1, 2), 1}});
  EXPECT_EQ(s.doubled(), (IntMatrix{{2, 1}, {1, 2}}));
  EXPECT_EQ(s.entry(0, 1), Rational(1, 2));
  EXPECT_EQ(s.evaluate({1, -1}), 1);
  EXPECT_EQ(s.trace_with(IntMatrix{{1, 0}, {0, 1}}), 2);
  EXPECT_THROW(SemiIntegralMatrix::from_doubled({{1, 0}, {0, 2}}), std::invalid_argument);
  EXPECT_THROW(SemiIntegralMatrix::from_doubled({{2, 3}, {3, 2}}), std::invalid_argument);
  EXPECT_THROW(SemiIntegralMatrix::from_doubled({{2, 1}, {0, 2}}), std::invalid_argument);
  EXPECT_THROW(SemiIntegralMatrix::from_entries({{Rational(1, 2)}}), std::invalid_argument);
}

TEST(RankOneMin, IdentityExample) {
  const auto s = SemiIntegralMatrix::from_doubled({{2, 0}, {0, 2}});
  const auto r = prym::rank_one_min(s, 2);
  EXPECT_EQ(r.value, 1);
  EXPECT_EQ(r.argmin, (std::vector<std::int64_t>{0, 1}));
}

TEST(RankOneMin, ScalingAndMonotonicity) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const auto s = prym::random_semi_integral(3, rng);
    const auto base = prym::rank_one_min(s, 2);
    EXPECT_EQ(prym::rank_one_min(s.scaled(3), 2).value, 3 * base.value);
    EXPECT_LE(prym::rank_one_min(s, 3).value, base.value);
    EXPECT_EQ(s.evaluate(base.argmin), base.value);
  }
}

TEST(FullMin, MatchesDimTwoOracle) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = prym::random_semi_integral(2, rng);
    const auto full = prym::full_min(s, 2);
    EXPECT_EQ(full.value, oracle_full_min_2(s.doubled(), 2));
    EXPECT_EQ(prym::rank_one_min(s, 2).value, oracle_rank_one_2(s.doubled(), 2));
    EXPECT_EQ(s.trace_with(full.argmin), full.value);
    EXPECT_TRUE(prym::is_positive_semidefinite(full.argmin));
  }
}

TEST(FullMin, NeverAboveRankOne) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const auto s = prym::random_semi_integral(3, rng);
    EXPECT_LE(prym::full_min(s, 2).value, prym::rank_one_min(s, 2).value);
  }
}

TEST(FullMin, RejectsLargeDimension) {
  const auto s = SemiIntegralMatrix::from_doubled(
      {{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}});
  EXPECT_THROW(prym::full_min(s, 1), std::length_error);
}

TEST(BarnesCohn, SeededRunsAgree) {
  const auto a = prym::verify_barnes_cohn(20, 2, 3, 99);
  const auto b = prym::verify_barnes_cohn(20, 2, 3, 99);
  EXPECT_TRUE(a.all_passed());
  EXPECT_EQ(a.to_json(), b.to_json());
  EXPECT_EQ(a.to_json()["bound"], 3);
}
