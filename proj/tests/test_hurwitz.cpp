#include <gtest/gtest.h>

#include <cmath>

#include "cuegenus/hurwitz.hpp"

using namespace cuegenus;

namespace {

// Exponential coefficients by genus (rows g = 1..4, columns d = 1..6), frozen from
// an independent rational-arithmetic computation and brute-force enumeration.
const std::vector<std::vector<long long>> kH = {{1, 4, 18, 120, 840, 7920},
                                                {0, 4, 90, 1464, 22200, 346320},
                                                {0, 4, 378, 15480, 471240, 12651120},
                                                {0, 4, 1530, 149304, 8765400, 400865040}};
const std::vector<std::vector<long long>> kB = {{1, 4, 18, 120, 840, 7920},
                                                {0, 4, 108, 1920, 30960, 502560},
                                                {0, 4, 972, 62976, 2553840, 83481120},
                                                {0, 4, 8748, 2242560, 243765360, 17192374560LL}};
const std::vector<std::vector<long long>> kF = {{1, 3, 8, 42, 144, 1440},
                                                {0, 4, 78, 1056, 13080, 169200},
                                                {0, 4, 366, 13872, 383160, 9235080},
                                                {0, 4, 1518, 143040, 7970520, 342325920}};
const std::vector<std::vector<long long>> kC = {{1, 3, 8, 42, 144, 1440},
                                                {0, 4, 96, 1440, 19200, 259200},
                                                {0, 4, 960, 58752, 2196480, 65197440},
                                                {0, 4, 8736, 2206080, 231744000, 15580598400LL}};

void expect_table(const GenusTable& t, const std::vector<std::vector<long long>>& want) {
  for (int g = 1; g <= 4; ++g) {
    for (int d = 1; d <= 6; ++d) {
      EXPECT_EQ(t.at(d, g), Rational(Integer(std::to_string(want[g - 1][d - 1]))))
          << "d=" << d << " g=" << g;
    }
  }
}

}  // namespace

TEST(KNCoefficient, Examples) {
  for (int N = 1; N <= 6; ++N) EXPECT_EQ(kn_coefficient(N, 1), 1);
  EXPECT_EQ(kn_coefficient(2, 2), Rational(16, 3));
  for (int N : {2, 3, 5}) EXPECT_EQ(kn_coefficient(N, 2), ratio(4 * N * N, N * N - 1)) << N;
  EXPECT_THROW(kn_coefficient(0, 2), std::invalid_argument);
}

TEST(KNCoefficient, StableRationalEvaluationAgrees) {
  for (int N = 1; N <= 8; ++N) {
    for (int d = 1; d <= N; ++d) EXPECT_EQ(stable_rational_evaluation(N, d), kn_coefficient(N, d));
  }
}

TEST(KNCoefficient, GenusSumApproachesInStableRange) {
  const int G = 8;
  const GenusTable H = k_genus_table(8, G);
  for (int N = 2; N <= 8; ++N) {
    for (int d = 1; d <= N; ++d) {
      Rational partial = 0;
      for (int g = 1; g <= G; ++g) partial += H.at(d, g) / pow(Rational(N * N), static_cast<unsigned>(g - 1));
      const Rational err = abs(kn_coefficient(N, d) - partial) / kn_coefficient(N, d);
      EXPECT_TRUE(sgn(err) == 0 || err < pow(ratio(d - 1, N), 2 * G) * 10) << "N=" << N << " d=" << d;
    }
  }
}

TEST(GenusTables, FrozenValues) {
  expect_table(k_genus_table(6, 4), kH);
  expect_table(b_genus_table(6, 4), kB);
  expect_table(f_table(6, 4), kF);
  expect_table(c_table(6, 4), kC);
}

TEST(GenusTables, SingleCoefficientHelpers) {
  EXPECT_EQ(h_coefficient(1, 3), 18);
  EXPECT_EQ(h_coefficient(2, 1), 0);
  EXPECT_EQ(h_coefficient(2, 3), 90);
  EXPECT_EQ(b_coefficient(2, 2), 4);
  for (int g = 2; g <= 4; ++g) EXPECT_EQ(b_coefficient(g, 1), 0);
  for (int d = 1; d <= 8; ++d) {
    EXPECT_EQ(h_coefficient(1, d), factorial(static_cast<unsigned>(d)) * partition_count(d));
    EXPECT_EQ(b_coefficient(1, d), factorial(static_cast<unsigned>(d)) * partition_count(d));
  }
}

TEST(GenusTables, GenusOneColumnsOfFAndCCoincide) {
  const GenusTable F = f_table(10, 1);
  const GenusTable C = c_table(10, 1);
  for (int d = 1; d <= 10; ++d) EXPECT_EQ(F.at(d, 1), C.at(d, 1));
  EXPECT_EQ(F.at(4, 1), 42);
}

TEST(GenusTables, HurwitzConventions) {
  EXPECT_EQ(k_genus_table(3, 2).convention(), Convention::exponential_q);
  EXPECT_EQ(f_table(3, 2).convention(), Convention::exponential_q);
  EXPECT_EQ(b_genus_table(3, 2).convention(), Convention::exponential_qt);
  EXPECT_EQ(c_table(3, 2).convention(), Convention::exponential_qt);
}

TEST(LNSeries, SecondCoefficient) {
  for (int N : {2, 3, 5, 7}) {
    const QSeries ln = ln_series(N, 4);
    EXPECT_EQ(ln[2] * 2, ratio(4 * N * N, N * N - 1) - 1) << N;
  }
}

TEST(DeltaSeries, VanishesAtLowOrders) {
  for (int N = 1; N <= 6; ++N) {
    for (int m = 1; m <= 3; ++m) {
      const QSeries delta = delta_series(m, N, 6);
      EXPECT_EQ(delta[0], 0);
      EXPECT_EQ(delta[1], 0);
    }
  }
}

TEST(DeltaSeries, MatchesTheGenusExpansionInTheStableRange) {
  // For d <= N, Delta_{1N}^d = sum_{g >= 2} N^{2-2g} F_g^d; the leading term dominates.
  const int G = 12;
  const GenusTable F = f_table(6, G);
  for (int N : {16, 32}) {
    const QSeries delta = delta_series(1, N, 6);
    for (int d = 2; d <= 6; ++d) {
      const Rational exact = delta[d] * Rational(factorial(static_cast<unsigned>(d)));
      Rational partial = 0;
      for (int g = 2; g <= G; ++g) partial += F.at(d, g) / pow(Rational(N * N), static_cast<unsigned>(g - 1));
      EXPECT_LT(abs(exact - partial) / exact, pow(ratio(d, N), 2 * G - 2) * 100) << "N=" << N << " d=" << d;
      EXPECT_GT(exact / (F.at(d, 2) / (N * N)), 1);
    }
  }
}

TEST(TailNormalizedTable, Properties) {
  const GenusTable H = k_genus_table(8, 4);
  EXPECT_EQ(tail_normalized_table(0, 8, 4), H);
  for (int m = 1; m <= 3; ++m) {
    const GenusTable T = tail_normalized_table(m, 8, 4);
    for (int d = 1; d <= 8; ++d) {
      for (int g = 1; g <= 4; ++g) {
        if (g <= m) {
          EXPECT_EQ(T.at(d, g), 0);
        }
        EXPECT_LE(T.at(d, g), H.at(d, g));
        EXPECT_GE(T.at(d, g), 0);
      }
    }
  }
}

TEST(Stirling, Triangle) {
  EXPECT_EQ(stirling2(4, 2), 7);
  EXPECT_EQ(stirling2(10, 3), 9330);
  EXPECT_EQ(stirling2(0, 0), 1);
  EXPECT_EQ(stirling2(5, 0), 0);
  EXPECT_EQ(stirling2(3, 5), 0);
}

TEST(Bounds, StirlingSandwichExample) {
  // d = 3, g = 2: 3/2 <= 90/18 <= S(4, 2) = 7.
  const GenusTable H = k_genus_table(3, 2);
  EXPECT_EQ(H.at(3, 2) / H.at(3, 1), 5);
  EXPECT_FALSE(check_stirling_sandwich(10, 4).has_value());
}

TEST(Bounds, StirlingSandwichLowerBoundFailsAtDegreeOne) {
  const auto v = check_stirling_sandwich(1, 2, 1);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->d, 1);
  EXPECT_EQ(v->g, 2);
}

TEST(Bounds, HunterAndStirlingGrowth) {
  EXPECT_FALSE(check_hunter_bound(10, 4).has_value());
  EXPECT_FALSE(check_stirling_growth(10, 4).has_value());
}

TEST(MinContentProduct, UnstableTailBound) {
  for (int N = 1; N <= 6; ++N) {
    for (int d = N + 1; d <= 12; ++d) {
      const auto [value, arg] = min_content_product(N, d);
      EXPECT_LE(arg.rows(), N);
      EXPECT_EQ(arg.size(), d);
      // N^lambda > N^d / e^d
      EXPECT_GT(value.get_d(), std::pow(double(N), d) * std::exp(-double(d))) << "N=" << N << " d=" << d;
      for (const auto& p : enumerate_partitions(d, N)) EXPECT_LE(value, content_product(p.parts(), N));
    }
  }
}

TEST(Evaluate, DispatchesEveryFamily) {
  EXPECT_EQ(evaluate({Family::H, 3, 1, 1, 1}), 18);
  EXPECT_EQ(evaluate({Family::KN, 2, 1, 2, 1}), Rational(16, 3));
  EXPECT_EQ(evaluate({Family::F, 1, 2, 1, 1}), 0);
  EXPECT_EQ(evaluate({Family::C, 3, 3, 1, 1}), 960);
  EXPECT_EQ(evaluate({Family::B, 2, 2, 1, 1}), 4);
  EXPECT_EQ(evaluate({Family::LN, 2, 1, 3, 1}), Rational(7, 2));
  EXPECT_EQ(evaluate({Family::Delta, 1, 1, 3, 1}), 0);
  EXPECT_THROW(evaluate({Family::H, 0, 1, 1, 1}), std::invalid_argument);
  EXPECT_EQ(family_from_string("LN"), Family::LN);
  EXPECT_THROW(family_from_string("Q"), std::invalid_argument);
}
