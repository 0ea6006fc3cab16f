#include <gtest/gtest.h>

#include "cuegenus/hurwitz.hpp"
#include "cuegenus/oracle.hpp"

using namespace cuegenus;

TEST(Permutation, CompositionAndInverse) {
  const Permutation a = Permutation::from_one_line({2, 3, 1});
  const Permutation t = Permutation::transposition(3, 1, 2);
  EXPECT_EQ((a * a.inverse()).is_identity(), true);
  EXPECT_EQ((a * t)(1), a(t(1)));
  EXPECT_EQ(a.cycle_count(), 1);
  EXPECT_EQ(t.cycle_count(), 2);
  EXPECT_EQ(a.one_line(), (std::vector<int>{2, 3, 1}));
  EXPECT_THROW(Permutation::from_one_line({1, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation::transposition(3, 2, 2), std::invalid_argument);
}

TEST(CountConfigs, Examples) {
  EXPECT_EQ(count_configs({2, 2, true, true}), 4);
  for (int g = 2; g <= 4; ++g) {
    for (bool m : {false, true}) {
      for (bool t : {false, true}) EXPECT_EQ(count_configs({1, g, m, t}), 0);
    }
  }
  EXPECT_EQ(count_configs({3, 2, true, false}), 90);
}

TEST(CountConfigs, MatchesContentFormulas) {
  const GenusTable H = k_genus_table(4, 2);
  const GenusTable F = f_table(4, 2);
  const GenusTable B = b_genus_table(4, 2);
  const GenusTable C = c_table(4, 2);
  for (int d = 1; d <= 4; ++d) {
    for (int g = 1; g <= 2; ++g) {
      EXPECT_EQ(Rational(count_configs({d, g, true, false})), H.at(d, g)) << d << "," << g;
      EXPECT_EQ(Rational(count_configs({d, g, true, true})), F.at(d, g)) << d << "," << g;
      EXPECT_EQ(Rational(count_configs({d, g, false, false})), B.at(d, g)) << d << "," << g;
      EXPECT_EQ(Rational(count_configs({d, g, false, true})), C.at(d, g)) << d << "," << g;
    }
  }
}

TEST(CountConfigs, GenusThreeSpotValues) {
  EXPECT_EQ(count_configs({3, 3, true, true}), 366);
  EXPECT_EQ(count_configs({3, 3, false, true}), 960);
  EXPECT_EQ(count_configs({4, 3, true, true}), 13872);
}

TEST(CountConfigs, MonotoneNeverExceedsClassical) {
  for (int d = 1; d <= 4; ++d) {
    for (int g = 1; g <= 3; ++g) {
      for (bool t : {false, true}) EXPECT_LE(count_configs({d, g, true, t}), count_configs({d, g, false, t}));
    }
  }
}

TEST(CountConfigs, IndependentOfWorkerCount) {
  const Integer serial = count_configs({4, 2, false, true}, 1);
  EXPECT_EQ(count_configs({4, 2, false, true}, 3), serial);
  EXPECT_EQ(count_configs({4, 2, false, true}, 0), serial);
}

TEST(CountConfigs, CapacityLimits) {
  EXPECT_THROW(count_configs({7, 1, true, false}), CapacityError);
  EXPECT_THROW(count_configs({6, 4, true, false}), CapacityError);
  EXPECT_THROW(count_configs({0, 1, true, false}), std::invalid_argument);
  EXPECT_THROW(count_commuting_pairs(8, false), CapacityError);
}

TEST(CommutingPairs, OrderTimesClassNumber) {
  EXPECT_EQ(count_commuting_pairs(1, false), 1);
  EXPECT_EQ(count_commuting_pairs(3, false), 18);
  for (int d = 1; d <= 6; ++d) {
    EXPECT_EQ(count_commuting_pairs(d, false), factorial(static_cast<unsigned>(d)) * partition_count(d)) << d;
  }
  EXPECT_EQ(count_commuting_pairs(4, true), 42);
}
