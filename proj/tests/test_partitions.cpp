#include <gtest/gtest.h>

#include <random>

#include "cuegenus/partitions.hpp"

using namespace cuegenus;

namespace {

Integer falling(long x, int d) {
  Integer r = 1;
  for (int i = 0; i < d; ++i) r *= x - i;
  return r;
}

Integer rising(long x, int d) {
  Integer r = 1;
  for (int i = 0; i < d; ++i) r *= x + i;
  return r;
}

}  // namespace

TEST(Partition, RejectsIncreasingOrNonPositiveParts) {
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
  EXPECT_NO_THROW(Partition({3, 3, 1}));
  EXPECT_EQ(Partition({3, 3, 1}).size(), 7);
}

TEST(Partition, ConjugateTransposesTheDiagram) {
  EXPECT_EQ(Partition({3, 1}).conjugate(), Partition({2, 1, 1}));
  EXPECT_EQ(Partition({2, 2}).conjugate(), Partition({2, 2}));
}

TEST(EnumeratePartitions, SmallCases) {
  EXPECT_EQ(enumerate_partitions(1), std::vector<Partition>{Partition({1})});
  EXPECT_EQ(enumerate_partitions(4).size(), 5u);
  const std::vector<Partition> two_rows{Partition({4}), Partition({3, 1}), Partition({2, 2})};
  EXPECT_EQ(enumerate_partitions(4, 2), two_rows);
  EXPECT_EQ(enumerate_partitions(0).size(), 1u);
  EXPECT_THROW(enumerate_partitions(-1), std::invalid_argument);
}

TEST(EnumeratePartitions, LexicographicallyDecreasing) {
  const auto ps = enumerate_partitions(6);
  for (std::size_t i = 1; i < ps.size(); ++i) {
    const auto a = ps[i - 1].parts();
    const auto b = ps[i].parts();
    EXPECT_TRUE(std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end()));
  }
}

TEST(PartitionCount, KnownValues) {
  EXPECT_EQ(partition_count(1), 1);
  EXPECT_EQ(partition_count(10), 42);
  EXPECT_EQ(partition_count(30), 5604);
  EXPECT_EQ(partition_count(0), 1);
}

TEST(PartitionCount, MatchesEnumeration) {
  for (int d = 0; d <= 20; ++d) EXPECT_EQ(Integer(enumerate_partitions(d).size()), partition_count(d)) << d;
}

TEST(Contents, RowMajor) {
  EXPECT_EQ(contents(Partition({2})), (std::vector<int>{0, 1}));
  EXPECT_EQ(contents(Partition({1, 1})), (std::vector<int>{0, -1}));
  EXPECT_EQ(contents(Partition({2, 1})), (std::vector<int>{0, 1, -1}));
}

TEST(Contents, ConjugateNegatesMultiset) {
  for (int d = 1; d <= 10; ++d) {
    for (const auto& p : enumerate_partitions(d)) {
      auto c = contents(p);
      auto cc = contents(p.conjugate());
      ASSERT_EQ(c.size(), static_cast<std::size_t>(d));
      for (int& x : cc) x = -x;
      std::sort(c.begin(), c.end());
      std::sort(cc.begin(), cc.end());
      EXPECT_EQ(c, cc) << p.to_string();
    }
  }
}

TEST(ContentPolynomial, Examples) {
  EXPECT_EQ(content_polynomial(Partition({1, 1, 1}), 3), 6);
  EXPECT_EQ(content_polynomial(Partition({3}), 3), 60);
  EXPECT_EQ(content_polynomial(Partition({2, 1}), 2), 6);
  EXPECT_EQ(content_product(Partition({2, 1}).parts(), 2), 6);
}

TEST(ContentPolynomial, BetweenFallingAndRisingFactorial) {
  for (int d = 1; d <= 9; ++d) {
    for (long x = d; x <= d + 3; ++x) {
      for (const auto& p : enumerate_partitions(d)) {
        const Integer v = content_product(p.parts(), x);
        EXPECT_LE(falling(x, d), v);
        EXPECT_LE(v, rising(x, d));
      }
    }
  }
}

TEST(ContentPolynomial, MonotoneInDominance) {
  for (int d = 2; d <= 8; ++d) {
    const auto ps = enumerate_partitions(d);
    for (const auto& a : ps) {
      for (const auto& b : ps) {
        if (!dominance_leq(a, b)) continue;
        for (long x = d; x <= d + 2; ++x) EXPECT_LE(content_product(a.parts(), x), content_product(b.parts(), x));
      }
    }
  }
}

TEST(CompleteHomogeneous, Examples) {
  const std::vector<int> none{5, -3};
  EXPECT_EQ(complete_homogeneous(0, none), 1);
  EXPECT_EQ(complete_homogeneous(2, std::vector<int>{0, 1}), 1);
  EXPECT_EQ(complete_homogeneous(2, std::vector<int>{0, 1, 2}), 7);
}

TEST(CompleteHomogeneous, MatchesMonomialEnumerationOnRandomInputs) {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> value(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> xs(static_cast<std::size_t>(1 + trial % 4));
    for (int& x : xs) x = value(rng);
    const int r = trial % 5;
    // brute force over weakly increasing index tuples
    Integer brute = 0;
    std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
    std::function<void(int, std::size_t)> rec = [&](int pos, std::size_t start) {
      if (pos == r) {
        Integer m = 1;
        for (auto i : idx) m *= xs[i];
        brute += m;
        return;
      }
      for (std::size_t i = start; i < xs.size(); ++i) {
        idx[static_cast<std::size_t>(pos)] = i;
        rec(pos + 1, i);
      }
    };
    rec(0, 0);
    EXPECT_EQ(complete_homogeneous(r, xs), brute);
  }
}

TEST(CompleteHomogeneous, OddContentSumsVanish) {
  for (int d = 1; d <= 10; ++d) {
    for (int r = 0; r <= 3; ++r) {
      Integer total = 0;
      for (const auto& p : enumerate_partitions(d)) total += complete_homogeneous(2 * r + 1, contents(p));
      EXPECT_EQ(total, 0) << "d=" << d << " r=" << r;
    }
  }
}

TEST(CompleteHomogeneous, SchurConvexOnContentVectors) {
  // Majorization of sorted content vectors with equal sums.
  auto majorized = [](std::vector<int> x, std::vector<int> y) {
    std::sort(x.rbegin(), x.rend());
    std::sort(y.rbegin(), y.rend());
    long a = 0;
    long b = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      a += x[i];
      b += y[i];
      if (a > b) return false;
    }
    return a == b;
  };
  int compared = 0;
  for (int d = 2; d <= 9; ++d) {
    const auto ps = enumerate_partitions(d);
    for (const auto& lambda : ps) {
      for (const auto& mu : ps) {
        const auto x = contents(lambda);
        const auto y = contents(mu);
        if (!majorized(x, y)) continue;
        ++compared;
        const auto hx = complete_homogeneous_all(6, x);
        const auto hy = complete_homogeneous_all(6, y);
        for (int g = 1; g <= 4; ++g) EXPECT_LE(hx[static_cast<std::size_t>(2 * g - 2)], hy[static_cast<std::size_t>(2 * g - 2)]);
      }
    }
  }
  EXPECT_GT(compared, 100);
}

TEST(CompleteHomogeneous, RowDiagramMaximizesContentSums) {
  for (int d = 1; d <= 9; ++d) {
    const auto row = complete_homogeneous_all(6, contents(Partition({d})));
    for (const auto& p : enumerate_partitions(d)) {
      const auto h = complete_homogeneous_all(6, contents(p));
      for (int g = 1; g <= 4; ++g) EXPECT_LE(h[static_cast<std::size_t>(2 * g - 2)], row[static_cast<std::size_t>(2 * g - 2)]);
    }
  }
}

TEST(CompleteHomogeneous, NotMonotoneInDominanceOrder) {
  // (1,1,1) <= (2,1) in dominance, yet h_2 of the contents drops from 7 to 1.
  ASSERT_TRUE(dominance_leq(Partition({1, 1, 1}), Partition({2, 1})));
  EXPECT_EQ(complete_homogeneous(2, contents(Partition({1, 1, 1}))), 7);
  EXPECT_EQ(complete_homogeneous(2, contents(Partition({2, 1}))), 1);
}

TEST(Dominance, Examples) {
  EXPECT_TRUE(dominance_leq(Partition({1, 1}), Partition({2})));
  EXPECT_FALSE(dominance_leq(Partition({2}), Partition({1, 1})));
  EXPECT_TRUE(dominance_leq(Partition({2, 1, 1}), Partition({3, 1})));
  EXPECT_THROW(dominance_leq(Partition({2}), Partition({3})), std::invalid_argument);
}
