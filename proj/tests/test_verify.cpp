#include <gtest/gtest.h>

#include "cuegenus/verify.hpp"

using namespace cuegenus;

TEST(Verify, QuickLevelPasses) {
  std::size_t seen = 0;
  const auto results = run_verification(TableStore{}, VerifyLevel::quick, 0, [&](const CheckResult&) { ++seen; });
  EXPECT_EQ(seen, results.size());
  EXPECT_GE(results.size(), 8u);
  for (const auto& r : results) EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
}

TEST(Verify, ReferencePolynomialHasZeroConstantTerm) {
  EXPECT_EQ(poly_to_series(reference_f2_polynomial(), 3)[0], 0);
}
