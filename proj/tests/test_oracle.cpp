#include <gtest/gtest.h>

#include <vector>

#include "fuzzcmp/measures.hpp"
#include "oracle/oracle.hpp"
#include "support/corpus.hpp"

namespace fuzzcmp {
namespace {

using testing::kUnit10;

TEST(OracleJaccard, IdenticalAndDisjoint) {
  const auto a = make_trapezoid("a", kUnit10, 1, 2, 4, 6);
  EXPECT_EQ(oracle::oracle_jaccard(oracle::densify(a), oracle::densify(a)), 1.0);
  const auto b = make_triangle("b", kUnit10, 7, 8, 9);
  EXPECT_EQ(oracle::oracle_jaccard(oracle::densify(a), oracle::densify(b)), 0.0);
}

TEST(OracleJaccard, ShiftedPlateausOnDenseGrid) {
  // On the integer grid this pair scores 1/3; with linear interpolation
  // the ratio of integrals is (5/8) / (19/8) = 5/19.
  const Universe u{1.0, 5.0};
  const FuzzySet a("A", u, {{1, 0.5}, {2, 1.0}, {3, 0.5}});
  const FuzzySet b("B", u, {{2, 0.5}, {3, 1.0}, {4, 0.5}});
  EXPECT_NEAR(oracle::oracle_jaccard(oracle::densify(a), oracle::densify(b)), 5.0 / 19.0, 2e-3);
  EXPECT_NEAR(jaccard(a, b, SampleGrid::integers(u)), 1.0 / 3.0, 1e-12);
}

TEST(OracleJaccard, GridMismatch) {
  const auto a = make_triangle("a", kUnit10, 1, 2, 3);
  EXPECT_THROW(oracle::oracle_jaccard(oracle::densify(a), oracle::densify(a, 500)),
               std::invalid_argument);
}

TEST(OracleAlphaDistance, TranslatedTriangles) {
  const auto a = make_triangle("A", kUnit10, 1, 2, 3);
  const auto b = make_triangle("B", kUnit10, 3, 4, 5);
  EXPECT_EQ(oracle::oracle_alpha_distance(a, a, 10000, true), 0.0);
  EXPECT_NEAR(oracle::oracle_alpha_distance(a, b, 10000, true), 2.0, 1e-3);
  EXPECT_NEAR(oracle::oracle_alpha_distance(b, a, 10000, true), -2.0, 1e-3);
  EXPECT_NEAR(oracle::oracle_alpha_distance(a, b, 10000, false), 2.0, 1e-3);
}

TEST(OracleOwa, DegenerateAndPermuted) {
  EXPECT_EQ(oracle::oracle_owa({0.2, 0.9}, {0.0, 1.0}, oracle::Ordering::Standard), 0.2);
  EXPECT_EQ(oracle::oracle_owa({-0.9, 0.2}, {0.0, 1.0}, oracle::Ordering::ByAbsoluteValue), 0.2);
  EXPECT_EQ(oracle::oracle_owa({0.1, 0.5, 0.3}, {0.5, 0.3, 0.2}, oracle::Ordering::Standard),
            oracle::oracle_owa({0.3, 0.1, 0.5}, {0.5, 0.3, 0.2}, oracle::Ordering::Standard));
  EXPECT_THROW(oracle::oracle_owa({0.1}, {0.5, 0.5}, oracle::Ordering::Standard),
               std::invalid_argument);
}

}  // namespace
}  // namespace fuzzcmp
