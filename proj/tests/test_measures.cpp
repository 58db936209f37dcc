#include <gtest/gtest.h>

#include <cmath>

#include "fuzzcmp/measures.hpp"
#include "support/corpus.hpp"

namespace fuzzcmp {
namespace {

using testing::Corpus;
using testing::kUnit10;

const Universe kRatings{1.0, 5.0};

TEST(AlphaGrid, LevelsAreIOverM) {
  const AlphaGrid g(4);
  ASSERT_EQ(g.levels().size(), 4u);
  EXPECT_EQ(g.levels()[0], 0.25);
  EXPECT_EQ(g.levels()[3], 1.0);
  EXPECT_THROW(AlphaGrid(0), Error);
}

TEST(SampleGrid, UniformAndIntegers) {
  const auto u = SampleGrid::uniform(kRatings, 201);
  EXPECT_EQ(u.n(), 201u);
  EXPECT_EQ(u.xs().front(), 1.0);
  EXPECT_EQ(u.xs().back(), 5.0);
  const auto i = SampleGrid::integers(Universe{0.5, 4.2});
  EXPECT_EQ(i.xs(), (std::vector<double>{1, 2, 3, 4}));
  EXPECT_THROW(SampleGrid::uniform(kRatings, 1), Error);
}

TEST(Jaccard, Reflexive) {
  Corpus corpus(1);
  const auto grid = SampleGrid::uniform(kUnit10, 201);
  for (int k = 0; k < 20; ++k) {
    const auto a = corpus.convex_normal();
    EXPECT_EQ(jaccard(a, a, grid), 1.0);
  }
}

TEST(Jaccard, HandExampleOnIntegerGrid) {
  const FuzzySet a("A", kRatings, {{1, 0.5}, {2, 1.0}, {3, 0.5}});
  const FuzzySet b("B", kRatings, {{2, 0.5}, {3, 1.0}, {4, 0.5}});
  // min-sum 1.0, max-sum 3.0
  EXPECT_DOUBLE_EQ(jaccard(a, b, SampleGrid::integers(kRatings)), 1.0 / 3.0);
}

TEST(Jaccard, DisjointIsZero) {
  const auto a = make_triangle("a", kRatings, 1.0, 1.5, 2.0);
  const auto b = make_triangle("b", kRatings, 4.0, 4.5, 5.0);
  EXPECT_EQ(jaccard(a, b, SampleGrid::uniform(kRatings, 201)), 0.0);
}

TEST(Jaccard, Errors) {
  const auto a = make_triangle("a", kRatings, 1.0, 2.0, 3.0);
  const auto b = make_triangle("b", Universe{1.0, 6.0}, 1.0, 2.0, 3.0);
  try {
    jaccard(a, b, SampleGrid::integers(kRatings));
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("universe mismatch"), std::string::npos);
  }
  // both spikes fall between integer grid points
  const FuzzySet s1("s1", kRatings, {{1.25, 0.0}, {1.5, 1.0}, {1.75, 0.0}});
  const FuzzySet s2("s2", kRatings, {{2.25, 0.0}, {2.5, 1.0}, {2.75, 0.0}});
  try {
    jaccard(s1, s2, SampleGrid::integers(kRatings));
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("degenerate pair"), std::string::npos);
  }
}

TEST(Jaccard, SymmetricAndBounded) {
  Corpus corpus(2);
  const auto grid = SampleGrid::uniform(kUnit10, 201);
  for (int k = 0; k < 300; ++k) {
    const auto a = corpus.convex_normal("a");
    const auto b = corpus.convex_normal("b");
    const double s = jaccard(a, b, grid);
    EXPECT_EQ(s, jaccard(b, a, grid));
    EXPECT_GE(s, 0.0);
    EXPECT_LE(s, 1.0);
  }
}

TEST(Jaccard, TransitiveOnNestedSets) {
  Corpus corpus(3);
  const auto grid = SampleGrid::uniform(kUnit10, 201);
  for (int k = 0; k < 300; ++k) {
    const auto [a, b, c] = corpus.nested_triple();
    EXPECT_GE(jaccard(a, b, grid), jaccard(a, c, grid) - 1e-12);
  }
}

TEST(IntervalHausdorff, Examples) {
  EXPECT_EQ(interval_hausdorff({0, 1}, {0, 1}), 0.0);
  EXPECT_EQ(interval_hausdorff({1, 2}, {3, 5}), 3.0);
  EXPECT_EQ(interval_hausdorff({0, 10}, {1, 9}), 1.0);
}

TEST(IntervalHausdorff, DirectionalExamples) {
  EXPECT_EQ(interval_hausdorff_directional({1, 2}, {3, 5}), 3.0);
  EXPECT_EQ(interval_hausdorff_directional({3, 5}, {1, 2}), -3.0);
  EXPECT_EQ(interval_hausdorff_directional({0, 4}, {1, 3}), -1.0);
  // |dl| == |dr| takes the right endpoint
  EXPECT_EQ(interval_hausdorff_directional({1, 3}, {0, 4}), 1.0);
}

Interval random_interval(Corpus& c) {
  const double l = c.uniform(-5.0, 5.0);
  return {l, l + c.uniform(0.0, 4.0)};
}

TEST(IntervalHausdorff, MetricAxioms) {
  Corpus corpus(4);
  for (int k = 0; k < 1000; ++k) {
    const auto a = random_interval(corpus);
    const auto b = random_interval(corpus);
    const auto c = random_interval(corpus);
    EXPECT_EQ(interval_hausdorff(a, a), 0.0);
    EXPECT_GT(interval_hausdorff(a, b), 0.0);
    EXPECT_EQ(interval_hausdorff(a, b), interval_hausdorff(b, a));
    EXPECT_LE(interval_hausdorff(a, c), interval_hausdorff(a, b) + interval_hausdorff(b, c) + 1e-12);

    const double d = interval_hausdorff_directional(a, b);
    EXPECT_LE(std::abs(d), interval_hausdorff(a, b));
    EXPECT_EQ(std::abs(d), std::abs(interval_hausdorff_directional(b, a)));
    EXPECT_EQ(d, -interval_hausdorff_directional(b, a));
  }
}

TEST(AlphaDistance, SelfIdentity) {
  Corpus corpus(5);
  const AlphaGrid grid(100);
  for (int k = 0; k < 50; ++k) {
    const auto a = corpus.convex_normal();
    EXPECT_EQ(alpha_distance(a, a, grid, true), 0.0);
    EXPECT_EQ(alpha_distance(a, a, grid, false), 0.0);
  }
}

TEST(AlphaDistance, TranslatedTrianglesClosedForm) {
  const auto a = make_triangle("A", kUnit10, 1, 2, 3);
  const auto b = make_triangle("B", kUnit10, 3, 4, 5);
  // A_alpha = [1+a, 3-a], B_alpha = [3+a, 5-a]: distance 2 at every level
  EXPECT_NEAR(alpha_distance(a, b, AlphaGrid(100), true), 2.0, 1e-12);
  EXPECT_NEAR(alpha_distance(b, a, AlphaGrid(100), true), -2.0, 1e-12);
  EXPECT_NEAR(alpha_distance(a, b, AlphaGrid(10000), true), 2.0, 1e-9);
  EXPECT_NEAR(alpha_distance(a, b, AlphaGrid(10000), false), 2.0, 1e-9);
}

TEST(AlphaDistance, WidthChangeMatchesRiemannSum) {
  // A_alpha = [4+a, 6-a], B_alpha = [5a, 10-5a]: h = 4(1-a); the i/m sum
  // evaluates to 4(m-1)/(3m).
  const auto a = make_triangle("A", kUnit10, 4, 5, 6);
  const auto b = make_triangle("B", kUnit10, 0, 5, 10);
  for (int m : {1, 10, 100, 200}) {
    EXPECT_NEAR(alpha_distance(a, b, AlphaGrid(m), false), 4.0 * (m - 1) / (3.0 * m), 1e-12);
  }
}

TEST(AlphaDistance, RejectsSubnormalAndMismatch) {
  const FuzzySet sub("sub", kUnit10, {{1, 0}, {2, 0.8}, {3, 0}});
  const auto t = make_triangle("t", kUnit10, 1, 2, 3);
  try {
    alpha_distance(sub, t, AlphaGrid(10), true);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("set not normal"), std::string::npos);
  }
  EXPECT_THROW(alpha_distance(t, make_triangle("u", Universe{0, 9}, 1, 2, 3), AlphaGrid(10), true),
               Error);
}

TEST(AlphaDistance, StrictModeRejectsNonConvex) {
  const FuzzySet bi("bi", kRatings, {{1, 1}, {2, 0}, {3, 0}, {4, 0}, {5, 1}});
  const auto t = make_triangle("t", kRatings, 1, 2, 3);
  EXPECT_NO_THROW(alpha_distance(bi, t, AlphaGrid(10), true));
  EXPECT_THROW(alpha_distance(bi, t, AlphaGrid(10), true, CutMode::Strict), Error);
}

TEST(AlphaDistance, MetricPropertiesOnRandomSets) {
  Corpus corpus(6);
  const AlphaGrid grid(100);
  for (int k = 0; k < 300; ++k) {
    const auto a = corpus.convex_normal("a");
    const auto b = corpus.convex_normal("b");
    const auto c = corpus.convex_normal("c");
    const double ab = alpha_distance(a, b, grid, false);
    EXPECT_GE(ab, 0.0);
    EXPECT_EQ(ab, alpha_distance(b, a, grid, false));
    EXPECT_LE(alpha_distance(a, c, grid, false),
              ab + alpha_distance(b, c, grid, false) + 1e-12);
    EXPECT_EQ(alpha_distance(a, b, grid, true), -alpha_distance(b, a, grid, true));
    EXPECT_LE(std::abs(alpha_distance(a, b, grid, true)), ab + 1e-12);
  }
}

TEST(AlphaDistance, TransitiveOnNestedSets) {
  Corpus corpus(8);
  const AlphaGrid grid(100);
  for (int k = 0; k < 300; ++k) {
    const auto [a, b, c] = corpus.nested_triple();
    EXPECT_LE(alpha_distance(a, b, grid, false), alpha_distance(a, c, grid, false) + 1e-12);
  }
}

}  // namespace
}  // namespace fuzzcmp
