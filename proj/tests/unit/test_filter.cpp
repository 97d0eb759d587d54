#include <gtest/gtest.h>

#include <cmath>

#include "loctrig/filter.hpp"
#include "oracles.hpp"

using loctrig::eval_filter;

TEST(Filter, PlateauAndCutoff) {
  EXPECT_EQ(eval_filter(0.3), 1.0);
  EXPECT_EQ(eval_filter(1.2), 0.0);
  EXPECT_EQ(eval_filter(0.0), 1.0);
  EXPECT_EQ(eval_filter(-0.5), 1.0);
  EXPECT_EQ(eval_filter(-1.0), 0.0);
}

TEST(Filter, MidpointOfTransitionIsOneHalf) {
  EXPECT_NEAR(eval_filter(0.75), 0.5, 1e-15);
  EXPECT_NEAR(eval_filter(-0.75), 0.5, 1e-15);
}

TEST(Filter, EdgesAreBitExact) {
  EXPECT_EQ(eval_filter(0.49999), 1.0);
  EXPECT_EQ(eval_filter(1.00001), 0.0);
  EXPECT_EQ(eval_filter(-0.49999), 1.0);
  EXPECT_EQ(eval_filter(-1.00001), 0.0);
}

TEST(Filter, EvenBoundedAndMonotoneOnTransition) {
  double prev = 1.0;
  for (int i = 0; i <= 4000; ++i) {
    const double t = -2.0 + i * 1e-3;
    const double v = eval_filter(t);
    EXPECT_EQ(v, eval_filter(-t));
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
    if (t >= 0.5 && t <= 1.0) {
      EXPECT_LE(v, prev);
      prev = v;
    }
  }
}

TEST(Filter, MatchesDefiningFormula) {
  for (int i = 0; i <= 1000; ++i) {
    const double t = -1.5 + 3.0 * i / 1000.0;
    EXPECT_NEAR(eval_filter(t), oracle::filter(t), 1e-15) << "t=" << t;
  }
}

TEST(Filter, FunctorAgreesWithFreeFunction) {
  const loctrig::Filter h;
  for (double t : {-0.9, -0.6, 0.1, 0.55, 0.8, 0.99}) {
    EXPECT_EQ(h(t), eval_filter(t));
  }
}

// Centered differences of orders 1..3 at both edges of the transition band
// shrink as the step shrinks (every derivative vanishes there).
TEST(Filter, FiniteDifferencesVanishAtBandEdges) {
  auto d1 = [](double t, double s) { return (eval_filter(t + s) - eval_filter(t - s)) / (2 * s); };
  auto d2 = [](double t, double s) {
    return (eval_filter(t + s) - 2 * eval_filter(t) + eval_filter(t - s)) / (s * s);
  };
  auto d3 = [](double t, double s) {
    return (eval_filter(t + 2 * s) - 2 * eval_filter(t + s) + 2 * eval_filter(t - s) -
            eval_filter(t - 2 * s)) /
           (2 * s * s * s);
  };
  for (double edge : {0.5, 1.0}) {
    double prev[3] = {INFINITY, INFINITY, INFINITY};
    for (double step : {0.08, 0.04, 0.02, 0.01, 0.005}) {
      const double cur[3] = {std::fabs(d1(edge, step)), std::fabs(d2(edge, step)),
                             std::fabs(d3(edge, step))};
      for (int k = 0; k < 3; ++k) {
        EXPECT_LE(cur[k], prev[k]) << "edge " << edge << " order " << k + 1 << " step " << step;
        prev[k] = cur[k];
      }
    }
    for (int k = 0; k < 3; ++k) {
      EXPECT_LT(prev[k], 1e-12) << "edge " << edge << " order " << k + 1;
    }
  }
}

TEST(Filter, NoNaNNearTheBandEdges) {
  for (double eps : {1e-300, 1e-200, 1e-30, 1e-17, 1e-10}) {
    for (double t : {0.5 + eps, 1.0 - eps, -0.5 - eps, -1.0 + eps}) {
      const double v = eval_filter(t);
      EXPECT_FALSE(std::isnan(v)) << t;
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
  }
}
