#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "circdiv/methods.hpp"
#include "circdiv/rectification.hpp"

using namespace circdiv;

TEST(Rectification, RationalPointGivesTwentyTwoSevenths) {
  const auto r = rectified_quadrant(7.0 / 4.0);
  EXPECT_EQ(r.base_distance, 1.75);
  EXPECT_NEAR(r.implied_pi, 22.0 / 7.0, 1e-12);
}

TEST(Rectification, VesicaPoint) {
  // (6 + 2 sqrt3) / 3
  EXPECT_NEAR(rectified_quadrant(std::numbers::sqrt3).implied_pi, 3.1547005383792515, 1e-14);
  EXPECT_NEAR(rectified_quadrant(std::numbers::sqrt3).implied_pi, 3.15470, 5e-6);
}

TEST(Rectification, ExactRectifier) {
  EXPECT_NEAR(exact_rectifier_distance(), 1.7519383938841087, 1e-15);
  EXPECT_NEAR(rectified_quadrant(exact_rectifier_distance()).implied_pi, std::numbers::pi, 1e-12);
  EXPECT_GT(exact_rectifier_distance(), std::numbers::sqrt3);
  EXPECT_LT(exact_rectifier_distance(), 7.0 / 4.0 + 0.002);
  EXPECT_GT(exact_rectifier_distance(), 7.0 / 4.0);
}

TEST(Rectification, ImpliedPiFormula) {
  for (double d = 0.25; d < 10.0; d += 0.37) {
    const auto r = rectified_quadrant(d);
    EXPECT_NEAR(r.implied_pi, 2.0 * (r.base_distance + 1.0) / r.base_distance, 1e-7);
  }
}

TEST(Rectification, TempierLimitIsVesicaRectificationError) {
  EXPECT_NEAR(relative_error_limit(Method::tempier),
              1.0 - rectified_quadrant(std::numbers::sqrt3).implied_pi / std::numbers::pi, 1e-12);
}

TEST(Rectification, RejectsNonPositive) {
  EXPECT_THROW(rectified_quadrant(0.0), DomainError);
  EXPECT_THROW(rectified_quadrant(-1.0), DomainError);
  EXPECT_THROW(rectified_quadrant(std::nan("")), DomainError);
}
