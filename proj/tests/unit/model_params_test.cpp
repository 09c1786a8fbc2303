#include <gtest/gtest.h>

#include "softbte/errors.hpp"
#include "softbte/model_params.hpp"

using namespace softbte;

TEST(ModelParams, DefaultsAreValid) {
  ModelParams p;
  EXPECT_NO_THROW(p.validate());
  EXPECT_DOUBLE_EQ(p.gamma, -1.0);
  EXPECT_DOUBLE_EQ(p.eps_cutoff, 0.1);
}

TEST(ModelParams, RejectsHardAndTooSoftPotentials) {
  EXPECT_THROW(make_model_params(0.0), ConfigError);
  EXPECT_THROW(make_model_params(0.5), ConfigError);
  EXPECT_THROW(make_model_params(-3.0), ConfigError);
  EXPECT_NO_THROW(make_model_params(-2.99));
}

TEST(ModelParams, CutoffMustLieInUnitInterval) {
  EXPECT_THROW(make_model_params(-1.0, 0.0), ConfigError);
  EXPECT_THROW(make_model_params(-1.0, 1.0), ConfigError);
  EXPECT_NO_THROW(make_model_params(-1.0, 0.99));
}

TEST(ModelParams, EnumNamesRoundTrip) {
  EXPECT_EQ(parse_angular_model(to_string(AngularModel::kAbsCos)), AngularModel::kAbsCos);
  EXPECT_EQ(parse_cutoff_shape(to_string(CutoffShape::kCubicSmoothstep)), CutoffShape::kCubicSmoothstep);
  EXPECT_THROW(parse_angular_model("hard-sphere"), ConfigError);
}
