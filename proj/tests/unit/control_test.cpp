#include <gtest/gtest.h>

#include <random>

#include "soilpv/control.hpp"
#include "soilpv/errors.hpp"

namespace soilpv::control {
namespace {

ControllerState ctl(bool pump_on) {
  ControllerState s;
  s.setpoint = 50.0;
  s.hysteresis = 5.0;
  s.pump_on = pump_on;
  return s;
}

TEST(ControllerStep, SwitchesWithHysteresis) {
  EXPECT_TRUE(controller_step(ctl(false), 49.0, 0.8, 0.2).pump_on);
  EXPECT_TRUE(controller_step(ctl(true), 52.0, 0.8, 0.2).pump_on);
  EXPECT_FALSE(controller_step(ctl(true), 56.0, 0.8, 0.2).pump_on);
  EXPECT_FALSE(controller_step(ctl(false), 52.0, 0.8, 0.2).pump_on);
}

TEST(ControllerStep, ThresholdsAreInclusive) {
  EXPECT_TRUE(controller_step(ctl(false), 50.0, 0.8, 0.2).pump_on);
  EXPECT_FALSE(controller_step(ctl(true), 55.0, 0.8, 0.2).pump_on);
}

TEST(ControllerStep, LockoutDominates) {
  for (double h : {0.0, 30.0, 50.0, 52.0, 100.0}) {
    for (bool on : {false, true}) {
      const auto next = controller_step(ctl(on), h, 0.19, 0.2);
      EXPECT_FALSE(next.pump_on);
      EXPECT_TRUE(next.lockout);
    }
  }
  EXPECT_FALSE(controller_step(ctl(false), 10.0, 0.2, 0.2).lockout);
}

TEST(ControllerStep, IdempotentInsideBand) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> band(50.0 + 1e-9, 55.0 - 1e-9);
  for (bool on : {false, true}) {
    ControllerState s = ctl(on);
    const double h = band(rng);
    for (int k = 0; k < 100; ++k) {
      s = controller_step(s, h, 0.9, 0.2);
      EXPECT_EQ(s.pump_on, on);
    }
  }
}

TEST(ControllerStep, RejectsOutOfRangeInputs) {
  EXPECT_THROW(controller_step(ctl(false), 101.0, 0.5, 0.2), DomainError);
  EXPECT_THROW(controller_step(ctl(false), 50.0, 1.5, 0.2), DomainError);
}

TEST(ControllerState, Validation) {
  EXPECT_NO_THROW(ctl(false).validate());
  auto s = ctl(false);
  s.setpoint = 98.0;
  EXPECT_THROW(s.validate(), DomainError);
  s = ctl(false);
  s.hysteresis = 0.0;
  EXPECT_THROW(s.validate(), DomainError);
}

TEST(PumpStep, PassThroughAndIdle) {
  const PumpSpec spec{0.02, 24.0};
  const auto on = pump_step(true, spec);
  EXPECT_EQ(on.flow, 0.02);
  EXPECT_EQ(on.load_power, 24.0);
  const auto off = pump_step(false, spec);
  EXPECT_EQ(off.flow, 0.0);
  EXPECT_EQ(off.load_power, 0.0);
}

TEST(PumpStep, LockoutForcesIdle) {
  const auto s = controller_step(ctl(true), 10.0, 0.05, 0.2);
  const auto out = pump_step(s.pump_on, PumpSpec{});
  EXPECT_EQ(out.flow, 0.0);
  EXPECT_EQ(out.load_power, 0.0);
}

}  // namespace
}  // namespace soilpv::control
