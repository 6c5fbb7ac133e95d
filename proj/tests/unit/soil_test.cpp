#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "soilpv/errors.hpp"
#include "soilpv/soil.hpp"

namespace soilpv::soil {
namespace {

TEST(SoilStep, NoFluxBelowFieldCapacity) {
  SoilState s;
  s.theta = 0.3;
  s.theta_fc = 0.4;
  EXPECT_EQ(soil_step(s, 0.0, 0.0, 60.0).theta, 0.3);
}

TEST(SoilStep, PumpInflow) {
  SoilState s;
  s.theta = 0.5;
  s.volume = 100.0;
  s.drain_coeff = 0.0;
  EXPECT_NEAR(soil_step(s, 0.01, 0.0, 100.0).theta, 0.51, 1e-15);
}

TEST(SoilStep, DrainsAboveFieldCapacity) {
  SoilState s;
  s.theta = 0.8;
  s.theta_fc = 0.7;
  s.volume = 100.0;
  s.drain_coeff = 1e-3;
  // drainage = 1e-3 * 0.1 * 100 = 0.01 L/s
  EXPECT_NEAR(soil_step(s, 0.0, 0.0, 10.0).theta, 0.8 - 0.001, 1e-15);
}

TEST(SoilStep, ClampsAtBothEnds) {
  SoilState s;
  s.theta = 0.0;
  EXPECT_EQ(soil_step(s, 0.0, 0.1, 10.0).theta, 0.0);
  s.theta = 0.99;
  s.drain_coeff = 0.0;
  EXPECT_EQ(soil_step(s, 10.0, 0.0, 10.0).theta, 1.0);
}

TEST(SoilStep, RejectsBadArguments) {
  EXPECT_THROW(soil_step(SoilState{}, 0.0, 0.0, 0.0), DomainError);
  EXPECT_THROW(soil_step(SoilState{}, -1.0, 0.0, 1.0), DomainError);
  EXPECT_THROW(soil_step(SoilState{}, 0.0, -1.0, 1.0), DomainError);
}

TEST(SoilProperties, WaterConservedWithoutDrainage) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> pump(0.0, 0.02), et(0.0, 0.02), dt(0.5, 5.0);
  SoilState s;
  s.theta = 0.5;
  s.drain_coeff = 0.0;
  const double start = s.theta * s.volume;
  double net = 0.0;
  for (int k = 0; k < 5000; ++k) {
    const double in = pump(rng), out = et(rng), h = dt(rng);
    s = soil_step(s, in, out, h);
    net += (in - out) * h;
    ASSERT_GT(s.theta, 0.0);
    ASSERT_LT(s.theta, 1.0);
  }
  EXPECT_NEAR(s.theta * s.volume - start, net, 1e-9 * s.volume);
}

TEST(SensorVoltage, LinearFallingCalibration) {
  const SensorCalibration cal;
  EXPECT_DOUBLE_EQ(sensor_voltage(0.0, cal), 4.0);
  EXPECT_DOUBLE_EQ(sensor_voltage(1.0, cal), 1.0);
  EXPECT_DOUBLE_EQ(sensor_voltage(0.5, cal), 2.5);
  EXPECT_THROW(sensor_voltage(-0.01, cal), DomainError);
  EXPECT_THROW(sensor_voltage(1.01, cal), DomainError);
}

TEST(SensorVoltage, PluggableCurve) {
  const SensorCalibration cal;
  const SensorCurve quadratic = [](double theta, const SensorCalibration& c) {
    return c.v_dry + (c.v_wet - c.v_dry) * theta * theta;
  };
  EXPECT_DOUBLE_EQ(sensor_voltage(0.5, cal, quadratic), 3.25);
}

TEST(AdcRead, QuantizesAndClamps) {
  const SensorCalibration cal;
  EXPECT_EQ(adc_read(2.5, cal), 512u);
  EXPECT_EQ(adc_read(0.0, cal), 0u);
  EXPECT_EQ(adc_read(5.0, cal), 1023u);
  EXPECT_EQ(adc_read(7.0, cal), 1023u);
  EXPECT_EQ(adc_read(4.99, cal), 1021u);
  EXPECT_THROW(adc_read(-0.1, cal), DomainError);
}

TEST(HumidityFromAdc, InverseMapping) {
  const SensorCalibration cal;
  // theta = 0.5 -> 2.5 V -> code 512 -> 2.5 V -> exactly 50 %.
  EXPECT_EQ(adc_read(sensor_voltage(0.5, cal), cal), 512u);
  EXPECT_DOUBLE_EQ(humidity_from_adc(512, cal), 50.0);
  // Floor quantization lands the endpoints within one quantum; the wet end clamps.
  EXPECT_NEAR(humidity_from_adc(adc_read(cal.v_dry, cal), cal), 0.0, cal.humidity_quantum());
  EXPECT_DOUBLE_EQ(humidity_from_adc(adc_read(cal.v_wet, cal), cal), 100.0);
  EXPECT_DOUBLE_EQ(humidity_from_adc(cal.full_scale_code(), cal), 0.0);
  EXPECT_THROW(humidity_from_adc(1024, cal), DomainError);
}

TEST(AdcProperties, RoundTripWithinOneQuantum) {
  const SensorCalibration cal;
  const double bound = 100.0 * cal.adc_vref / ((cal.v_dry - cal.v_wet) * 1024.0) + 1e-9;
  EXPECT_DOUBLE_EQ(cal.humidity_quantum() + 1e-9, bound);
  for (int k = 0; k < 1000; ++k) {
    const double theta = k / 999.0;
    const double h = humidity_from_adc(adc_read(sensor_voltage(theta, cal), cal), cal);
    EXPECT_LE(std::abs(h - 100.0 * theta), bound) << "theta=" << theta;
  }
}

TEST(AdcProperties, Monotone) {
  const SensorCalibration cal;
  std::uint32_t prev_code = 0;
  for (int k = 0; k <= 6000; ++k) {
    const auto code = adc_read(k * 1e-3, cal);
    EXPECT_GE(code, prev_code);
    prev_code = code;
  }
  double prev_h = 100.0;
  for (std::uint32_t code = 0; code <= cal.full_scale_code(); ++code) {
    const double h = humidity_from_adc(code, cal);
    EXPECT_LE(h, prev_h);
    prev_h = h;
  }
}

TEST(SensorCalibration, Validation) {
  EXPECT_NO_THROW(SensorCalibration{}.validate());
  SensorCalibration c;
  c.v_wet = 4.5;
  EXPECT_THROW(c.validate(), DomainError);
  c = SensorCalibration{};
  c.v_dry = 5.5;
  EXPECT_THROW(c.validate(), DomainError);
  c = SensorCalibration{};
  c.adc_bits = 0;
  EXPECT_THROW(c.validate(), DomainError);
}

}  // namespace
}  // namespace soilpv::soil
