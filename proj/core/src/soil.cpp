#include "soilpv/soil.hpp"

#include <algorithm>
#include <cmath>

#include "soilpv/errors.hpp"

namespace soilpv::soil {

void SoilState::validate() const {
  if (!(theta >= 0.0 && theta <= 1.0)) throw DomainError("soil.theta must lie in [0, 1]");
  if (!(theta_fc > 0.0 && theta_fc <= 1.0)) throw DomainError("soil.theta_fc must lie in (0, 1]");
  if (!(volume > 0.0)) throw DomainError("soil.volume must be > 0");
  if (!(drain_coeff >= 0.0)) throw DomainError("soil.drain_coeff must be >= 0");
}

void SensorCalibration::validate() const {
  if (!(v_wet >= 0.0 && v_wet < v_dry && v_dry <= v_supply))
    throw DomainError("sensor calibration must satisfy 0 <= v_wet < v_dry <= v_supply");
  if (adc_bits < 1 || adc_bits > 24) throw DomainError("sensor.adc_bits must lie in [1, 24]");
  if (!(adc_vref > 0.0)) throw DomainError("sensor.adc_vref must be > 0");
}

double SensorCalibration::humidity_quantum() const {
  return 100.0 * adc_vref / ((v_dry - v_wet) * std::ldexp(1.0, static_cast<int>(adc_bits)));
}

SoilState soil_step(const SoilState& state, double pump_inflow, double et_rate, double dt) {
  if (!(dt > 0.0)) throw DomainError("soil step dt must be > 0");
  if (!(pump_inflow >= 0.0)) throw DomainError("pump inflow must be >= 0");
  if (!(et_rate >= 0.0)) throw DomainError("evapotranspiration rate must be >= 0");
  const double drainage =
      state.drain_coeff * std::max(0.0, state.theta - state.theta_fc) * state.volume;
  SoilState next = state;
  next.theta = std::clamp(
      state.theta + (pump_inflow - et_rate - drainage) * dt / state.volume, 0.0, 1.0);
  return next;
}

double sensor_voltage(double theta, const SensorCalibration& cal) {
  if (!(theta >= 0.0 && theta <= 1.0)) throw DomainError("theta must lie in [0, 1]");
  return cal.v_dry + (cal.v_wet - cal.v_dry) * theta;
}

double sensor_voltage(double theta, const SensorCalibration& cal, const SensorCurve& curve) {
  if (!(theta >= 0.0 && theta <= 1.0)) throw DomainError("theta must lie in [0, 1]");
  return curve(theta, cal);
}

std::uint32_t adc_read(double v, const SensorCalibration& cal) {
  if (!(v >= 0.0)) throw DomainError("ADC input voltage must be >= 0");
  const double levels = std::ldexp(1.0, static_cast<int>(cal.adc_bits));
  const double code = std::floor(v / cal.adc_vref * levels);
  const double full = static_cast<double>(cal.full_scale_code());
  return static_cast<std::uint32_t>(std::min(code, full));
}

double humidity_from_adc(std::uint32_t code, const SensorCalibration& cal) {
  if (code > cal.full_scale_code()) throw DomainError("ADC code out of range");
  const double levels = std::ldexp(1.0, static_cast<int>(cal.adc_bits));
  const double v = static_cast<double>(code) / levels * cal.adc_vref;
  return std::clamp(100.0 * (v - cal.v_dry) / (cal.v_wet - cal.v_dry), 0.0, 100.0);
}

}  // namespace soilpv::soil
