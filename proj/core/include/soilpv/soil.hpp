#pragma once

#include <cstdint>
#include <functional>

namespace soilpv::soil {

// Single-bucket soil water balance.
struct SoilState {
  double theta = 0.6;         // volumetric moisture fraction
  double volume = 100.0;      // L of water held at theta = 1
  double theta_fc = 0.7;      // field capacity
  double drain_coeff = 1e-4;  // 1/s, applied above field capacity

  void validate() const;
};

// Capacitive probe feeding a unipolar ADC. The probe output falls as the soil
// gets wetter, so v_wet < v_dry.
struct SensorCalibration {
  double v_supply = 5.0;
  double v_dry = 4.0;
  double v_wet = 1.0;
  unsigned adc_bits = 10;
  double adc_vref = 5.0;

  void validate() const;
  std::uint32_t full_scale_code() const { return (std::uint32_t{1} << adc_bits) - 1; }
  // Worst-case humidity error (percent) introduced by one ADC quantum.
  double humidity_quantum() const;
};

SoilState soil_step(const SoilState& state, double pump_inflow, double et_rate, double dt);

// Probe voltage for a moisture fraction. The default curve is linear between
// the dry and wet endpoints; any monotone curve can be swapped in through
// SensorCurve.
using SensorCurve = std::function<double(double theta, const SensorCalibration&)>;

double sensor_voltage(double theta, const SensorCalibration& cal);
double sensor_voltage(double theta, const SensorCalibration& cal, const SensorCurve& curve);

std::uint32_t adc_read(double v, const SensorCalibration& cal);

// The controller's programmed inverse: ADC code back to percent humidity.
double humidity_from_adc(std::uint32_t code, const SensorCalibration& cal);

}  // namespace soilpv::soil
