#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "soilpv/control.hpp"
#include "soilpv/converter.hpp"
#include "soilpv/mppt.hpp"
#include "soilpv/pv.hpp"
#include "soilpv/soil.hpp"
#include "soilpv/storage.hpp"

namespace soilpv::sim {

enum class ProfileKind { constant, three_level, diurnal };

struct IrradianceProfile {
  ProfileKind kind = ProfileKind::diurnal;
  double value = 1000.0;  // constant
  // three_level: (start s, W/m^2), time-ordered. Zero before the first start
  // and from `end` onward.
  std::vector<std::pair<double, double>> levels;
  double end = std::numeric_limits<double>::infinity();
  // diurnal: peak * max(0, sin(pi t / day_length))
  double peak = 1000.0;
  double day_length = 43200.0;

  void validate() const;
};

double irradiance_at(const IrradianceProfile& profile, double t);

std::string to_string(ProfileKind kind);
std::optional<ProfileKind> profile_kind_from_string(const std::string& s);

// Optional target operating point for the design workflow; when both are
// set, the design duty is derived from them.
struct DesignTargets {
  std::optional<double> vin;
  std::optional<double> vout;
};

struct CurveSettings {
  std::vector<double> levels{400.0, 700.0, 1000.0};
  std::size_t points = 200;
};

struct Scenario {
  pv::PanelSpec panel;
  double panel_temperature = 298.15;  // K
  converter::ConverterDesign design;
  DesignTargets targets;
  mppt::MpptParams mppt;
  storage::BatteryState battery;
  soil::SoilState soil;
  double et_rate = 5e-4;  // L/s
  soil::SensorCalibration sensor;
  double sensor_noise = 0.0;  // V, uniform +/- amplitude; 0 disables
  control::ControllerState controller;
  control::PumpSpec pump;
  double reservoir = std::numeric_limits<double>::infinity();  // L
  IrradianceProfile profile;
  CurveSettings curve;
  double dt = 1.0;
  double duration = 86400.0;
  std::uint64_t seed = 1;

  void validate() const;
  std::size_t step_count() const;
};

// One row per step. soc, theta and the sensor chain describe the state the
// controller observed at the start of the step; electrical values are the
// averages over the step.
struct TimeSeriesRecord {
  double t = 0.0;
  double g = 0.0;
  double v_pv = 0.0;
  double i_pv = 0.0;
  double p_pv = 0.0;
  double duty = 0.0;
  double v_out = 0.0;
  double i_out = 0.0;
  double p_out = 0.0;
  double soc = 0.0;
  double theta = 0.0;
  double humidity_pct = 0.0;
  std::uint32_t adc_code = 0;
  bool pump_on = false;
  double flow = 0.0;

  bool operator==(const TimeSeriesRecord&) const = default;
};

class Engine {
 public:
  explicit Engine(Scenario scenario);

  // Advances one fixed step. Throws StepError carrying the step index.
  TimeSeriesRecord step();

  bool done() const { return index_ >= steps_; }
  std::size_t index() const { return index_; }
  std::size_t step_count() const { return steps_; }

  const Scenario& scenario() const { return scenario_; }
  const storage::BatteryState& battery() const { return battery_; }
  const soil::SoilState& soil() const { return soil_; }
  const control::ControllerState& controller() const { return controller_; }
  const mppt::MpptState& mppt_state() const { return mppt_; }
  double duty() const { return duty_; }
  double reservoir() const { return reservoir_; }

 private:
  TimeSeriesRecord advance();

  Scenario scenario_;
  std::size_t steps_ = 0;
  std::size_t index_ = 0;
  double duty_ = 0.0;
  mppt::MpptState mppt_;
  storage::BatteryState battery_;
  soil::SoilState soil_;
  control::ControllerState controller_;
  double reservoir_ = 0.0;
  std::mt19937_64 rng_;
};

std::vector<TimeSeriesRecord> run(const Scenario& scenario);

}  // namespace soilpv::sim
