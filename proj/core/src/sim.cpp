#include "soilpv/sim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "soilpv/errors.hpp"

namespace soilpv::sim {

void IrradianceProfile::validate() const {
  switch (kind) {
    case ProfileKind::constant:
      if (!(value >= 0.0)) throw DomainError("profile.value must be >= 0");
      break;
    case ProfileKind::three_level:
      if (levels.empty()) throw DomainError("profile.levels must not be empty");
      for (std::size_t i = 0; i < levels.size(); ++i) {
        if (!(levels[i].second >= 0.0)) throw DomainError("profile.levels irradiance must be >= 0");
        if (i > 0 && !(levels[i].first > levels[i - 1].first))
          throw DomainError("profile.levels must be strictly time-ordered");
      }
      if (!(end > levels.back().first)) throw DomainError("profile.end must follow the last level");
      break;
    case ProfileKind::diurnal:
      if (!(peak >= 0.0)) throw DomainError("profile.peak must be >= 0");
      if (!(day_length > 0.0)) throw DomainError("profile.day_length must be > 0");
      break;
  }
}

double irradiance_at(const IrradianceProfile& profile, double t) {
  if (!(t >= 0.0)) throw DomainError("time must be >= 0");
  switch (profile.kind) {
    case ProfileKind::constant:
      return profile.value;
    case ProfileKind::three_level: {
      if (t >= profile.end) return 0.0;
      double g = 0.0;
      for (const auto& [start, level] : profile.levels) {
        if (t < start) break;
        g = level;
      }
      return g;
    }
    case ProfileKind::diurnal:
      return profile.peak * std::max(0.0, std::sin(std::numbers::pi * t / profile.day_length));
  }
  return 0.0;
}

std::string to_string(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::constant: return "constant";
    case ProfileKind::three_level: return "three_level";
    case ProfileKind::diurnal: return "diurnal";
  }
  return "unknown";
}

std::optional<ProfileKind> profile_kind_from_string(const std::string& s) {
  if (s == "constant") return ProfileKind::constant;
  if (s == "three_level") return ProfileKind::three_level;
  if (s == "diurnal") return ProfileKind::diurnal;
  return std::nullopt;
}

void Scenario::validate() const {
  panel.validate();
  if (!(panel_temperature > 0.0)) throw DomainError("panel.temperature must be > 0");
  pv::diode_scale(panel, panel_temperature);
  if (!(design.efficiency > 0.0 && design.efficiency <= 1.0))
    throw DomainError("converter.efficiency must lie in (0, 1]");
  mppt.validate();
  battery.validate();
  soil.validate();
  if (!(et_rate >= 0.0)) throw DomainError("soil.et_rate must be >= 0");
  sensor.validate();
  if (!(sensor_noise >= 0.0)) throw DomainError("sensor.noise must be >= 0");
  controller.validate();
  pump.validate();
  if (!(reservoir >= 0.0)) throw DomainError("pump.reservoir must be >= 0");
  profile.validate();
  if (!(dt > 0.0)) throw DomainError("sim.dt must be > 0");
  if (!(duration >= dt)) throw DomainError("sim.duration must be >= sim.dt");
}

std::size_t Scenario::step_count() const {
  // Guard against duration/dt landing a hair below an integer.
  return static_cast<std::size_t>(std::floor(duration / dt * (1.0 + 1e-12)));
}

Engine::Engine(Scenario scenario)
    : scenario_(std::move(scenario)),
      battery_(scenario_.battery),
      soil_(scenario_.soil),
      controller_(scenario_.controller),
      reservoir_(scenario_.reservoir),
      rng_(scenario_.seed) {
  scenario_.validate();
  steps_ = scenario_.step_count();
  mppt_ = mppt::initial_state(scenario_.mppt, scenario_.panel.voc_ref, battery_.v_nominal);
  duty_ = mppt_.last_duty;
}

TimeSeriesRecord Engine::step() {
  try {
    return advance();
  } catch (const DomainError& e) {
    throw StepError(index_, e.what());
  } catch (const InfeasibleError& e) {
    throw StepError(index_, e.what());
  }
}

TimeSeriesRecord Engine::advance() {
  const Scenario& sc = scenario_;
  TimeSeriesRecord rec;
  rec.t = static_cast<double>(index_) * sc.dt;
  rec.duty = duty_;
  rec.soc = battery_.soc;
  rec.theta = soil_.theta;

  // Power path: panel -> buck -> battery bus.
  rec.g = irradiance_at(sc.profile, rec.t);
  const double voc = pv::open_circuit_voltage(sc.panel, rec.g, sc.panel_temperature);
  rec.v_pv = mppt::pv_voltage_from_duty(battery_.v_nominal, duty_, voc);
  rec.i_pv = pv::panel_current(sc.panel, rec.v_pv, rec.g, sc.panel_temperature);
  rec.p_pv = rec.v_pv * rec.i_pv;

  const auto out = converter::power_path_step(rec.v_pv, rec.i_pv, duty_, sc.design.efficiency);
  rec.v_out = out.vout;
  rec.i_out = out.iout;
  rec.p_out = out.power;
  const double i_charge = storage::charge_current_limit(battery_, rec.i_out);

  // Sensing and pump control.
  double v_sense = soil::sensor_voltage(soil_.theta, sc.sensor);
  if (sc.sensor_noise > 0.0) {
    std::uniform_real_distribution<double> noise(-sc.sensor_noise, sc.sensor_noise);
    v_sense = std::max(0.0, v_sense + noise(rng_));
  }
  rec.adc_code = soil::adc_read(v_sense, sc.sensor);
  rec.humidity_pct = soil::humidity_from_adc(rec.adc_code, sc.sensor);
  controller_ = control::controller_step(controller_, rec.humidity_pct, battery_.soc,
                                         battery_.soc_low_cutoff);
  if (reservoir_ <= 0.0) controller_.pump_on = false;
  auto pump = control::pump_step(controller_.pump_on, sc.pump);
  if (pump.flow * sc.dt > reservoir_) pump.flow = reservoir_ / sc.dt;
  rec.pump_on = controller_.pump_on;
  rec.flow = pump.flow;

  // Plant updates.
  battery_ = storage::battery_step(battery_, i_charge - pump.load_power / battery_.v_nominal,
                                   sc.dt);
  soil_ = soil::soil_step(soil_, pump.flow, sc.et_rate, sc.dt);
  if (std::isfinite(reservoir_)) reservoir_ -= pump.flow * sc.dt;

  if (index_ % sc.mppt.update_every == 0) {
    const auto update = mppt::po_step(mppt_, rec.v_pv, rec.i_pv);
    mppt_ = update.state;
    duty_ = update.duty;
  }

  ++index_;
  return rec;
}

std::vector<TimeSeriesRecord> run(const Scenario& scenario) {
  Engine engine(scenario);
  std::vector<TimeSeriesRecord> records;
  records.reserve(engine.step_count());
  while (!engine.done()) records.push_back(engine.step());
  return records;
}

}  // namespace soilpv::sim
