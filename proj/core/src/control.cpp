#include "soilpv/control.hpp"

#include "soilpv/errors.hpp"

namespace soilpv::control {

void ControllerState::validate() const {
  if (!(setpoint >= 0.0 && setpoint <= 100.0))
    throw DomainError("controller.setpoint must lie in [0, 100]");
  if (!(hysteresis > 0.0)) throw DomainError("controller.hysteresis must be > 0");
  if (!(setpoint + hysteresis <= 100.0))
    throw DomainError("controller.setpoint + controller.hysteresis must be <= 100");
}

void PumpSpec::validate() const {
  if (!(flow_rate > 0.0)) throw DomainError("pump.flow_rate must be > 0");
  if (!(electrical_power > 0.0)) throw DomainError("pump.electrical_power must be > 0");
}

ControllerState controller_step(const ControllerState& state, double humidity, double soc,
                                double soc_low_cutoff) {
  if (!(humidity >= 0.0 && humidity <= 100.0)) throw DomainError("humidity must lie in [0, 100]");
  if (!(soc >= 0.0 && soc <= 1.0)) throw DomainError("soc must lie in [0, 1]");

  ControllerState next = state;
  next.lockout = soc < soc_low_cutoff;
  if (next.lockout) {
    next.pump_on = false;
  } else if (humidity <= state.setpoint) {
    next.pump_on = true;
  } else if (humidity >= state.setpoint + state.hysteresis) {
    next.pump_on = false;
  }
  return next;
}

PumpOutput pump_step(bool on, const PumpSpec& spec) {
  if (!on) return {};
  return {spec.flow_rate, spec.electrical_power};
}

}  // namespace soilpv::control
