#pragma once

namespace soilpv::control {

// Pump switches on when humidity drops to the setpoint and off once it has
// recovered to setpoint + hysteresis. A low battery locks the pump out.
struct ControllerState {
  double setpoint = 50.0;   // %
  double hysteresis = 5.0;  // %
  bool pump_on = false;
  bool lockout = false;

  void validate() const;
};

struct PumpSpec {
  double flow_rate = 0.02;         // L/s
  double electrical_power = 24.0;  // W

  void validate() const;
};

struct PumpOutput {
  double flow = 0.0;        // L/s
  double load_power = 0.0;  // W
};

ControllerState controller_step(const ControllerState& state, double humidity, double soc,
                                double soc_low_cutoff);

PumpOutput pump_step(bool on, const PumpSpec& spec);

}  // namespace soilpv::control
