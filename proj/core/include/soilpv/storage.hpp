#pragma once

namespace soilpv::storage {

// Coulomb-counting battery with a constant bus voltage.
struct BatteryState {
  double soc = 0.8;
  double capacity = 7.2 * 3600.0;  // A*s
  double v_nominal = 12.0;         // V
  double soc_low_cutoff = 0.2;
  double max_charge_current = 5.0;  // A

  void validate() const;
  double charge() const { return soc * capacity; }  // A*s
};

// soc' = clamp(soc + i_net dt / capacity, 0, 1). i_net is charge-positive.
BatteryState battery_step(const BatteryState& state, double i_net, double dt);

double charge_current_limit(const BatteryState& state, double offered);

}  // namespace soilpv::storage
