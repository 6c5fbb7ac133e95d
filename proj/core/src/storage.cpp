#include "soilpv/storage.hpp"

#include <algorithm>

#include "soilpv/errors.hpp"

namespace soilpv::storage {

void BatteryState::validate() const {
  if (!(soc >= 0.0 && soc <= 1.0)) throw DomainError("battery.soc must lie in [0, 1]");
  if (!(capacity > 0.0)) throw DomainError("battery capacity must be > 0");
  if (!(v_nominal > 0.0)) throw DomainError("battery.v_nominal must be > 0");
  if (!(soc_low_cutoff >= 0.0 && soc_low_cutoff < 1.0))
    throw DomainError("battery.soc_low_cutoff must lie in [0, 1)");
  if (!(max_charge_current >= 0.0))
    throw DomainError("battery.max_charge_current must be >= 0");
}

BatteryState battery_step(const BatteryState& state, double i_net, double dt) {
  if (!(dt > 0.0)) throw DomainError("battery step dt must be > 0");
  BatteryState next = state;
  next.soc = std::clamp(state.soc + i_net * dt / state.capacity, 0.0, 1.0);
  return next;
}

double charge_current_limit(const BatteryState& state, double offered) {
  if (!(offered >= 0.0)) throw DomainError("offered charge current must be >= 0");
  if (state.soc >= 1.0) return 0.0;
  return std::min(offered, state.max_charge_current);
}

}  // namespace soilpv::storage
