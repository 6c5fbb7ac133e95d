#include "soilpv/mppt.hpp"

#include <algorithm>

#include "soilpv/converter.hpp"
#include "soilpv/errors.hpp"

namespace soilpv::mppt {

void MpptParams::validate() const {
  if (!(step > 0.0)) throw DomainError("mppt.step must be > 0");
  if (!(duty_min > 0.0 && duty_min < duty_max && duty_max <= 1.0))
    throw DomainError("mppt duty bounds must satisfy 0 < duty_min < duty_max <= 1");
  if (update_every == 0) throw DomainError("mppt.update_every must be >= 1");
}

MpptState initial_state(const MpptParams& params, double voc_estimate, double v_bat) {
  params.validate();
  MpptState s;
  s.step = params.step;
  s.duty_min = params.duty_min;
  s.duty_max = params.duty_max;
  s.last_power = 0.0;
  s.direction = +1;

  double duty = 0.5 * (params.duty_min + params.duty_max);
  const double v_target = 0.76 * voc_estimate;
  if (v_bat > 0.0 && v_target >= v_bat) {
    const double d = converter::duty_for_output(v_target, v_bat);
    if (d >= params.duty_min && d <= params.duty_max) duty = d;
  }
  s.last_duty = duty;
  return s;
}

MpptUpdate po_step(const MpptState& state, double v_pv, double i_pv) {
  if (!(v_pv >= 0.0) || !(i_pv >= 0.0))
    throw DomainError("mppt measurements must be >= 0");

  const double p = v_pv * i_pv;
  MpptState next = state;
  if (p < state.last_power) next.direction = -state.direction;

  const double wanted = state.last_duty + next.direction * state.step;
  const double duty = std::clamp(wanted, state.duty_min, state.duty_max);
  if (wanted != duty) next.direction = -next.direction;

  next.last_power = p;
  next.last_duty = duty;
  return {next, duty};
}

double pv_voltage_from_duty(double v_bat, double duty, double voc_limit) {
  if (!(duty > 0.0)) throw DomainError("duty must be > 0");
  if (!(v_bat > 0.0)) throw DomainError("battery voltage must be > 0");
  return std::clamp(v_bat / duty, 0.0, std::max(voc_limit, 0.0));
}

}  // namespace soilpv::mppt
