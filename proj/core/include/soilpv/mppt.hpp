#pragma once

namespace soilpv::mppt {

struct MpptParams {
  double step = 0.01;
  double duty_min = 0.1;
  double duty_max = 0.99;
  unsigned update_every = 1;  // MPPT decimation, in simulation steps

  void validate() const;
};

// Perturb-and-observe memory.
struct MpptState {
  double last_power = 0.0;
  double last_duty = 0.5;
  int direction = +1;
  double step = 0.01;
  double duty_min = 0.1;
  double duty_max = 0.99;
};

struct MpptUpdate {
  MpptState state;
  double duty = 0.0;
};

// Starting duty places the panel near 0.76 * voc_estimate on a bus clamped at
// v_bat, falling back to the middle of the duty range when that is infeasible.
MpptState initial_state(const MpptParams& params, double voc_estimate, double v_bat);

// One hill-climbing update. Keeps the perturbation direction when power did
// not drop (ties included), reverses it otherwise. A command that saturates at
// a duty bound reflects the stored direction so the next perturbation moves
// back into the range.
MpptUpdate po_step(const MpptState& state, double v_pv, double i_pv);

// Panel voltage seen through a buck whose output is clamped by the battery:
// v_bat / duty, limited to [0, voc_limit].
double pv_voltage_from_duty(double v_bat, double duty, double voc_limit);

}  // namespace soilpv::mppt
