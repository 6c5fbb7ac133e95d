#pragma once

#include <cstddef>
#include <vector>

namespace soilpv::pv {

// Explicit single-diode panel (Rs = 0, Rsh = inf):
//   I(V) = Iph(G, T) - I0 * (exp(V / a(T)) - 1)
// with I0 calibrated so that I(0) = isc_ref and I(voc_ref) = 0 at the
// reference conditions.
struct PanelSpec {
  double isc_ref = 5.0;        // A
  double voc_ref = 20.0;       // V
  double g_ref = 1000.0;       // W/m^2
  double a_ref = 1.5;          // V, n * Ns * Vt lumped
  double temp_coeff_i = 0.0;   // 1/K, fractional
  double temp_coeff_v = 0.0;   // V/K
  double t_ref = 298.15;       // K

  // Throws DomainError when any invariant is broken.
  void validate() const;

  double saturation_current() const;
};

struct OperatingPoint {
  double voltage = 0.0;
  double current = 0.0;
  double power = 0.0;
};

double photocurrent(const PanelSpec& spec, double g, double t);

// Thermal voltage scale at temperature t; tracks the shift of Voc with
// temp_coeff_v while keeping I0 fixed.
double diode_scale(const PanelSpec& spec, double t);

// Terminal voltage at which the current reaches zero for (g, t).
double open_circuit_voltage(const PanelSpec& spec, double g, double t);

double panel_current(const PanelSpec& spec, double v, double g, double t);

OperatingPoint operating_point(const PanelSpec& spec, double v, double g, double t);

// n points uniformly spanning [0, Voc(g, t)].
std::vector<OperatingPoint> pv_curve(const PanelSpec& spec, double g, double t,
                                     std::size_t n);

// Exhaustive argmax over `resolution` uniformly spaced voltages in [0, Voc].
OperatingPoint mpp_oracle(const PanelSpec& spec, double g, double t,
                          std::size_t resolution = 100000);

}  // namespace soilpv::pv
