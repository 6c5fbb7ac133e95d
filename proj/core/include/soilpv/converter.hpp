#pragma once

#include <string>
#include <vector>

namespace soilpv::converter {

// Buck converter design point. on_time and period are kept alongside duty and
// freq so a design can be audited for internal consistency.
struct ConverterDesign {
  double duty = 0.5;
  double freq = 25e3;           // Hz
  double load_r = 10.0;         // ohm
  double inductance = 2e-4;     // H
  double capacitance = 1e-6;    // F
  double efficiency = 0.9;
  double on_time = 0.5 / 25e3;  // s
  double period = 1.0 / 25e3;   // s

  // Builds a design whose on_time/period agree with duty/freq.
  static ConverterDesign make(double duty, double freq, double load_r,
                              double inductance, double capacitance,
                              double efficiency = 0.9);
};

double output_voltage(double vin, double duty);

// Inverse of output_voltage. Throws InfeasibleError when vout > vin.
double duty_for_output(double vin, double vout);

// CCM boundary inductance (1 - D) R / (2 f).
double critical_inductance(double duty, double load_r, double freq);

// Minimum output capacitance (1 - D) / (16 L f^2).
double min_capacitance(double duty, double inductance, double freq);

struct ConstraintCheck {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double bound = 0.0;
  std::string relation;  // e.g. ">=", ">"
};

struct ValidationReport {
  std::vector<ConstraintCheck> checks;

  bool all_pass() const;
  const ConstraintCheck* find(const std::string& name) const;
};

// Failures are entries in the report, never exceptions.
ValidationReport validate_design(const ConverterDesign& design);

struct OutputElectricals {
  double vout = 0.0;
  double iout = 0.0;
  double power = 0.0;
};

// Averaged lossy model: vout = D vin, output power = efficiency * input power.
OutputElectricals power_path_step(double vin, double iin, double duty, double efficiency);
OutputElectricals power_path_step(double vin, double iin, const ConverterDesign& design);

}  // namespace soilpv::converter
