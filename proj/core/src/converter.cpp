#include "soilpv/converter.hpp"

#include <algorithm>
#include <cmath>

#include "soilpv/errors.hpp"

namespace soilpv::converter {

ConverterDesign ConverterDesign::make(double duty, double freq, double load_r,
                                      double inductance, double capacitance,
                                      double efficiency) {
  if (!(freq > 0.0)) throw DomainError("switching frequency must be > 0");
  ConverterDesign d;
  d.duty = duty;
  d.freq = freq;
  d.load_r = load_r;
  d.inductance = inductance;
  d.capacitance = capacitance;
  d.efficiency = efficiency;
  d.period = 1.0 / freq;
  d.on_time = duty * d.period;
  return d;
}

double output_voltage(double vin, double duty) {
  if (!(duty >= 0.0 && duty <= 1.0)) throw DomainError("duty must lie in [0, 1]");
  if (!(vin >= 0.0)) throw DomainError("input voltage must be >= 0");
  return duty * vin;
}

double duty_for_output(double vin, double vout) {
  if (!(vin > 0.0)) throw DomainError("input voltage must be > 0");
  if (!(vout > 0.0)) throw DomainError("output voltage must be > 0");
  if (vout > vin) throw InfeasibleError("buck converter cannot step up: vout > vin");
  return vout / vin;
}

double critical_inductance(double duty, double load_r, double freq) {
  if (!(freq > 0.0)) throw DomainError("switching frequency must be > 0");
  if (!(load_r > 0.0)) throw DomainError("load resistance must be > 0");
  if (!(duty >= 0.0 && duty <= 1.0)) throw DomainError("duty must lie in [0, 1]");
  return (1.0 - duty) * load_r / (2.0 * freq);
}

double min_capacitance(double duty, double inductance, double freq) {
  if (!(inductance > 0.0)) throw DomainError("inductance must be > 0");
  if (!(freq > 0.0)) throw DomainError("switching frequency must be > 0");
  if (!(duty >= 0.0 && duty <= 1.0)) throw DomainError("duty must lie in [0, 1]");
  return (1.0 - duty) / (16.0 * inductance * freq * freq);
}

bool ValidationReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

const ConstraintCheck* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

bool close(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b));
}

}  // namespace

ValidationReport validate_design(const ConverterDesign& d) {
  ValidationReport report;
  const bool duty_ok = d.duty > 0.0 && d.duty <= 1.0;
  const bool bounds_computable = duty_ok && d.freq > 0.0 && d.load_r > 0.0;

  if (bounds_computable) {
    // The capacitor bound is taken at the CCM design inductance, so a larger
    // chosen L does not relax the ripple requirement.
    const double l_crit = critical_inductance(d.duty, d.load_r, d.freq);
    const double c_min = l_crit > 0.0 ? min_capacitance(d.duty, l_crit, d.freq) : 0.0;
    report.checks.push_back({"inductance", d.inductance >= l_crit, d.inductance, l_crit, ">="});
    report.checks.push_back({"capacitance", d.capacitance > c_min, d.capacitance, c_min, ">"});
  } else {
    report.checks.push_back({"inductance", false, d.inductance, NAN, ">="});
    report.checks.push_back({"capacitance", false, d.capacitance, NAN, ">"});
  }

  report.checks.push_back({"duty", duty_ok, d.duty, 1.0, "in (0, 1]"});

  const bool timing_ok = d.period > 0.0 && close(d.duty, d.on_time / d.period) &&
                         close(d.freq, 1.0 / d.period);
  report.checks.push_back({"timing", timing_ok, d.period > 0.0 ? d.on_time / d.period : NAN,
                           d.duty, "t1/T == D, 1/T == f"});
  return report;
}

OutputElectricals power_path_step(double vin, double iin, double duty, double efficiency) {
  if (!(vin >= 0.0)) throw DomainError("converter input voltage must be >= 0");
  if (!(iin >= 0.0)) throw DomainError("converter input current must be >= 0");
  OutputElectricals out;
  out.vout = output_voltage(vin, duty);
  out.power = efficiency * (vin * iin);
  out.iout = out.vout > 0.0 ? out.power / out.vout : 0.0;
  return out;
}

OutputElectricals power_path_step(double vin, double iin, const ConverterDesign& design) {
  return power_path_step(vin, iin, design.duty, design.efficiency);
}

}  // namespace soilpv::converter
