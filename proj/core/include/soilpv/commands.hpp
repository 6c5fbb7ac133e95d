#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "soilpv/config.hpp"
#include "soilpv/sim.hpp"

namespace soilpv::commands {

inline constexpr const char* kCurveHeader = "g_wm2,voltage_v,current_a,power_w";
inline constexpr const char* kSimulateHeader =
    "t_s,g_wm2,v_pv,i_pv,p_pv,duty,v_out,i_out,p_out,soc,theta,humidity_pct,adc_code,pump_on,flow_lps";

struct CommandResult {
  config::ExitCode exit_code = config::ExitCode::ok;
  std::string output;
};

// Buck sizing report. Exit ok iff every constraint passes; infeasible when the
// vin/vout target would need a step-up.
CommandResult cmd_design(const sim::Scenario& scenario);

// P-V blocks for each configured irradiance level followed by one
// `# mpp ...` footer line per level.
std::string cmd_curve(const sim::Scenario& scenario);

std::string cmd_simulate(const sim::Scenario& scenario);

// Number formatting shared by every CSV: 9 significant digits, -0 printed as 0.
std::string format_number(double value);

void write_csv(std::ostream& out, const std::vector<sim::TimeSeriesRecord>& records);

}  // namespace soilpv::commands
