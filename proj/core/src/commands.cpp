#include "soilpv/commands.hpp"

#include <fmt/format.h>

#include <iterator>
#include <ostream>
#include <sstream>

#include "soilpv/converter.hpp"
#include "soilpv/errors.hpp"
#include "soilpv/pv.hpp"

namespace soilpv::commands {

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // fold -0 so goldens never flip sign
  return fmt::format("{:.9g}", value);
}

CommandResult cmd_design(const sim::Scenario& scenario) {
  CommandResult result;
  auto design = scenario.design;
  std::string duty_source = "configured";

  if (scenario.targets.vin && scenario.targets.vout) {
    const double vin = *scenario.targets.vin;
    const double vout = *scenario.targets.vout;
    try {
      design.duty = converter::duty_for_output(vin, vout);
    } catch (const InfeasibleError&) {
      result.exit_code = config::ExitCode::infeasible;
      result.output = fmt::format(
          "infeasible: requested vout = {} V exceeds vin = {} V; a buck converter can only "
          "step down (D = vout / vin must not exceed 1)\n",
          format_number(vout), format_number(vin));
      return result;
    }
    design.on_time = design.duty * design.period;
    duty_source = fmt::format("vout / vin = {} / {}", format_number(vout), format_number(vin));
  }

  const auto report = converter::validate_design(design);
  const auto* ind = report.find("inductance");
  const auto* cap = report.find("capacitance");

  auto out = std::back_inserter(result.output);
  fmt::format_to(out, "buck converter design\n");
  fmt::format_to(out, "  duty D        {} ({})\n", format_number(design.duty), duty_source);
  fmt::format_to(out, "  frequency f   {} Hz\n", format_number(design.freq));
  fmt::format_to(out, "  load R        {} ohm\n", format_number(design.load_r));
  fmt::format_to(out, "  L_crit        {} H\n", format_number(ind->bound));
  fmt::format_to(out, "  C_min         {} F\n", format_number(cap->bound));
  fmt::format_to(out, "\n{:<12} {:<6} {:<16} {}\n", "constraint", "result", "value", "requirement");
  for (const auto& c : report.checks) {
    fmt::format_to(out, "{:<12} {:<6} {:<16} {} {}\n", c.name, c.pass ? "PASS" : "FAIL",
                   format_number(c.value), c.relation,
                   c.name == "duty" || c.name == "timing" ? std::string() : format_number(c.bound));
  }
  const bool ok = report.all_pass();
  fmt::format_to(out, "\noverall: {}\n", ok ? "PASS" : "FAIL");
  result.exit_code = ok ? config::ExitCode::ok : config::ExitCode::failed;
  return result;
}

std::string cmd_curve(const sim::Scenario& scenario) {
  const auto& panel = scenario.panel;
  const double temp = scenario.panel_temperature;
  std::string text = std::string(kCurveHeader) + "\n";
  auto out = std::back_inserter(text);

  std::vector<pv::OperatingPoint> mpps;
  for (double g : scenario.curve.levels) {
    for (const auto& p : pv::pv_curve(panel, g, temp, scenario.curve.points)) {
      fmt::format_to(out, "{},{},{},{}\n", format_number(g), format_number(p.voltage),
                     format_number(p.current), format_number(p.power));
    }
    mpps.push_back(pv::mpp_oracle(panel, g, temp));
  }
  for (std::size_t i = 0; i < mpps.size(); ++i) {
    fmt::format_to(out, "# mpp g_wm2={} voltage_v={} current_a={} power_w={}\n",
                   format_number(scenario.curve.levels[i]), format_number(mpps[i].voltage),
                   format_number(mpps[i].current), format_number(mpps[i].power));
  }
  return text;
}

void write_csv(std::ostream& os, const std::vector<sim::TimeSeriesRecord>& records) {
  os << kSimulateHeader << '\n';
  std::string line;
  for (const auto& r : records) {
    line.clear();
    fmt::format_to(std::back_inserter(line), "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                   format_number(r.t), format_number(r.g), format_number(r.v_pv),
                   format_number(r.i_pv), format_number(r.p_pv), format_number(r.duty),
                   format_number(r.v_out), format_number(r.i_out), format_number(r.p_out),
                   format_number(r.soc), format_number(r.theta), format_number(r.humidity_pct),
                   r.adc_code, r.pump_on ? 1 : 0, format_number(r.flow));
    os << line;
  }
}

std::string cmd_simulate(const sim::Scenario& scenario) {
  std::ostringstream os;
  write_csv(os, sim::run(scenario));
  return os.str();
}

}  // namespace soilpv::commands
