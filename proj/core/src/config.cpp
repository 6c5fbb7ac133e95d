#include "soilpv/config.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <optional>

#include "soilpv/errors.hpp"

namespace soilpv::config {

ConfigError::ConfigError(Kind kind, std::string key, std::size_t line, const std::string& message)
    : std::runtime_error(message), kind_(kind), key_(std::move(key)), line_(line) {}

ExitCode ConfigError::exit_code() const noexcept {
  switch (kind_) {
    case Kind::syntax: return ExitCode::syntax;
    case Kind::unknown_key: return ExitCode::unknown_key;
    case Kind::invariant: return ExitCode::invariant;
  }
  return ExitCode::failed;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// Thrown by value parsers; turned into a syntax ConfigError with position.
struct BadValue {
  std::string what;
};

double to_double(std::string_view s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc{} || ptr != end || std::isnan(v))
    throw BadValue{"expected a number, got '" + std::string(s) + "'"};
  return v;
}

std::uint64_t to_unsigned(std::string_view s) {
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc{} || ptr != end)
    throw BadValue{"expected a non-negative integer, got '" + std::string(s) + "'"};
  return v;
}

bool to_bool(std::string_view s) {
  if (s == "true" || s == "1" || s == "on" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "off" || s == "no") return false;
  throw BadValue{"expected a boolean, got '" + std::string(s) + "'"};
}

std::vector<double> to_list(std::string_view s) {
  std::vector<double> out;
  for (auto item : split(s, ',')) out.push_back(to_double(item));
  return out;
}

std::vector<std::pair<double, double>> to_levels(std::string_view s) {
  std::vector<std::pair<double, double>> out;
  for (auto item : split(s, ',')) {
    const auto kv = split(item, ':');
    if (kv.size() != 2) throw BadValue{"expected start:irradiance pairs, got '" + std::string(item) + "'"};
    out.emplace_back(to_double(kv[0]), to_double(kv[1]));
  }
  return out;
}

// Values that need post-processing once every line is read.
struct Pending {
  std::optional<double> temperature;
  double capacity_ah = 7.2;
};

using Setter = std::function<void(sim::Scenario&, Pending&, std::string_view)>;
using KeyTable = std::map<std::string, std::map<std::string, Setter>>;

template <typename F>
Setter num(F field) {
  return [field](sim::Scenario& sc, Pending&, std::string_view v) { field(sc) = to_double(v); };
}

const KeyTable& key_table() {
  static const KeyTable table = [] {
    KeyTable t;
    auto& panel = t["panel"];
    panel["isc_ref"] = num([](sim::Scenario& s) -> double& { return s.panel.isc_ref; });
    panel["voc_ref"] = num([](sim::Scenario& s) -> double& { return s.panel.voc_ref; });
    panel["g_ref"] = num([](sim::Scenario& s) -> double& { return s.panel.g_ref; });
    panel["a_ref"] = num([](sim::Scenario& s) -> double& { return s.panel.a_ref; });
    panel["temp_coeff_i"] = num([](sim::Scenario& s) -> double& { return s.panel.temp_coeff_i; });
    panel["temp_coeff_v"] = num([](sim::Scenario& s) -> double& { return s.panel.temp_coeff_v; });
    panel["t_ref"] = num([](sim::Scenario& s) -> double& { return s.panel.t_ref; });
    panel["temperature"] = [](sim::Scenario&, Pending& p, std::string_view v) {
      p.temperature = to_double(v);
    };

    auto& conv = t["converter"];
    conv["duty"] = num([](sim::Scenario& s) -> double& { return s.design.duty; });
    conv["freq"] = num([](sim::Scenario& s) -> double& { return s.design.freq; });
    conv["load_r"] = num([](sim::Scenario& s) -> double& { return s.design.load_r; });
    conv["inductance"] = num([](sim::Scenario& s) -> double& { return s.design.inductance; });
    conv["capacitance"] = num([](sim::Scenario& s) -> double& { return s.design.capacitance; });
    conv["efficiency"] = num([](sim::Scenario& s) -> double& { return s.design.efficiency; });
    conv["vin"] = [](sim::Scenario& s, Pending&, std::string_view v) { s.targets.vin = to_double(v); };
    conv["vout"] = [](sim::Scenario& s, Pending&, std::string_view v) { s.targets.vout = to_double(v); };

    auto& mppt = t["mppt"];
    mppt["step"] = num([](sim::Scenario& s) -> double& { return s.mppt.step; });
    mppt["duty_min"] = num([](sim::Scenario& s) -> double& { return s.mppt.duty_min; });
    mppt["duty_max"] = num([](sim::Scenario& s) -> double& { return s.mppt.duty_max; });
    mppt["update_every"] = [](sim::Scenario& s, Pending&, std::string_view v) {
      s.mppt.update_every = static_cast<unsigned>(to_unsigned(v));
    };

    auto& bat = t["battery"];
    bat["soc"] = num([](sim::Scenario& s) -> double& { return s.battery.soc; });
    bat["capacity_ah"] = [](sim::Scenario&, Pending& p, std::string_view v) { p.capacity_ah = to_double(v); };
    bat["v_nominal"] = num([](sim::Scenario& s) -> double& { return s.battery.v_nominal; });
    bat["soc_low_cutoff"] = num([](sim::Scenario& s) -> double& { return s.battery.soc_low_cutoff; });
    bat["max_charge_current"] =
        num([](sim::Scenario& s) -> double& { return s.battery.max_charge_current; });

    auto& soil = t["soil"];
    soil["theta"] = num([](sim::Scenario& s) -> double& { return s.soil.theta; });
    soil["volume"] = num([](sim::Scenario& s) -> double& { return s.soil.volume; });
    soil["theta_fc"] = num([](sim::Scenario& s) -> double& { return s.soil.theta_fc; });
    soil["drain_coeff"] = num([](sim::Scenario& s) -> double& { return s.soil.drain_coeff; });
    soil["et_rate"] = num([](sim::Scenario& s) -> double& { return s.et_rate; });

    auto& sensor = t["sensor"];
    sensor["v_supply"] = num([](sim::Scenario& s) -> double& { return s.sensor.v_supply; });
    sensor["v_dry"] = num([](sim::Scenario& s) -> double& { return s.sensor.v_dry; });
    sensor["v_wet"] = num([](sim::Scenario& s) -> double& { return s.sensor.v_wet; });
    sensor["adc_vref"] = num([](sim::Scenario& s) -> double& { return s.sensor.adc_vref; });
    sensor["adc_bits"] = [](sim::Scenario& s, Pending&, std::string_view v) {
      const auto bits = to_unsigned(v);
      s.sensor.adc_bits = bits > 64 ? 64u : static_cast<unsigned>(bits);
    };
    sensor["noise"] = num([](sim::Scenario& s) -> double& { return s.sensor_noise; });

    auto& ctl = t["controller"];
    ctl["setpoint"] = num([](sim::Scenario& s) -> double& { return s.controller.setpoint; });
    ctl["hysteresis"] = num([](sim::Scenario& s) -> double& { return s.controller.hysteresis; });
    ctl["pump_on"] = [](sim::Scenario& s, Pending&, std::string_view v) {
      s.controller.pump_on = to_bool(v);
    };

    auto& pump = t["pump"];
    pump["flow_rate"] = num([](sim::Scenario& s) -> double& { return s.pump.flow_rate; });
    pump["electrical_power"] = num([](sim::Scenario& s) -> double& { return s.pump.electrical_power; });
    pump["reservoir"] = num([](sim::Scenario& s) -> double& { return s.reservoir; });

    auto& prof = t["profile"];
    prof["kind"] = [](sim::Scenario& s, Pending&, std::string_view v) {
      const auto kind = sim::profile_kind_from_string(std::string(v));
      if (!kind) throw BadValue{"expected constant, three_level or diurnal, got '" + std::string(v) + "'"};
      s.profile.kind = *kind;
    };
    prof["value"] = num([](sim::Scenario& s) -> double& { return s.profile.value; });
    prof["levels"] = [](sim::Scenario& s, Pending&, std::string_view v) { s.profile.levels = to_levels(v); };
    prof["end"] = num([](sim::Scenario& s) -> double& { return s.profile.end; });
    prof["peak"] = num([](sim::Scenario& s) -> double& { return s.profile.peak; });
    prof["day_length"] = num([](sim::Scenario& s) -> double& { return s.profile.day_length; });
    prof["curve_levels"] = [](sim::Scenario& s, Pending&, std::string_view v) { s.curve.levels = to_list(v); };
    prof["curve_points"] = [](sim::Scenario& s, Pending&, std::string_view v) {
      s.curve.points = static_cast<std::size_t>(to_unsigned(v));
    };

    auto& simk = t["sim"];
    simk["dt"] = num([](sim::Scenario& s) -> double& { return s.dt; });
    simk["duration"] = num([](sim::Scenario& s) -> double& { return s.duration; });
    simk["seed"] = [](sim::Scenario& s, Pending&, std::string_view v) { s.seed = to_unsigned(v); };
    return t;
  }();
  return table;
}

class Parser {
 public:
  void assign(std::string_view section, std::string_view key, std::string_view value,
              std::size_t line) {
    const auto& table = key_table();
    const std::string qualified = std::string(section) + "." + std::string(key);
    const auto sec = table.find(std::string(section));
    if (sec == table.end())
      throw ConfigError(ConfigError::Kind::unknown_key, std::string(section), line,
                        where(line) + "unknown section '" + std::string(section) + "'");
    const auto setter = sec->second.find(std::string(key));
    if (setter == sec->second.end())
      throw ConfigError(ConfigError::Kind::unknown_key, qualified, line,
                        where(line) + "unknown key '" + qualified + "'");
    try {
      setter->second(scenario_, pending_, value);
    } catch (const BadValue& bad) {
      throw ConfigError(ConfigError::Kind::syntax, qualified, line,
                        where(line) + qualified + ": " + bad.what);
    }
  }

  void parse_text(std::string_view text) {
    std::string section;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto nl = text.find('\n', pos);
      std::string_view raw = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
      pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
      ++line_no;

      if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      const auto line = trim(raw);
      if (line.empty()) continue;

      if (line.front() == '[') {
        if (line.back() != ']' || line.size() < 3)
          throw ConfigError(ConfigError::Kind::syntax, std::string(line), line_no,
                            where(line_no) + "malformed section header");
        section = std::string(trim(line.substr(1, line.size() - 2)));
        if (!key_table().contains(section))
          throw ConfigError(ConfigError::Kind::unknown_key, section, line_no,
                            where(line_no) + "unknown section '" + section + "'");
        continue;
      }

      const auto eq = line.find('=');
      if (eq == std::string_view::npos)
        throw ConfigError(ConfigError::Kind::syntax, std::string(line), line_no,
                          where(line_no) + "expected 'key = value'");
      const auto key = trim(line.substr(0, eq));
      const auto value = trim(line.substr(eq + 1));
      if (key.empty())
        throw ConfigError(ConfigError::Kind::syntax, {}, line_no, where(line_no) + "missing key");
      if (section.empty())
        throw ConfigError(ConfigError::Kind::syntax, std::string(key), line_no,
                          where(line_no) + "key '" + std::string(key) + "' outside any [section]");
      assign(section, key, value, line_no);
    }
  }

  void apply_override(const std::string& item) {
    const auto eq = item.find('=');
    const auto dot = item.find('.');
    if (eq == std::string::npos || dot == std::string::npos || dot > eq)
      throw ConfigError(ConfigError::Kind::syntax, item, 0,
                        "override '" + item + "' is not of the form section.key=value");
    const std::string_view view(item);
    assign(trim(view.substr(0, dot)), trim(view.substr(dot + 1, eq - dot - 1)),
           trim(view.substr(eq + 1)), 0);
  }

  sim::Scenario finish() {
    scenario_.panel_temperature = pending_.temperature.value_or(scenario_.panel.t_ref);
    scenario_.battery.capacity = pending_.capacity_ah * 3600.0;
    auto& d = scenario_.design;
    if (d.freq > 0.0) {
      d.period = 1.0 / d.freq;
      d.on_time = d.duty * d.period;
    }
    check_invariants();
    return scenario_;
  }

 private:
  static std::string where(std::size_t line) {
    return line == 0 ? std::string("--set: ") : "line " + std::to_string(line) + ": ";
  }

  static void check(bool ok, const char* key, const char* message) {
    if (!ok)
      throw ConfigError(ConfigError::Kind::invariant, key, 0,
                        std::string(key) + " " + message);
  }

  void check_invariants() const {
    const auto& s = scenario_;
    check(s.panel.isc_ref > 0.0, "panel.isc_ref", "must be > 0");
    check(s.panel.voc_ref > 0.0, "panel.voc_ref", "must be > 0");
    check(s.panel.g_ref > 0.0, "panel.g_ref", "must be > 0");
    check(s.panel.a_ref > 0.0, "panel.a_ref", "must be > 0");
    check(s.panel.t_ref > 0.0, "panel.t_ref", "must be > 0");
    check(s.panel_temperature > 0.0, "panel.temperature", "must be > 0");

    check(s.design.duty > 0.0 && s.design.duty <= 1.0, "converter.duty", "must lie in (0, 1]");
    check(s.design.freq > 0.0, "converter.freq", "must be > 0");
    check(s.design.load_r > 0.0, "converter.load_r", "must be > 0");
    check(s.design.inductance > 0.0, "converter.inductance", "must be > 0");
    check(s.design.capacitance > 0.0, "converter.capacitance", "must be > 0");
    check(s.design.efficiency > 0.0 && s.design.efficiency <= 1.0, "converter.efficiency",
          "must lie in (0, 1]");
    check(s.targets.vin.has_value() == s.targets.vout.has_value(), "converter.vout",
          "converter.vin and converter.vout must be given together");

    check(s.mppt.step > 0.0, "mppt.step", "must be > 0");
    check(s.mppt.duty_min > 0.0, "mppt.duty_min", "must be > 0");
    check(s.mppt.duty_max > s.mppt.duty_min && s.mppt.duty_max <= 1.0, "mppt.duty_max",
          "must lie in (duty_min, 1]");
    check(s.mppt.update_every >= 1, "mppt.update_every", "must be >= 1");

    check(s.battery.soc >= 0.0 && s.battery.soc <= 1.0, "battery.soc", "must lie in [0, 1]");
    check(s.battery.capacity > 0.0, "battery.capacity_ah", "must be > 0");
    check(s.battery.v_nominal > 0.0, "battery.v_nominal", "must be > 0");
    check(s.battery.soc_low_cutoff >= 0.0 && s.battery.soc_low_cutoff < 1.0,
          "battery.soc_low_cutoff", "must lie in [0, 1)");
    check(s.battery.max_charge_current >= 0.0, "battery.max_charge_current", "must be >= 0");

    check(s.soil.theta >= 0.0 && s.soil.theta <= 1.0, "soil.theta", "must lie in [0, 1]");
    check(s.soil.volume > 0.0, "soil.volume", "must be > 0");
    check(s.soil.theta_fc > 0.0 && s.soil.theta_fc <= 1.0, "soil.theta_fc", "must lie in (0, 1]");
    check(s.soil.drain_coeff >= 0.0, "soil.drain_coeff", "must be >= 0");
    check(s.et_rate >= 0.0, "soil.et_rate", "must be >= 0");

    check(s.sensor.v_supply > 0.0, "sensor.v_supply", "must be > 0");
    check(s.sensor.v_wet >= 0.0, "sensor.v_wet", "must be >= 0");
    check(s.sensor.v_dry > s.sensor.v_wet, "sensor.v_dry", "must be > sensor.v_wet");
    check(s.sensor.v_dry <= s.sensor.v_supply, "sensor.v_dry", "must be <= sensor.v_supply");
    check(s.sensor.adc_bits >= 1 && s.sensor.adc_bits <= 24, "sensor.adc_bits", "must lie in [1, 24]");
    check(s.sensor.adc_vref > 0.0, "sensor.adc_vref", "must be > 0");
    check(s.sensor_noise >= 0.0, "sensor.noise", "must be >= 0");

    check(s.controller.setpoint >= 0.0 && s.controller.setpoint <= 100.0, "controller.setpoint",
          "must lie in [0, 100]");
    check(s.controller.hysteresis > 0.0, "controller.hysteresis", "must be > 0");
    check(s.controller.setpoint + s.controller.hysteresis <= 100.0, "controller.hysteresis",
          "setpoint + hysteresis must be <= 100");

    check(s.pump.flow_rate > 0.0, "pump.flow_rate", "must be > 0");
    check(s.pump.electrical_power > 0.0, "pump.electrical_power", "must be > 0");
    check(s.reservoir >= 0.0, "pump.reservoir", "must be >= 0");

    check(s.curve.points >= 2, "profile.curve_points", "must be >= 2");
    check(!s.curve.levels.empty(), "profile.curve_levels", "must list at least one level");
    for (double g : s.curve.levels) check(g >= 0.0, "profile.curve_levels", "must be >= 0");

    check(s.dt > 0.0, "sim.dt", "must be > 0");
    check(s.duration >= s.dt, "sim.duration", "must be >= sim.dt");

    try {
      s.validate();
    } catch (const DomainError& e) {
      throw ConfigError(ConfigError::Kind::invariant, "scenario", 0, e.what());
    }
  }

  sim::Scenario scenario_;
  Pending pending_;
};

}  // namespace

sim::Scenario parse_config(std::string_view text, const std::vector<std::string>& overrides) {
  Parser parser;
  parser.parse_text(text);
  for (const auto& item : overrides) parser.apply_override(item);
  return parser.finish();
}

std::vector<std::string> known_keys() {
  std::vector<std::string> keys;
  for (const auto& [section, entries] : key_table()) {
    for (const auto& [key, setter] : entries) keys.push_back(section + "." + key);
  }
  return keys;
}

}  // namespace soilpv::config
