#include <gtest/gtest.h>

#include <algorithm>

#include "soilpv/config.hpp"

namespace soilpv::config {
namespace {

ConfigError parse_error(std::string_view text, const std::vector<std::string>& overrides = {}) {
  try {
    parse_config(text, overrides);
  } catch (const ConfigError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a ConfigError";
  return ConfigError(ConfigError::Kind::syntax, {}, 0, "none");
}

TEST(ParseConfig, EmptyTextGivesDefaults) {
  const auto sc = parse_config("");
  const sim::Scenario defaults;
  EXPECT_EQ(sc.panel.isc_ref, 5.0);
  EXPECT_EQ(sc.panel.voc_ref, 20.0);
  EXPECT_EQ(sc.panel.a_ref, 1.5);
  EXPECT_EQ(sc.design.duty, 0.5);
  EXPECT_EQ(sc.design.freq, 25e3);
  EXPECT_EQ(sc.design.load_r, 10.0);
  EXPECT_EQ(sc.design.efficiency, 0.9);
  EXPECT_EQ(sc.mppt.step, 0.01);
  EXPECT_EQ(sc.mppt.duty_min, 0.1);
  EXPECT_EQ(sc.mppt.duty_max, 0.99);
  EXPECT_DOUBLE_EQ(sc.battery.capacity, 7.2 * 3600.0);
  EXPECT_EQ(sc.battery.v_nominal, 12.0);
  EXPECT_EQ(sc.battery.soc_low_cutoff, 0.2);
  EXPECT_EQ(sc.battery.max_charge_current, 5.0);
  EXPECT_EQ(sc.sensor.adc_bits, 10u);
  EXPECT_EQ(sc.controller.hysteresis, 5.0);
  EXPECT_EQ(sc.dt, 1.0);
  EXPECT_EQ(sc.duration, 86400.0);
  EXPECT_EQ(sc.panel_temperature, sc.panel.t_ref);
  EXPECT_EQ(sc.profile.kind, defaults.profile.kind);
}

TEST(ParseConfig, ReadsSectionsCommentsAndLists) {
  const auto sc = parse_config(R"(
# comment line
[panel]
isc_ref = 6.5   # trailing comment
t_ref = 300

[converter]
duty = 0.4
vin = 18
vout = 12

[profile]
kind = three_level
levels = 0:400, 100:700, 200:1000
end = 300
curve_levels = 200,500
curve_points = 11

[controller]
pump_on = true

[sim]
seed = 77
)");
  EXPECT_EQ(sc.panel.isc_ref, 6.5);
  EXPECT_EQ(sc.panel_temperature, 300.0);
  EXPECT_EQ(sc.design.duty, 0.4);
  EXPECT_DOUBLE_EQ(sc.design.on_time, 0.4 / 25e3);
  EXPECT_EQ(*sc.targets.vin, 18.0);
  EXPECT_EQ(sc.profile.kind, sim::ProfileKind::three_level);
  ASSERT_EQ(sc.profile.levels.size(), 3u);
  EXPECT_EQ(sc.profile.levels[1], std::make_pair(100.0, 700.0));
  EXPECT_EQ(sc.curve.levels, (std::vector<double>{200.0, 500.0}));
  EXPECT_EQ(sc.curve.points, 11u);
  EXPECT_TRUE(sc.controller.pump_on);
  EXPECT_EQ(sc.seed, 77u);
}

TEST(ParseConfig, OverridesApplyAfterFile) {
  const auto sc = parse_config("[sim]\ndt = 5\n", {"sim.dt=2", "controller.setpoint = 40"});
  EXPECT_EQ(sc.dt, 2.0);
  EXPECT_EQ(sc.controller.setpoint, 40.0);
}

TEST(ParseConfig, InvariantViolationNamesKey) {
  const auto e = parse_error("[converter]\nduty = 1.5\n");
  EXPECT_EQ(e.kind(), ConfigError::Kind::invariant);
  EXPECT_EQ(e.key(), "converter.duty");
  EXPECT_EQ(e.exit_code(), ExitCode::invariant);
  EXPECT_NE(std::string(e.what()).find("converter.duty"), std::string::npos);
}

TEST(ParseConfig, UnknownKeyNamesToken) {
  const auto e = parse_error("[controller]\nsetpoin = 50\n");
  EXPECT_EQ(e.kind(), ConfigError::Kind::unknown_key);
  EXPECT_EQ(e.exit_code(), ExitCode::unknown_key);
  EXPECT_NE(std::string(e.what()).find("setpoin"), std::string::npos);
  EXPECT_EQ(e.line(), 2u);

  EXPECT_EQ(parse_error("[controler]\n").kind(), ConfigError::Kind::unknown_key);
  EXPECT_EQ(parse_error("", {"sim.step=3"}).kind(), ConfigError::Kind::unknown_key);
}

TEST(ParseConfig, SyntaxErrorsCarryLine) {
  auto e = parse_error("[sim]\n\ndt 5\n");
  EXPECT_EQ(e.kind(), ConfigError::Kind::syntax);
  EXPECT_EQ(e.line(), 3u);
  EXPECT_EQ(e.exit_code(), ExitCode::syntax);

  EXPECT_EQ(parse_error("dt = 5\n").line(), 1u);
  EXPECT_EQ(parse_error("[sim\n").kind(), ConfigError::Kind::syntax);
  EXPECT_EQ(parse_error("[sim]\ndt = fast\n").kind(), ConfigError::Kind::syntax);
  EXPECT_EQ(parse_error("[sim]\ndt = 1.0.0\n").kind(), ConfigError::Kind::syntax);
  EXPECT_EQ(parse_error("[profile]\nkind = hourly\n").kind(), ConfigError::Kind::syntax);
  EXPECT_EQ(parse_error("[profile]\nlevels = 0-400\n").kind(), ConfigError::Kind::syntax);
  EXPECT_EQ(parse_error("", {"nodot=3"}).kind(), ConfigError::Kind::syntax);
}

TEST(ParseConfig, CrossFieldInvariants) {
  EXPECT_EQ(parse_error("[controller]\nsetpoint = 97\n").key(), "controller.hysteresis");
  EXPECT_EQ(parse_error("[sensor]\nv_wet = 4.5\n").key(), "sensor.v_dry");
  EXPECT_EQ(parse_error("[mppt]\nduty_min = 0.995\n").key(), "mppt.duty_max");
  EXPECT_EQ(parse_error("[sim]\nduration = 0.5\n").key(), "sim.duration");
  EXPECT_EQ(parse_error("[converter]\nvin = 12\n").key(), "converter.vout");
  EXPECT_EQ(parse_error("[battery]\ncapacity_ah = 0\n").key(), "battery.capacity_ah");
  EXPECT_EQ(parse_error("[profile]\nkind = three_level\n").kind(), ConfigError::Kind::invariant);
}

TEST(KnownKeys, CoversEverySection) {
  const auto keys = known_keys();
  for (const char* section : {"panel.", "converter.", "mppt.", "battery.", "soil.", "sensor.",
                              "controller.", "pump.", "profile.", "sim."}) {
    EXPECT_TRUE(std::any_of(keys.begin(), keys.end(),
                            [&](const std::string& k) { return k.rfind(section, 0) == 0; }))
        << section;
  }
}

}  // namespace
}  // namespace soilpv::config
