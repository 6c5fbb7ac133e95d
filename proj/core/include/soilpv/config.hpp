#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "soilpv/sim.hpp"

namespace soilpv::config {

// Process exit codes shared by every subcommand.
enum class ExitCode : int {
  ok = 0,
  failed = 1,       // design constraint failure, I/O failure
  syntax = 2,
  unknown_key = 3,
  invariant = 4,    // invariant violation or domain error
  infeasible = 5,   // buck asked to step up
};

class ConfigError : public std::runtime_error {
 public:
  enum class Kind { syntax, unknown_key, invariant };

  ConfigError(Kind kind, std::string key, std::size_t line, const std::string& message);

  Kind kind() const noexcept { return kind_; }
  // "section.key" (or the offending token) when known.
  const std::string& key() const noexcept { return key_; }
  // 1-based line in the config text; 0 for --set overrides and whole-scenario checks.
  std::size_t line() const noexcept { return line_; }
  ExitCode exit_code() const noexcept;

 private:
  Kind kind_;
  std::string key_;
  std::size_t line_;
};

// Parses `[section]` / `key = value` text with `#` comments, then applies
// `section.key=value` overrides in order. Absent keys keep their documented
// defaults; unknown keys are errors.
sim::Scenario parse_config(std::string_view text, const std::vector<std::string>& overrides = {});

// Names of every accepted key, as "section.key".
std::vector<std::string> known_keys();

}  // namespace soilpv::config
