#pragma once

// The five CLI commands as pure functions from a RunConfig to a JSON report.
// A report's "ok" member is true iff every check in the run passed.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace lcf {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::uint32_t field = 2;
  std::optional<std::string> rational;
  std::optional<std::string> series;
  std::optional<std::string> cf;
  std::optional<std::size_t> precision;
  std::optional<std::uint64_t> seed;  // unset: smallest-admissible chooser, fuzz seed 0
  std::string mode = "hall";          // decompose/verify: hall, hall-f2 (alias f2), shulga
  std::optional<std::string> beta;    // verify only
  std::optional<std::string> gamma;
  std::string suite;                  // fuzz only
  std::size_t trials = 100;
  std::optional<int> max_degree;
  int k = 1;
  int m = 1;
  std::size_t rounds = 5;             // example only
};

struct CommandResult {
  Json report;
  bool ok = false;
};

CommandResult cmd_expand(const RunConfig& config);
CommandResult cmd_decompose(const RunConfig& config);
CommandResult cmd_verify(const RunConfig& config);
CommandResult cmd_fuzz(const RunConfig& config);
CommandResult cmd_example(const RunConfig& config);

}  // namespace lcf
