#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace sumfree {

inline constexpr const char* kToolVersion = "1.0.0";

/// Uniform CLI report. Serialization is deterministic: nlohmann objects
/// keep sorted keys, and no timing or host data is ever included.
/// Exit-code rule: empty violations <=> 0.
struct Report {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  std::vector<std::string> violations;

  nlohmann::json to_json() const {
    return nlohmann::json{{"command", command},
                          {"inputs", inputs},
                          {"results", results},
                          {"violations", violations},
                          {"version", kToolVersion}};
  }

  int exit_code() const { return violations.empty() ? 0 : 1; }
};

}  // namespace sumfree
