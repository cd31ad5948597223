#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "lrs/tensoracle.hpp"

namespace lrs {

enum class OutputFormat { Text, Json, Csv };

OutputFormat parse_format(const std::string& s);
std::string to_string(OutputFormat f);

struct VerifyToggles {
  /// Re-check regularly-extremal witnesses with the cup oracle in classify.
  bool cup = false;
  /// Random samples per group in the oracle-consistency suite.
  int samples = 100;
  /// Coordinate bound for random samples.
  int sample_bound = 3;
  std::uint64_t seed = 20240601;

  friend bool operator==(const VerifyToggles&, const VerifyToggles&) = default;
};

struct RunConfig {
  std::string group = "A2";
  int scaling_depth = 3;
  int weight_bound = 2;
  OracleBudget budget;
  OutputFormat format = OutputFormat::Text;
  VerifyToggles verify;

  friend bool operator==(const RunConfig& a, const RunConfig& b) {
    return a.group == b.group && a.scaling_depth == b.scaling_depth && a.weight_bound == b.weight_bound &&
           a.budget.max_dim == b.budget.max_dim && a.budget.max_support == b.budget.max_support &&
           a.format == b.format && a.verify == b.verify;
  }
};

/// Environment variable naming a JSON file with default settings.
inline constexpr const char* kConfigEnv = "LRS_CONFIG";

nlohmann::json to_json(const RunConfig& c);
/// Missing keys keep their defaults; unknown keys and ill-typed values are
/// parse errors.
RunConfig config_from_json(const nlohmann::json& j, RunConfig base = {});
RunConfig load_config(const std::string& path, RunConfig base = {});

}  // namespace lrs
