#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "lrs/classify.hpp"
#include "lrs/config.hpp"

namespace lrs {

struct SuiteReport {
  std::string name;
  bool passed = true;
  std::uint64_t checked = 0;
  std::string summary;
  /// First failing case, null when the suite passed.
  nlohmann::json counterexample;
};

/// Suite names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

struct VerifyContext {
  WeylGroupPtr group;
  std::shared_ptr<const TensorOracle> oracle;
  RunConfig config;

  static VerifyContext make(const RunConfig& config);
};

/// Throws Error(Parse) for an unknown suite name.
SuiteReport run_suite(const std::string& name, const VerifyContext& ctx);

/// Expands "all" and runs each named suite.
std::vector<SuiteReport> run_suites(const std::vector<std::string>& names, const VerifyContext& ctx);

/// Dominant weights of the given rank with every coordinate in [0, bound].
std::vector<Weight> dominant_box(int rank, int bound);

}  // namespace lrs
