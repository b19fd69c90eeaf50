#pragma once

// Acceptance checks for the whole simulator. Each check prints the value it
// measured next to the threshold it was held to.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qrep/gates.hpp"
#include "qrep/protocol.hpp"

namespace qrep {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string measured;
  std::string expected;
  double seconds = 0.0;
};

// Replaceable closed forms, used by the mutation tests.
struct AcceptanceHooks {
  std::function<GateMetricsd(const ReflectionCoefficientsd&)> gate_metrics =
      [](const ReflectionCoefficientsd& c) { return qrep::gate_metrics(c); };
  std::function<DistributionMetricsd(const ReflectionCoefficientsd&)> distribution_metrics =
      [](const ReflectionCoefficientsd& c) { return qrep::distribution_metrics(c); };
  std::uint64_t seed = 0x5eed2016ULL;
};

inline constexpr double kRuntimeBudgetSeconds = 60.0;

struct AcceptanceReport {
  std::vector<CheckResult> checks;
  double total_seconds = 0.0;

  bool all_passed() const;
};

AcceptanceReport run_acceptance(const AcceptanceHooks& hooks = {});

std::string format_text(const AcceptanceReport& report);
std::string format_json(const AcceptanceReport& report);

}  // namespace qrep
