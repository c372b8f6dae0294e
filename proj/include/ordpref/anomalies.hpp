#pragma once

// Replays the four alpha-domination anomalies on the built-in examples and
// checks each expected outcome.

#include <string>
#include <vector>

namespace ordpref {

struct ScenarioResult {
  std::string name;
  bool passed = true;
  /// "ok: ..." / "FAIL: ..." verdicts followed by informational lines.
  std::vector<std::string> lines;
};

std::vector<ScenarioResult> run_anomalies();

}  // namespace ordpref
