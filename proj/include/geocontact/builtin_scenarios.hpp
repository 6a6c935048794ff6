#pragma once

#include <string>
#include <vector>

namespace geocontact {

struct BuiltinScenario {
  std::string name;
  std::string text;
};

// Scenario corpus embedded at build time from scenarios/*.scn.
const std::vector<BuiltinScenario>& builtin_scenarios();

}  // namespace geocontact
