#pragma once

// Named regression scenarios with pinned parameters.  Each run re-executes
// one of the headline pipelines and compares against recorded anchors; the
// report carries the full result documents plus an anchor table of
// expected/measured pairs.

#include "gaborcert/report.hpp"

#include <string>

namespace gaborcert {

inline const char* kScenarioNames =
    "cor-product, n1-gaussian, n1-multiwindow, genericity, asymptotics";

// Throws UnknownScenario for anything not in the list above.  `pass`
// receives the conjunction of the anchor checks.
Report run_scenario(const std::string& name, bool& pass);

}  // namespace gaborcert
