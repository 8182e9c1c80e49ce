#pragma once

#include "relmcl/scenario.hpp"

namespace relmcl {

// Root mean squared estimation error over steps k >= skip_transient.
double rmse(const ScenarioTrace& trace, int skip_transient = 0);

}  // namespace relmcl
