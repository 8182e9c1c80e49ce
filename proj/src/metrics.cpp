#include "relmcl/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace relmcl {

double rmse(const ScenarioTrace& trace, int skip_transient) {
  if (skip_transient < 0) throw std::invalid_argument("skip_transient must be nonnegative");
  if (static_cast<std::size_t>(skip_transient) >= trace.steps.size())
    throw std::invalid_argument("skip_transient leaves no steps to evaluate");
  double sum = 0.0;
  std::size_t n = 0;
  for (std::size_t k = static_cast<std::size_t>(skip_transient); k < trace.steps.size(); ++k) {
    sum += norm_sq(trace.steps[k].r_true - trace.steps[k].r_hat);
    ++n;
  }
  return std::sqrt(sum / static_cast<double>(n));
}

}  // namespace relmcl
