#include "chuacrypt/integrator.hpp"

#include <cmath>
#include <stdexcept>

namespace chuacrypt {

void SimulationPlan::validate() const {
  if (!(std::isfinite(h) && h > 0)) throw std::invalid_argument("step size must be positive and finite");
}

Trajectory simulate(const SimulationPlan& plan, const ChuaState& s0, const ChuaParams& p) {
  Trajectory t;
  t.states.reserve(plan.n_steps + 1);
  t.states.push_back(s0);
  integrate(plan, s0, p, [&](std::size_t, const ChuaState& s) { t.states.push_back(s); });
  return t;
}

}  // namespace chuacrypt
