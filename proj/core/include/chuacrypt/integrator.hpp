#pragma once

#include <concepts>
#include <cstddef>
#include <vector>

#include "chuacrypt/chua.hpp"
#include "chuacrypt/errors.hpp"

namespace chuacrypt {

template <class F>
concept ChuaRhs = std::invocable<const F&, const ChuaState&, const ChuaParams&> &&
                  std::same_as<std::invoke_result_t<const F&, const ChuaState&, const ChuaParams&>,
                               StateDerivative>;

namespace detail {

// s + scale * k, one rounding per operation.
inline ChuaState advance(const ChuaState& s, double scale, const StateDerivative& k) noexcept {
  return {s.v_c1 + scale * k.dv_c1, s.v_c2 + scale * k.dv_c2, s.i_l + scale * k.di_l};
}

// ((k1 + 2 k2) + 2 k3) + k4, evaluated left to right.
inline double weighted(double k1, double k2, double k3, double k4) noexcept {
  double acc = k1 + 2.0 * k2;
  acc = acc + 2.0 * k3;
  return acc + k4;
}

inline void require_finite(const ChuaState& s) {
  if (!s.is_finite()) throw NonFiniteState();
}

inline void require_finite(const StateDerivative& d) {
  if (!d.is_finite()) throw NonFiniteState();
}

}  // namespace detail

// One classical RK4 step. The evaluation order is fixed: stage states are
// s + (h/2)*k, the update is s + (h/6)*(((k1 + 2k2) + 2k3) + k4) per
// component. Both pseudo-orbits share this code and differ only in `rhs`.
// Throws NonFiniteState (without a step index) on NaN or infinity.
template <ChuaRhs Rhs>
ChuaState rk4_step(const Rhs& rhs, const ChuaState& s, const ChuaParams& p, double h) {
  const double half_h = h / 2.0;
  const double sixth_h = h / 6.0;

  const StateDerivative k1 = rhs(s, p);
  detail::require_finite(k1);
  const ChuaState s2 = detail::advance(s, half_h, k1);
  detail::require_finite(s2);
  const StateDerivative k2 = rhs(s2, p);
  detail::require_finite(k2);
  const ChuaState s3 = detail::advance(s, half_h, k2);
  detail::require_finite(s3);
  const StateDerivative k3 = rhs(s3, p);
  detail::require_finite(k3);
  const ChuaState s4 = detail::advance(s, h, k3);
  detail::require_finite(s4);
  const StateDerivative k4 = rhs(s4, p);
  detail::require_finite(k4);

  const StateDerivative sum{
      detail::weighted(k1.dv_c1, k2.dv_c1, k3.dv_c1, k4.dv_c1),
      detail::weighted(k1.dv_c2, k2.dv_c2, k3.dv_c2, k4.dv_c2),
      detail::weighted(k1.di_l, k2.di_l, k3.di_l, k4.di_l),
  };
  const ChuaState next = detail::advance(s, sixth_h, sum);
  detail::require_finite(next);
  return next;
}

struct SimulationPlan {
  double h = 1e-6;
  std::size_t n_steps = 0;
  Extension rhs_choice = Extension::kA;

  // Throws std::invalid_argument unless h is positive and finite.
  void validate() const;
};

struct Trajectory {
  std::vector<ChuaState> states;  // n_steps + 1 entries, states[0] is the initial state
};

// Runs `plan.n_steps` RK4 steps and calls `visit(step, state)` for every
// post-step state, step running from 1 to n_steps. NonFiniteState is rethrown
// with the failing step and extension attached.
template <class Visitor>
void integrate(const SimulationPlan& plan, const ChuaState& s0, const ChuaParams& p,
               Visitor&& visit) {
  plan.validate();
  p.validate();
  if (!s0.is_finite()) throw NonFiniteState(std::size_t{0}, plan.rhs_choice);
  const RhsFunction rhs = rhs_for(plan.rhs_choice);
  ChuaState s = s0;
  for (std::size_t step = 1; step <= plan.n_steps; ++step) {
    try {
      s = rk4_step(rhs, s, p, plan.h);
    } catch (const NonFiniteState&) {
      throw NonFiniteState(step, plan.rhs_choice);
    }
    visit(step, s);
  }
}

Trajectory simulate(const SimulationPlan& plan, const ChuaState& s0, const ChuaParams& p);

}  // namespace chuacrypt
