#pragma once

#include <string_view>

namespace chuacrypt {

// Circuit constants in SI units. `ga`/`gb` are the inner and outer slopes of
// the diode characteristic and `bp` its breakpoint voltage.
struct ChuaParams {
  double c1 = 10e-9;
  double c2 = 100e-9;
  double l = 19e-3;
  double r = 1800.0;
  double ga = -0.68e-3;
  double gb = -0.37e-3;
  double bp = 1.1;

  // Throws std::invalid_argument unless all fields are finite and
  // c1, c2, l, r, bp are strictly positive.
  void validate() const;

  friend bool operator==(const ChuaParams&, const ChuaParams&) = default;
};

struct ChuaState {
  double v_c1 = 0.0;
  double v_c2 = 0.0;
  double i_l = 0.0;

  bool is_finite() const noexcept;

  friend bool operator==(const ChuaState&, const ChuaState&) = default;
};

struct StateDerivative {
  double dv_c1 = 0.0;
  double dv_c2 = 0.0;
  double di_l = 0.0;

  bool is_finite() const noexcept;

  friend bool operator==(const StateDerivative&, const StateDerivative&) = default;
};

// The two natural interval extensions of the first state equation. They are
// the same real function and differ only in floating-point operation order.
enum class Extension {
  kA,  // ((v_c2 - v_c1) / r - i_R) / c1
  kB,  // (v_c2 / r - v_c1 / r - i_R) / c1
};

std::string_view to_string(Extension e) noexcept;

// Current through Chua's diode. |v| == bp belongs to the inner segment.
double diode_current(double v, const ChuaParams& p) noexcept;

StateDerivative rhs_extension_a(const ChuaState& s, const ChuaParams& p) noexcept;
StateDerivative rhs_extension_b(const ChuaState& s, const ChuaParams& p) noexcept;

using RhsFunction = StateDerivative (*)(const ChuaState&, const ChuaParams&) noexcept;

RhsFunction rhs_for(Extension e) noexcept;

}  // namespace chuacrypt
