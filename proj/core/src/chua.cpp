#include "chuacrypt/chua.hpp"

#include <cmath>
#include <stdexcept>

namespace chuacrypt {

void ChuaParams::validate() const {
  for (double v : {c1, c2, l, r, ga, gb, bp}) {
    if (!std::isfinite(v)) throw std::invalid_argument("circuit parameter is not finite");
  }
  if (!(c1 > 0 && c2 > 0 && l > 0 && r > 0 && bp > 0)) {
    throw std::invalid_argument("c1, c2, l, r and bp must be positive");
  }
}

bool ChuaState::is_finite() const noexcept {
  return std::isfinite(v_c1) && std::isfinite(v_c2) && std::isfinite(i_l);
}

bool StateDerivative::is_finite() const noexcept {
  return std::isfinite(dv_c1) && std::isfinite(dv_c2) && std::isfinite(di_l);
}

std::string_view to_string(Extension e) noexcept {
  return e == Extension::kA ? "A" : "B";
}

double diode_current(double v, const ChuaParams& p) noexcept {
  if (v < -p.bp) return p.gb * v + p.bp * (p.gb - p.ga);
  if (v > p.bp) return p.gb * v + p.bp * (p.ga - p.gb);
  return p.ga * v;
}

// The second and third equations are shared by both extensions.
namespace {

inline double dv_c2(const ChuaState& s, const ChuaParams& p) noexcept {
  return ((s.v_c1 - s.v_c2) / p.r + s.i_l) / p.c2;
}

inline double di_l(const ChuaState& s, const ChuaParams& p) noexcept {
  return -s.v_c2 / p.l;
}

}  // namespace

StateDerivative rhs_extension_a(const ChuaState& s, const ChuaParams& p) noexcept {
  const double i_r = diode_current(s.v_c1, p);
  return {((s.v_c2 - s.v_c1) / p.r - i_r) / p.c1, dv_c2(s, p), di_l(s, p)};
}

StateDerivative rhs_extension_b(const ChuaState& s, const ChuaParams& p) noexcept {
  const double i_r = diode_current(s.v_c1, p);
  return {(s.v_c2 / p.r - s.v_c1 / p.r - i_r) / p.c1, dv_c2(s, p), di_l(s, p)};
}

RhsFunction rhs_for(Extension e) noexcept {
  return e == Extension::kA ? &rhs_extension_a : &rhs_extension_b;
}

}  // namespace chuacrypt
