#pragma once

// Reference computations used only by the tests. Nothing here calls into the
// library code paths it is used to check.

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;

// Exact value of the Chua vector field at a binary64 state, evaluated in
// rational arithmetic from the binary64 parameter values.
struct ExactDerivative {
  Rational dv_c1, dv_c2, di_l;
};

inline ExactDerivative chua_field_exact(double v1, double v2, double il, double c1, double c2, double l,
                                        double r, double ga, double gb, double bp) {
  const Rational V1(v1), V2(v2), IL(il), C1(c1), C2(c2), L(l), R(r), GA(ga), GB(gb), BP(bp);
  Rational ir;
  if (V1 < -BP) {
    ir = GB * V1 + BP * (GB - GA);
  } else if (V1 > BP) {
    ir = GB * V1 + BP * (GA - GB);
  } else {
    ir = GA * V1;
  }
  return {((V2 - V1) / R - ir) / C1, ((V1 - V2) / R + IL) / C2, -V2 / L};
}

// A plain array-based RK4, written independently of the library's
// rk4_step, with the same operation grouping.
template <class F>
std::array<double, 3> rk4_plain(F f, std::array<double, 3> y, double h) {
  std::array<double, 3> k1 = f(y), k2, k3, k4, t;
  for (int i = 0; i < 3; ++i) t[i] = y[i] + h / 2 * k1[i];
  k2 = f(t);
  for (int i = 0; i < 3; ++i) t[i] = y[i] + h / 2 * k2[i];
  k3 = f(t);
  for (int i = 0; i < 3; ++i) t[i] = y[i] + h * k3[i];
  k4 = f(t);
  std::array<double, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = y[i] + h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  return out;
}

// Chua field written from the circuit equations, extension A ordering.
inline std::array<double, 3> chua_field_a(const std::array<double, 3>& y) {
  const double c1 = 10e-9, c2 = 100e-9, l = 19e-3, r = 1800.0, ga = -0.68e-3, gb = -0.37e-3, bp = 1.1;
  const double v1 = y[0], v2 = y[1], il = y[2];
  double ir;
  if (v1 < -bp) {
    ir = gb * v1 + bp * (gb - ga);
  } else if (v1 > bp) {
    ir = gb * v1 + bp * (ga - gb);
  } else {
    ir = ga * v1;
  }
  return {((v2 - v1) / r - ir) / c1, ((v1 - v2) / r + il) / c2, -v2 / l};
}

// Exact orbit of the doubling map x -> 2x mod 1 from a random real seed,
// truncated to 53 bits per sample: x_n = sum_k b_{n+k} 2^-k.
inline std::vector<double> doubling_map_series(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> bits(n + 53);
  for (auto& b : bits) b = static_cast<int>(rng() >> 63);
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    double v = 0.0;
    double w = 0.5;
    for (std::size_t k = 0; k < 53; ++k) {
      v += bits[i + k] * w;
      w /= 2;
    }
    x[i] = v;
  }
  return x;
}

// Direct O(N^2 * D) evaluation of the Kantz stretching curve with scalar
// embedding. Returns an empty vector if no reference point has neighbors.
inline std::vector<double> kantz_brute_force(const std::vector<double>& x, double eps, std::size_t max_dn,
                                             std::size_t theiler) {
  const std::size_t m = x.size() - max_dn;
  std::vector<double> s(max_dn, 0.0);
  std::size_t refs = 0;
  for (std::size_t n = 0; n < m; ++n) {
    std::vector<std::size_t> hood;
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t gap = j > n ? j - n : n - j;
      if (gap > theiler && std::abs(x[j] - x[n]) <= eps) hood.push_back(j);
    }
    if (hood.empty()) continue;
    ++refs;
    for (std::size_t dn = 1; dn <= max_dn; ++dn) {
      double sum = 0.0;
      for (std::size_t j : hood) sum += std::abs(x[j + dn] - x[n + dn]);
      s[dn - 1] += std::log(sum / static_cast<double>(hood.size()));
    }
  }
  if (refs == 0) return {};
  for (double& v : s) v /= static_cast<double>(refs);
  return s;
}

}  // namespace oracle
