#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "chuacrypt/chua.hpp"

namespace chuacrypt {

// The complete secret key. Every field contributes to the keystream bit
// pattern, so keys must be transported bit-exactly (see key_file.hpp).
struct KeyConfig {
  ChuaParams params;
  ChuaState initial{-0.5, -0.2, 0.0};
  double h = 1e-6;
  std::size_t transient = 2000;

  static KeyConfig reference() { return {}; }

  void validate() const;

  friend bool operator==(const KeyConfig&, const KeyConfig&) = default;
};

using Keystream = std::vector<std::uint8_t>;

struct OrbitPair {
  std::vector<double> a;
  std::vector<double> b;
};

// v_c1 samples transient+1 .. transient+n of two simulations from the same
// key, one per extension. `first`/`second` select the extensions; passing the
// same one twice yields identical orbits (useful only for testing).
OrbitPair dual_pseudo_orbits(const KeyConfig& key, std::size_t n,
                             Extension first = Extension::kA,
                             Extension second = Extension::kB);

inline double lower_bound_error(double a, double b) noexcept {
  return std::abs(a - b) / 2.0;
}

// log10 of the elementwise lower bound error. While the error is still at the
// scale of a few ulps the pseudo-orbits can coincide exactly at isolated
// samples; those yield -inf. Throws DegenerateKey(0) when the orbits coincide
// at the first sample, i.e. they have not separated by the end of the
// transient.
std::vector<double> log_error_sequence(std::span<const double> s1, std::span<const double> s2);

// Maps s to floor((s * 1e15) mod 256) using the non-negative modulo, and -inf
// (a coincident sample) to 0. Throws std::invalid_argument on NaN or +inf.
std::uint8_t normalize_sample(double s);
Keystream normalize(std::span<const double> s);

Keystream generate_keystream(const KeyConfig& key, std::size_t length);

}  // namespace chuacrypt
