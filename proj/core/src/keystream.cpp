#include "chuacrypt/keystream.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "chuacrypt/errors.hpp"
#include "chuacrypt/integrator.hpp"

namespace chuacrypt {

void KeyConfig::validate() const {
  params.validate();
  if (!initial.is_finite()) throw std::invalid_argument("initial state is not finite");
  SimulationPlan{h, 0, Extension::kA}.validate();
}

namespace {

std::vector<double> sample_v_c1(const KeyConfig& key, std::size_t n, Extension e) {
  std::vector<double> out;
  out.reserve(n);
  const SimulationPlan plan{key.h, key.transient + n, e};
  integrate(plan, key.initial, key.params, [&](std::size_t step, const ChuaState& s) {
    if (step > key.transient) out.push_back(s.v_c1);
  });
  return out;
}

}  // namespace

OrbitPair dual_pseudo_orbits(const KeyConfig& key, std::size_t n, Extension first,
                             Extension second) {
  if (n == 0) throw std::invalid_argument("orbit length must be at least 1");
  key.validate();
  return {sample_v_c1(key, n, first), sample_v_c1(key, n, second)};
}

std::vector<double> log_error_sequence(std::span<const double> s1, std::span<const double> s2) {
  if (s1.size() != s2.size()) throw LengthMismatch(s1.size(), s2.size());
  if (s1.empty()) throw std::invalid_argument("empty sequence");
  if (s1[0] == s2[0]) throw DegenerateKey(0);
  std::vector<double> out(s1.size());
  for (std::size_t i = 0; i < s1.size(); ++i) {
    // log10(0) is -inf; normalize maps it to byte 0.
    out[i] = std::log10(lower_bound_error(s1[i], s2[i]));
  }
  return out;
}

std::uint8_t normalize_sample(double s) {
  if (s == -std::numeric_limits<double>::infinity()) return 0;
  if (!std::isfinite(s)) throw std::invalid_argument("cannot normalize a NaN or +inf sample");
  const double y = s * 1e15;
  // fmod is exact, so the only rounding is in the shift to [0, 256). A tiny
  // negative remainder can round up to 256; its true floor is 255.
  double m = std::fmod(y, 256.0);
  if (m < 0) m += 256.0;
  if (m >= 256.0) return 255;
  return static_cast<std::uint8_t>(std::floor(m));
}

Keystream normalize(std::span<const double> s) {
  Keystream out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = normalize_sample(s[i]);
  return out;
}

Keystream generate_keystream(const KeyConfig& key, std::size_t length) {
  const OrbitPair orbits = dual_pseudo_orbits(key, length);
  return normalize(log_error_sequence(orbits.a, orbits.b));
}

}  // namespace chuacrypt
