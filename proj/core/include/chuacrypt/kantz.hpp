#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace chuacrypt {

// Parameters of Kantz's largest-Lyapunov-exponent estimator on a scalar
// series (embedding dimension 1).
struct KantzConfig {
  // Neighborhood radius. Defaults to 0.2 times the population standard
  // deviation of the series.
  std::optional<double> epsilon;
  std::size_t max_delta_n = 30;
  // Inclusive Δn range of the least-squares fit.
  std::size_t fit_lo = 1;
  std::size_t fit_hi = 10;
  // Neighbors n' with |n' - n| <= theiler_window are excluded.
  std::size_t theiler_window = 10;

  // Throws std::invalid_argument unless epsilon (if set) is positive and
  // 1 <= fit_lo < fit_hi <= max_delta_n.
  void validate() const;
};

struct StretchingPoint {
  std::size_t delta_n;
  double s;
};

struct StretchingCurve {
  std::vector<StretchingPoint> points;  // Δn = 1 .. max_delta_n
  double epsilon = 0.0;                 // radius actually used
  std::size_t references = 0;           // reference points averaged
  std::size_t skipped = 0;              // reference points with no neighbors
};

// S(Δn) = mean over reference points n of ln(mean over neighbors n' of
// |x[n'+Δn] - x[n+Δn]|). Reference and neighbor indices range over
// [0, size - max_delta_n). Throws NoNeighbors if no reference point has a
// neighbor and LogOfZero if some mean separation is zero.
StretchingCurve kantz_stretching_curve(std::span<const double> series, const KantzConfig& cfg);

// Ordinary least-squares slope of S over Δn in [lo, hi].
double fit_slope(const StretchingCurve& curve, std::size_t lo, std::size_t hi);

// Slope of the stretching curve over the configured fit window, in nats per
// sample interval.
double estimate_lyapunov(std::span<const double> series, const KantzConfig& cfg);

}  // namespace chuacrypt
