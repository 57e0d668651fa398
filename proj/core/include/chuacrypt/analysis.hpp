#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "chuacrypt/image.hpp"

namespace chuacrypt {

struct Histogram {
  std::array<std::uint64_t, 256> counts{};

  std::uint64_t total() const noexcept;
};

enum class Direction { kHorizontal, kVertical, kDiagonal };

Histogram histogram(const Image& img);

// Shannon entropy in bits of the empirical intensity distribution.
double shannon_entropy(const Histogram& h);
double shannon_entropy(const Image& img);

// Pearson correlation (population moments) over every adjacent pixel pair:
// horizontal (r,c)-(r,c+1), vertical (r,c)-(r+1,c), diagonal (r,c)-(r+1,c+1).
// Throws std::invalid_argument if the image has no pair in that direction and
// ZeroVariance if either series is constant.
double adjacent_correlation(const Image& img, Direction direction);

// Pearson's chi-square statistic against the uniform distribution over 256
// bins. Throws std::invalid_argument if the total count is below 256.
double chi_square_uniformity(const Histogram& h);

struct AnalysisReport {
  double entropy_bits = 0.0;
  // Empty when the correlation is undefined (constant series or no pairs).
  std::optional<double> corr_horizontal;
  std::optional<double> corr_vertical;
  std::optional<double> corr_diagonal;
  Histogram histogram;
  double chi_square = 0.0;
};

AnalysisReport analyze(const Image& img);

}  // namespace chuacrypt
