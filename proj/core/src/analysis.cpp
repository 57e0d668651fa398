#include "chuacrypt/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "chuacrypt/errors.hpp"

namespace chuacrypt {

std::uint64_t Histogram::total() const noexcept {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

Histogram histogram(const Image& img) {
  Histogram h;
  for (std::uint8_t v : img.pixels()) ++h.counts[v];
  return h;
}

double shannon_entropy(const Histogram& h) {
  const auto total = static_cast<double>(h.total());
  if (total == 0) return 0.0;
  double entropy = 0.0;
  for (std::uint64_t c : h.counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / total;
    entropy -= p * std::log2(p);
  }
  // A single symbol gives -1 * log2(1) = -0.
  return entropy == 0.0 ? 0.0 : entropy;
}

double shannon_entropy(const Image& img) { return shannon_entropy(histogram(img)); }

double adjacent_correlation(const Image& img, Direction direction) {
  const std::size_t dr = direction == Direction::kHorizontal ? 0 : 1;
  const std::size_t dc = direction == Direction::kVertical ? 0 : 1;
  if (img.height() <= dr || img.width() <= dc) {
    throw std::invalid_argument("image has no adjacent pixel pairs in this direction");
  }
  const std::size_t rows = img.height() - dr;
  const std::size_t cols = img.width() - dc;

  // Pixel values are small integers, so the raw sums are exact in 64 bits.
  std::uint64_t sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const std::uint64_t x = img.at(r, c);
      const std::uint64_t y = img.at(r + dr, c + dc);
      sx += x;
      sy += y;
      sxx += x * x;
      syy += y * y;
      sxy += x * y;
    }
  }
  // n^2 times the population (co)variances, exact in 128-bit integers.
  __extension__ typedef __int128 wide;
  const wide n = static_cast<wide>(rows * cols);
  const wide var_x = n * static_cast<wide>(sxx) - static_cast<wide>(sx) * static_cast<wide>(sx);
  const wide var_y = n * static_cast<wide>(syy) - static_cast<wide>(sy) * static_cast<wide>(sy);
  const wide cov = n * static_cast<wide>(sxy) - static_cast<wide>(sx) * static_cast<wide>(sy);
  if (var_x == 0 || var_y == 0) throw ZeroVariance("correlation undefined: constant pixel series");
  const long double rho = static_cast<long double>(cov) /
                          std::sqrt(static_cast<long double>(var_x) * static_cast<long double>(var_y));
  return static_cast<double>(std::clamp(rho, -1.0L, 1.0L));
}

double chi_square_uniformity(const Histogram& h) {
  const std::uint64_t total = h.total();
  if (total < 256) throw std::invalid_argument("chi-square test needs at least 256 samples");
  const double expected = static_cast<double>(total) / 256.0;
  double chi = 0.0;
  for (std::uint64_t c : h.counts) {
    const double d = static_cast<double>(c) - expected;
    chi += d * d / expected;
  }
  return chi;
}

AnalysisReport analyze(const Image& img) {
  AnalysisReport report;
  report.histogram = histogram(img);
  report.entropy_bits = shannon_entropy(report.histogram);
  auto corr = [&](Direction d) -> std::optional<double> {
    try {
      return adjacent_correlation(img, d);
    } catch (const ZeroVariance&) {
      return std::nullopt;
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  };
  report.corr_horizontal = corr(Direction::kHorizontal);
  report.corr_vertical = corr(Direction::kVertical);
  report.corr_diagonal = corr(Direction::kDiagonal);
  report.chi_square = report.histogram.total() >= 256 ? chi_square_uniformity(report.histogram)
                                                      : std::nan("");
  return report;
}

}  // namespace chuacrypt
