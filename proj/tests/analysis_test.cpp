#include "chuacrypt/analysis.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "chuacrypt/errors.hpp"

namespace chuacrypt {
namespace {

Image random_image(std::size_t w, std::size_t h, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> px(w * h);
  for (auto& p : px) p = static_cast<std::uint8_t>(rng());
  return Image(w, h, std::move(px));
}

Image all_values_once() {
  std::vector<std::uint8_t> px(256);
  for (int i = 0; i < 256; ++i) px[i] = static_cast<std::uint8_t>(i);
  return Image(16, 16, px);
}

TEST(Histogram, ConstantImage) {
  const Histogram h = histogram(Image(2, 2, std::uint8_t{0}));
  EXPECT_EQ(h.counts[0], 4u);
  for (int i = 1; i < 256; ++i) EXPECT_EQ(h.counts[i], 0u);
}

TEST(Histogram, EachValueOnce) {
  const Histogram h = histogram(all_values_once());
  for (auto c : h.counts) EXPECT_EQ(c, 1u);
}

TEST(Histogram, ConservesPixelCount) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Image img = random_image(1 + seed * 3, 2 + seed, seed);
    EXPECT_EQ(histogram(img).total(), img.size());
  }
}

TEST(ShannonEntropy, ReferenceValues) {
  EXPECT_EQ(shannon_entropy(Image(8, 8, std::uint8_t{77})), 0.0);
  EXPECT_DOUBLE_EQ(shannon_entropy(all_values_once()), 8.0);
  std::vector<std::uint8_t> half(64, 0);
  std::fill(half.begin() + 32, half.end(), 255);
  EXPECT_DOUBLE_EQ(shannon_entropy(Image(8, 8, half)), 1.0);
}

TEST(ShannonEntropy, BoundedAndMaximalOnlyWhenUniform) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Image img = random_image(64, 64, seed);
    const double h = shannon_entropy(img);
    EXPECT_GE(h, 0.0);
    EXPECT_LT(h, 8.0);  // 4096 random pixels are never exactly uniform
  }
}

TEST(AdjacentCorrelation, IdenticalColumnsGivePlusOne) {
  // Rows alternate between all-0 and all-255: each horizontal pair is (v, v).
  Image img(8, 8, std::uint8_t{0});
  for (std::size_t r = 1; r < 8; r += 2) {
    for (std::size_t c = 0; c < 8; ++c) img.at(r, c) = 255;
  }
  EXPECT_NEAR(adjacent_correlation(img, Direction::kHorizontal), 1.0, 1e-12);
  EXPECT_NEAR(adjacent_correlation(img, Direction::kVertical), -1.0, 1e-12);
}

TEST(AdjacentCorrelation, CheckerboardGivesMinusOne) {
  Image img(8, 8, std::uint8_t{0});
  for (std::size_t r = 0; r < 8; ++r) {
    for (std::size_t c = 0; c < 8; ++c) img.at(r, c) = (r + c) % 2 ? 255 : 0;
  }
  EXPECT_NEAR(adjacent_correlation(img, Direction::kHorizontal), -1.0, 1e-12);
  EXPECT_NEAR(adjacent_correlation(img, Direction::kVertical), -1.0, 1e-12);
  EXPECT_NEAR(adjacent_correlation(img, Direction::kDiagonal), 1.0, 1e-12);
}

TEST(AdjacentCorrelation, MatchesTwoPassPopulationFormula) {
  const Image img = random_image(37, 23, 5);
  for (Direction d : {Direction::kHorizontal, Direction::kVertical, Direction::kDiagonal}) {
    const std::size_t dr = d == Direction::kHorizontal ? 0 : 1;
    const std::size_t dc = d == Direction::kVertical ? 0 : 1;
    std::vector<double> x, y;
    for (std::size_t r = 0; r + dr < img.height(); ++r) {
      for (std::size_t c = 0; c + dc < img.width(); ++c) {
        x.push_back(img.at(r, c));
        y.push_back(img.at(r + dr, c + dc));
      }
    }
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      mx += x[i];
      my += y[i];
    }
    mx /= n;
    my /= n;
    double cov = 0, vx = 0, vy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      cov += (x[i] - mx) * (y[i] - my);
      vx += (x[i] - mx) * (x[i] - mx);
      vy += (y[i] - my) * (y[i] - my);
    }
    EXPECT_NEAR(adjacent_correlation(img, d), (cov / n) / std::sqrt((vx / n) * (vy / n)), 1e-12);
  }
}

TEST(AdjacentCorrelation, RowConstantImageIsSelfCorrelated) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    Image img(16, 32, std::uint8_t{0});
    for (std::size_t r = 0; r < 32; ++r) {
      const auto v = static_cast<std::uint8_t>(r == 0 ? 0 : 1 + rng() % 255);
      for (std::size_t c = 0; c < 16; ++c) img.at(r, c) = v;
    }
    EXPECT_NEAR(adjacent_correlation(img, Direction::kHorizontal), 1.0, 1e-12);
  }
}

TEST(AdjacentCorrelation, InvariantUnderPositiveAffineRescaling) {
  const Image base = random_image(40, 20, 6);
  Image halved = base;
  Image rescaled = base;
  for (std::size_t r = 0; r < base.height(); ++r) {
    for (std::size_t c = 0; c < base.width(); ++c) {
      halved.at(r, c) = static_cast<std::uint8_t>(base.at(r, c) / 2);
      rescaled.at(r, c) = static_cast<std::uint8_t>(2 * halved.at(r, c) + 1);
    }
  }
  for (Direction d : {Direction::kHorizontal, Direction::kVertical, Direction::kDiagonal}) {
    EXPECT_NEAR(adjacent_correlation(halved, d), adjacent_correlation(rescaled, d), 1e-9);
  }
}

TEST(AdjacentCorrelation, AlwaysWithinUnitInterval) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Image img = random_image(5 + seed, 4 + seed % 7, seed);
    for (Direction d : {Direction::kHorizontal, Direction::kVertical, Direction::kDiagonal}) {
      const double rho = adjacent_correlation(img, d);
      EXPECT_GE(rho, -1.0);
      EXPECT_LE(rho, 1.0);
    }
  }
}

TEST(AdjacentCorrelation, Errors) {
  EXPECT_THROW(adjacent_correlation(Image(4, 4, std::uint8_t{9}), Direction::kDiagonal), ZeroVariance);
  EXPECT_THROW(adjacent_correlation(Image(1, 5, std::uint8_t{9}), Direction::kHorizontal), std::invalid_argument);
  EXPECT_THROW(adjacent_correlation(Image(5, 1, std::uint8_t{9}), Direction::kVertical), std::invalid_argument);
}

TEST(ChiSquare, ReferenceValues) {
  Histogram uniform;
  uniform.counts.fill(10);
  EXPECT_EQ(chi_square_uniformity(uniform), 0.0);

  Histogram spike;
  spike.counts[42] = 1024;
  EXPECT_DOUBLE_EQ(chi_square_uniformity(spike), 1024.0 * 255.0);
}

TEST(ChiSquare, NonNegativeAndZeroOnlyWhenUniform) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    Histogram h;
    for (auto& c : h.counts) c = 5 + rng() % 3;
    const bool uniform = std::all_of(h.counts.begin(), h.counts.end(), [&](auto c) { return c == h.counts[0]; });
    const double chi = chi_square_uniformity(h);
    EXPECT_GE(chi, 0.0);
    EXPECT_EQ(chi == 0.0, uniform);
  }
}

TEST(ChiSquare, RequiresEnoughSamples) {
  Histogram h;
  h.counts[0] = 255;
  EXPECT_THROW(chi_square_uniformity(h), std::invalid_argument);
}

TEST(Analyze, ReportsUndefinedCorrelationAsEmpty) {
  const AnalysisReport r = analyze(Image(16, 16, std::uint8_t{3}));
  EXPECT_EQ(r.entropy_bits, 0.0);
  EXPECT_FALSE(r.corr_horizontal.has_value());
  EXPECT_EQ(r.histogram.counts[3], 256u);
  EXPECT_DOUBLE_EQ(r.chi_square, 256.0 * 255.0);
}

}  // namespace
}  // namespace chuacrypt
