#include "chuacrypt/kantz.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "chuacrypt/errors.hpp"

namespace chuacrypt {

void KantzConfig::validate() const {
  if (epsilon && !(std::isfinite(*epsilon) && *epsilon > 0)) {
    throw std::invalid_argument("epsilon must be positive and finite");
  }
  if (!(fit_lo >= 1 && fit_lo < fit_hi && fit_hi <= max_delta_n)) {
    throw std::invalid_argument("fit window must satisfy 1 <= lo < hi <= max_delta_n");
  }
}

namespace {

// Fenwick tree over positions holding (count, sum) pairs.
class CountSumTree {
 public:
  explicit CountSumTree(std::size_t n) : count_(n + 1, 0), sum_(n + 1, 0.0L) {}

  void add(std::size_t pos, long double value) {
    for (std::size_t i = pos + 1; i < count_.size(); i += i & (~i + 1)) {
      ++count_[i];
      sum_[i] += value;
    }
  }

  // Totals over positions [0, end).
  std::pair<std::size_t, long double> prefix(std::size_t end) const {
    std::size_t c = 0;
    long double s = 0.0L;
    for (std::size_t i = end; i > 0; i -= i & (~i + 1)) {
      c += count_[i];
      s += sum_[i];
    }
    return {c, s};
  }

  std::pair<std::size_t, long double> range(std::size_t lo, std::size_t hi) const {
    const auto [ch, sh] = prefix(hi + 1);
    const auto [cl, sl] = prefix(lo);
    return {ch - cl, sh - sl};
  }

 private:
  std::vector<std::size_t> count_;
  std::vector<long double> sum_;
};

double population_stddev(std::span<const double> x) {
  const long double mean =
      std::accumulate(x.begin(), x.end(), 0.0L) / static_cast<long double>(x.size());
  long double ss = 0.0L;
  for (double v : x) ss += (v - mean) * (v - mean);
  return static_cast<double>(std::sqrt(ss / static_cast<long double>(x.size())));
}

struct Neighborhood {
  std::size_t lo = 0;  // inclusive range in value-sorted order
  std::size_t hi = 0;
  std::size_t count = 0;              // neighbors after self and Theiler exclusion
  std::vector<std::size_t> excluded;  // in-range indices removed by the Theiler window
};

}  // namespace

StretchingCurve kantz_stretching_curve(std::span<const double> series, const KantzConfig& cfg) {
  cfg.validate();
  if (series.size() <= cfg.max_delta_n + 1) {
    throw std::invalid_argument("series too short for the requested max_delta_n");
  }
  for (double v : series) {
    if (!std::isfinite(v)) throw std::invalid_argument("series contains non-finite values");
  }

  StretchingCurve curve;
  curve.epsilon = cfg.epsilon ? *cfg.epsilon : 0.2 * population_stddev(series);
  const double eps = curve.epsilon;
  if (!(eps > 0)) throw NoNeighbors("epsilon is zero: series has zero variance");

  const std::size_t m = series.size() - cfg.max_delta_n;
  const auto x = series.first(m);

  // Indices sorted by value. The neighbor test |x[j] - x[n]| <= eps is
  // monotone in x[j] on each side of x[n], so neighborhoods are contiguous.
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });

  auto is_neighbor = [&](std::size_t j, std::size_t n) { return std::abs(x[j] - x[n]) <= eps; };

  std::vector<Neighborhood> hoods(m);
  for (std::size_t n = 0; n < m; ++n) {
    const double xn = x[n];
    const auto first = std::partition_point(order.begin(), order.end(),
                                            [&](std::size_t j) { return !(xn - x[j] <= eps) && x[j] < xn; });
    const auto last = std::partition_point(first, order.end(),
                                           [&](std::size_t j) { return x[j] <= xn || x[j] - xn <= eps; });
    Neighborhood& h = hoods[n];
    h.lo = static_cast<std::size_t>(first - order.begin());
    h.hi = static_cast<std::size_t>(last - order.begin()) - 1;  // contains n itself
    std::size_t in_range = h.hi - h.lo + 1;
    const std::size_t t_lo = n > cfg.theiler_window ? n - cfg.theiler_window : 0;
    const std::size_t t_hi = std::min(m - 1, n + cfg.theiler_window);
    for (std::size_t j = t_lo; j <= t_hi; ++j) {
      if (j != n && is_neighbor(j, n)) h.excluded.push_back(j);
    }
    h.count = in_range - 1 - h.excluded.size();
    if (h.count == 0) {
      ++curve.skipped;
    } else {
      ++curve.references;
    }
  }
  if (curve.references == 0) throw NoNeighbors("no reference point has a neighbor within epsilon");

  // Differences are translation invariant; centering keeps the running sums
  // small and makes a constant series exactly zero.
  const auto [min_it, max_it] = std::minmax_element(series.begin(), series.end());
  const double center = *min_it + (*max_it - *min_it) / 2.0;

  std::vector<std::size_t> refs;
  refs.reserve(curve.references);
  for (std::size_t n = 0; n < m; ++n) {
    if (hoods[n].count > 0) refs.push_back(n);
  }

  std::vector<long double> y(m);
  std::vector<long double> prefix_sorted(m + 1);
  std::vector<std::size_t> by_y(m);
  std::vector<std::size_t> pos_of(m);
  for (std::size_t p = 0; p < m; ++p) pos_of[order[p]] = p;
  std::vector<double> log_sep(m, 0.0);

  curve.points.reserve(cfg.max_delta_n);
  for (std::size_t dn = 1; dn <= cfg.max_delta_n; ++dn) {
    for (std::size_t j = 0; j < m; ++j) y[j] = static_cast<long double>(series[j + dn] - center);
    prefix_sorted[0] = 0.0L;
    for (std::size_t p = 0; p < m; ++p) prefix_sorted[p + 1] = prefix_sorted[p] + y[order[p]];

    std::iota(by_y.begin(), by_y.end(), std::size_t{0});
    std::stable_sort(by_y.begin(), by_y.end(), [&](std::size_t a, std::size_t b) { return y[a] < y[b]; });
    std::vector<std::size_t> queries = refs;
    std::stable_sort(queries.begin(), queries.end(),
                     [&](std::size_t a, std::size_t b) { return y[a] < y[b]; });

    // Sweep queries by increasing y[n]; the tree holds every point with
    // y < y[n], so sum |y_j - y_n| = (S - 2 S_less) - y_n (C - 2 C_less).
    CountSumTree tree(m);
    std::size_t inserted = 0;
    for (std::size_t n : queries) {
      const long double yn = y[n];
      while (inserted < m && y[by_y[inserted]] < yn) {
        tree.add(pos_of[by_y[inserted]], y[by_y[inserted]]);
        ++inserted;
      }
      const Neighborhood& h = hoods[n];
      const auto [c_less, s_less] = tree.range(h.lo, h.hi);
      const auto c_all = static_cast<long double>(h.hi - h.lo + 1);
      const long double s_all = prefix_sorted[h.hi + 1] - prefix_sorted[h.lo];
      long double total = (s_all - 2.0L * s_less) - yn * (c_all - 2.0L * static_cast<long double>(c_less));
      for (std::size_t j : h.excluded) total -= std::abs(y[j] - yn);
      const long double mean = total / static_cast<long double>(h.count);
      if (!(mean > 0)) {
        throw LogOfZero("mean neighbor separation is zero at delta_n " + std::to_string(dn));
      }
      log_sep[n] = static_cast<double>(std::log(mean));
    }

    long double acc = 0.0L;
    for (std::size_t n : refs) acc += log_sep[n];
    curve.points.push_back({dn, static_cast<double>(acc / static_cast<long double>(refs.size()))});
  }
  return curve;
}

double fit_slope(const StretchingCurve& curve, std::size_t lo, std::size_t hi) {
  if (!(lo < hi)) throw std::invalid_argument("fit window must contain at least two points");
  long double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (const auto& pt : curve.points) {
    if (pt.delta_n < lo || pt.delta_n > hi) continue;
    const auto xv = static_cast<long double>(pt.delta_n);
    sx += xv;
    sy += pt.s;
    sxx += xv * xv;
    sxy += xv * pt.s;
    ++n;
  }
  if (n < 2) throw std::invalid_argument("fit window contains fewer than two curve points");
  const auto nn = static_cast<long double>(n);
  return static_cast<double>((nn * sxy - sx * sy) / (nn * sxx - sx * sx));
}

double estimate_lyapunov(std::span<const double> series, const KantzConfig& cfg) {
  const StretchingCurve curve = kantz_stretching_curve(series, cfg);
  return fit_slope(curve, cfg.fit_lo, cfg.fit_hi);
}

}  // namespace chuacrypt
