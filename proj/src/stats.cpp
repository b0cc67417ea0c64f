#include "era/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "era/error.hpp"

namespace era {

int MetricTable::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < column_names.size(); ++i)
    if (column_names[i] == name) return static_cast<int>(i);
  return -1;
}

void MetricTable::add_row(std::string level_id, std::string generator_label,
                          std::span<const double> values, double fitness_value) {
  if (!std::isfinite(fitness_value) || fitness_value < 0.0 || fitness_value > 1.0)
    raise(Errc::InvalidParams, "fitness must be finite and within [0, 1]");
  add_row_no_fitness(std::move(level_id), std::move(generator_label), values);
  fitness.push_back(fitness_value);
  has_fitness = true;
}

void MetricTable::add_row_no_fitness(std::string level_id, std::string generator_label,
                                     std::span<const double> values) {
  if (columns.empty()) columns.resize(column_names.size());
  if (values.size() != column_names.size())
    raise(Errc::LengthMismatch, "row has " + std::to_string(values.size()) +
                                    " values for " + std::to_string(column_names.size()) +
                                    " columns");
  for (double v : values)
    if (!std::isfinite(v)) raise(Errc::InvalidParams, "metric values must be finite");
  level_ids.push_back(std::move(level_id));
  generator_labels.push_back(std::move(generator_label));
  for (std::size_t c = 0; c < values.size(); ++c) columns[c].push_back(values[c]);
}

std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    // positions i..j (0-based) share the average 1-based rank
    double shared = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
    i = j + 1;
  }
  return ranks;
}

SpearmanResult spearman_rho(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    raise(Errc::LengthMismatch, "correlation inputs differ in length");
  if (x.size() < 2) raise(Errc::TooShort, "correlation needs at least 2 points");

  std::vector<double> rx = average_ranks(x);
  std::vector<double> ry = average_ranks(y);
  const std::size_t n = rx.size();

  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_x += rx[i];
    mean_y += ry[i];
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);

  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double dx = rx[i] - mean_x;
    double dy = ry[i] - mean_y;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return {0.0, true};
  double rho = sxy / std::sqrt(sxx * syy);
  return {std::clamp(rho, -1.0, 1.0), false};
}

int bin_index(double v, double lo, double hi, int resolution) {
  if (hi <= lo) return 0;
  int idx = static_cast<int>(std::floor(resolution * (v - lo) / (hi - lo)));
  return std::clamp(idx, 0, resolution - 1);
}

GridHistogram bin_pair(const MetricTable& t, const std::string& m1,
                       const std::string& m2, int resolution) {
  if (resolution < 1) raise(Errc::InvalidParams, "resolution must be >= 1");
  int c1 = t.column_index(m1);
  int c2 = t.column_index(m2);
  if (c1 < 0) raise(Errc::UnknownColumn, "unknown metric '" + m1 + "'");
  if (c2 < 0) raise(Errc::UnknownColumn, "unknown metric '" + m2 + "'");

  const std::vector<double>& xs = t.columns[c1];
  const std::vector<double>& ys = t.columns[c2];

  GridHistogram h;
  h.resolution = resolution;
  h.counts.assign(static_cast<std::size_t>(resolution) * resolution, 0);
  h.fitness_sums.assign(static_cast<std::size_t>(resolution) * resolution, 0.0);
  if (xs.empty()) return h;

  auto [x_lo, x_hi] = std::minmax_element(xs.begin(), xs.end());
  auto [y_lo, y_hi] = std::minmax_element(ys.begin(), ys.end());
  h.x_min = *x_lo;
  h.x_max = *x_hi;
  h.y_min = *y_lo;
  h.y_max = *y_hi;
  h.x_degenerate = h.x_min == h.x_max;
  h.y_degenerate = h.y_min == h.y_max;

  for (std::size_t i = 0; i < xs.size(); ++i) {
    int ix = bin_index(xs[i], h.x_min, h.x_max, resolution);
    int iy = bin_index(ys[i], h.y_min, h.y_max, resolution);
    std::size_t cell = static_cast<std::size_t>(iy) * resolution + ix;
    ++h.counts[cell];
    if (t.has_fitness) h.fitness_sums[cell] += t.fitness[i];
  }
  return h;
}

}  // namespace era
