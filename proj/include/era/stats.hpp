#pragma once

#include <span>
#include <string>
#include <vector>

namespace era {

/// Column-major table of metric values per level. `fitness` holds the
/// Playability column, kept out of the candidate columns.
struct MetricTable {
  std::vector<std::string> level_ids;
  std::vector<std::string> generator_labels;
  std::vector<std::string> column_names;
  std::vector<std::vector<double>> columns;  // columns[c][row]
  std::vector<double> fitness;               // empty when has_fitness is false
  bool has_fitness = false;

  std::size_t rows() const { return level_ids.size(); }
  int column_index(const std::string& name) const;  // -1 when absent

  /// Appends one level row. Values must be finite; fitness must be in [0, 1].
  void add_row(std::string level_id, std::string generator_label,
               std::span<const double> values, double fitness_value);
  void add_row_no_fitness(std::string level_id, std::string generator_label,
                          std::span<const double> values);
};

/// 1-based ranks; tied values share the average of their rank positions.
std::vector<double> average_ranks(std::span<const double> values);

struct SpearmanResult {
  double rho = 0.0;
  bool degenerate = false;  // a constant input; rho reported as 0
};

/// Spearman rank correlation via average ranks + Pearson on the ranks
/// (the rank-difference shortcut misbehaves under ties). Inputs must have
/// equal length >= 2.
SpearmanResult spearman_rho(std::span<const double> x, std::span<const double> y);

/// 2-D histogram of a metric pair. Cell (ix, iy) covers the ix-th slice of
/// the m1 range and iy-th slice of the m2 range; the top edge is closed, so
/// maxima land in the last cell.
struct GridHistogram {
  int resolution = 0;
  double x_min = 0.0, x_max = 0.0, y_min = 0.0, y_max = 0.0;
  std::vector<long> counts;         // resolution * resolution, row iy major
  std::vector<double> fitness_sums; // same layout; all zero without fitness
  bool x_degenerate = false;        // constant column, everything in slice 0
  bool y_degenerate = false;

  long count_at(int ix, int iy) const {
    return counts[static_cast<std::size_t>(iy) * resolution + ix];
  }
  double fitness_sum_at(int ix, int iy) const {
    return fitness_sums[static_cast<std::size_t>(iy) * resolution + ix];
  }
};

/// Cell index floor(resolution * (v - min) / (max - min)), clamped into range.
int bin_index(double v, double lo, double hi, int resolution);

GridHistogram bin_pair(const MetricTable& t, const std::string& m1,
                       const std::string& m2, int resolution);

}  // namespace era
