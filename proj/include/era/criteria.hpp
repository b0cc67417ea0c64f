#pragma once

#include <string>
#include <vector>

#include "era/stats.hpp"

namespace era {

struct PairCriteria {
  std::string m1, m2;     // column-order pair, m1 before m2
  double fi = 0.0;        // mean cell fitness over the whole grid, empty cells count 0
  double mc_signed = 0.0;
  double mc_abs = 0.0;
  double amc = 0.0;       // mean over alternatives of their strongest link to the pair
  double fi_rank = 0.0;   // 1 = most fitness independent
  double mc_rank = 0.0;   // 1 = weakest mutual correlation
  double amc_rank = 0.0;  // 1 = best covered by the alternatives
  double avg_rank = 0.0;
  bool degenerate = false;  // one of the paired columns is constant
};

struct RankingTable {
  std::vector<PairCriteria> pairs;  // ascending avg_rank, ties by (m1, m2)
  int n_metrics = 0;
  int resolution = 0;
  bool has_fi = true;  // false when the table has no fitness column
};

/// Mean fitness over all resolution^2 cells of the pair grid; unoccupied
/// cells contribute 0, so sparse coverage scores low.
double compute_fi(const MetricTable& t, const std::string& m1, const std::string& m2,
                  int resolution);

/// Spearman correlation of the pair; the sign is kept for reporting, the
/// absolute value drives ranking.
SpearmanResult compute_mc(const MetricTable& t, const std::string& m1, const std::string& m2);

/// For each alternative metric a, s(a) = max(|rho(a, m1)|, |rho(a, m2)|);
/// AMC is the mean of s over all alternatives. Needs >= 3 candidate columns.
double compute_amc(const MetricTable& t, const std::string& m1, const std::string& m2);

/// Signed Spearman correlations for every column pair; entry (i, j) equals
/// entry (j, i) and the diagonal is 1 on non-constant columns.
std::vector<std::vector<SpearmanResult>> correlation_matrix(const MetricTable& t,
                                                            int threads = 1);

/// Scores and ranks every unordered candidate pair. Per-criterion ranks use
/// average ranks on ties; avg_rank is their mean. Without a fitness column
/// FI is skipped and avg_rank averages the two remaining ranks.
RankingTable rank_pairs(const MetricTable& t, int resolution = 20, int threads = 1);

}  // namespace era
