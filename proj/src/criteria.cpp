#include "era/criteria.hpp"

#include <algorithm>
#include <cmath>

#include "era/error.hpp"
#include "era/util.hpp"

namespace era {
namespace {

double fi_from_grid(const GridHistogram& h) {
  double sum = 0.0;
  for (std::size_t i = 0; i < h.counts.size(); ++i)
    if (h.counts[i] > 0) sum += h.fitness_sums[i] / static_cast<double>(h.counts[i]);
  return sum / static_cast<double>(h.counts.size());
}

// rank 1 for the largest value when descending, for the smallest otherwise
std::vector<double> ranks_of(const std::vector<double>& scores, bool descending) {
  if (!descending) return average_ranks(scores);
  std::vector<double> neg(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) neg[i] = -scores[i];
  return average_ranks(neg);
}

}  // namespace

double compute_fi(const MetricTable& t, const std::string& m1, const std::string& m2,
                  int resolution) {
  if (!t.has_fitness) raise(Errc::InvalidParams, "fitness column required for FI");
  return fi_from_grid(bin_pair(t, m1, m2, resolution));
}

SpearmanResult compute_mc(const MetricTable& t, const std::string& m1, const std::string& m2) {
  int c1 = t.column_index(m1);
  int c2 = t.column_index(m2);
  if (c1 < 0) raise(Errc::UnknownColumn, "unknown metric '" + m1 + "'");
  if (c2 < 0) raise(Errc::UnknownColumn, "unknown metric '" + m2 + "'");
  return spearman_rho(t.columns[c1], t.columns[c2]);
}

double compute_amc(const MetricTable& t, const std::string& m1, const std::string& m2) {
  if (t.column_names.size() < 3)
    raise(Errc::TooFewMetrics, "alternative coverage needs at least 3 metrics");
  int c1 = t.column_index(m1);
  int c2 = t.column_index(m2);
  if (c1 < 0) raise(Errc::UnknownColumn, "unknown metric '" + m1 + "'");
  if (c2 < 0) raise(Errc::UnknownColumn, "unknown metric '" + m2 + "'");

  double sum = 0.0;
  long alternatives = 0;
  for (std::size_t a = 0; a < t.column_names.size(); ++a) {
    if (static_cast<int>(a) == c1 || static_cast<int>(a) == c2) continue;
    double r1 = std::fabs(spearman_rho(t.columns[a], t.columns[c1]).rho);
    double r2 = std::fabs(spearman_rho(t.columns[a], t.columns[c2]).rho);
    sum += std::max(r1, r2);
    ++alternatives;
  }
  return sum / static_cast<double>(alternatives);
}

std::vector<std::vector<SpearmanResult>> correlation_matrix(const MetricTable& t, int threads) {
  const std::size_t n = t.column_names.size();
  std::vector<std::vector<SpearmanResult>> matrix(n, std::vector<SpearmanResult>(n));
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  cells.reserve(n * (n + 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) cells.emplace_back(i, j);

  parallel_for(cells.size(), threads, [&](std::size_t k) {
    auto [i, j] = cells[k];
    SpearmanResult r = spearman_rho(t.columns[i], t.columns[j]);
    matrix[i][j] = r;
    matrix[j][i] = r;
  });
  return matrix;
}

RankingTable rank_pairs(const MetricTable& t, int resolution, int threads) {
  const std::size_t n = t.column_names.size();
  if (n < 3) raise(Errc::TooFewMetrics, "pair ranking needs at least 3 metrics");
  if (t.rows() < 2) raise(Errc::TooShort, "pair ranking needs at least 2 levels");

  RankingTable r;
  r.n_metrics = static_cast<int>(n);
  r.resolution = resolution;
  r.has_fi = t.has_fitness;

  auto matrix = correlation_matrix(t, threads);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      PairCriteria pc;
      pc.m1 = t.column_names[i];
      pc.m2 = t.column_names[j];
      pc.mc_signed = matrix[i][j].rho;
      pc.mc_abs = std::fabs(pc.mc_signed);
      pc.degenerate = matrix[i][j].degenerate;

      double sum = 0.0;
      for (std::size_t a = 0; a < n; ++a) {
        if (a == i || a == j) continue;
        sum += std::max(std::fabs(matrix[a][i].rho), std::fabs(matrix[a][j].rho));
      }
      pc.amc = sum / static_cast<double>(n - 2);
      r.pairs.push_back(std::move(pc));
    }

  if (r.has_fi) {
    parallel_for(r.pairs.size(), threads, [&](std::size_t k) {
      r.pairs[k].fi = compute_fi(t, r.pairs[k].m1, r.pairs[k].m2, resolution);
    });
  }

  std::vector<double> fi_scores(r.pairs.size()), mc_scores(r.pairs.size()),
      amc_scores(r.pairs.size());
  for (std::size_t k = 0; k < r.pairs.size(); ++k) {
    fi_scores[k] = r.pairs[k].fi;
    mc_scores[k] = r.pairs[k].mc_abs;
    amc_scores[k] = r.pairs[k].amc;
  }
  std::vector<double> fi_rank = ranks_of(fi_scores, true);   // high FI is good
  std::vector<double> mc_rank = ranks_of(mc_scores, false);  // low |rho| is good
  std::vector<double> amc_rank = ranks_of(amc_scores, true); // high coverage is good

  for (std::size_t k = 0; k < r.pairs.size(); ++k) {
    PairCriteria& pc = r.pairs[k];
    pc.mc_rank = mc_rank[k];
    pc.amc_rank = amc_rank[k];
    if (r.has_fi) {
      pc.fi_rank = fi_rank[k];
      pc.avg_rank = (pc.fi_rank + pc.mc_rank + pc.amc_rank) / 3.0;
    } else {
      pc.fi_rank = 0.0;
      pc.avg_rank = (pc.mc_rank + pc.amc_rank) / 2.0;
    }
  }

  std::sort(r.pairs.begin(), r.pairs.end(), [](const PairCriteria& a, const PairCriteria& b) {
    if (a.avg_rank != b.avg_rank) return a.avg_rank < b.avg_rank;
    if (a.m1 != b.m1) return a.m1 < b.m1;
    return a.m2 < b.m2;
  });
  return r;
}

}  // namespace era
