// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria 9 and 10 drive the installed CLI binary end to end.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "era/agent.hpp"
#include "era/criteria.hpp"
#include "era/error.hpp"
#include "era/extract.hpp"
#include "era/level.hpp"
#include "era/report.hpp"
#include "era/stats.hpp"
#include "era/synth.hpp"
#include "era/util.hpp"

#ifndef ERA_CLI_PATH
#error "ERA_CLI_PATH must point at the era binary"
#endif

namespace {

namespace fs = std::filesystem;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

// ---- scratch + process helpers -------------------------------------------

struct TempDir {
  fs::path path;
  TempDir() {
    static std::mt19937_64 rng{std::random_device{}()};
    path = fs::temp_directory_path() / ("era_acceptance_" + std::to_string(rng()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

void run_cli(const std::string& args) {
  std::string cmd = std::string(ERA_CLI_PATH) + " " + args + " > /dev/null";
  int rc = std::system(cmd.c_str());
  require(rc == 0, "command failed: era " + args);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  require(static_cast<bool>(in), "cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
  fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  out << text;
}

// Byte-compares two directory trees.
void require_same_tree(const fs::path& a, const fs::path& b) {
  std::map<std::string, std::string> ca, cb;
  for (auto& entry : fs::recursive_directory_iterator(a))
    if (entry.is_regular_file())
      ca[fs::relative(entry.path(), a).string()] = slurp(entry.path());
  for (auto& entry : fs::recursive_directory_iterator(b))
    if (entry.is_regular_file())
      cb[fs::relative(entry.path(), b).string()] = slurp(entry.path());
  require(!ca.empty(), "no files under " + a.string());
  require(ca.size() == cb.size(), a.string() + " and " + b.string() +
                                      " hold different file sets");
  for (const auto& [rel, bytes] : ca) {
    auto it = cb.find(rel);
    require(it != cb.end(), "missing from second tree: " + rel);
    require(it->second == bytes, "bytes differ: " + rel);
  }
}

// ---- table builders --------------------------------------------------------

era::MetricTable random_table(int n_cols, int n_rows, std::uint64_t seed,
                              double scale = 100.0) {
  era::MetricTable t;
  for (int c = 0; c < n_cols; ++c) t.column_names.push_back("M" + std::to_string(c));
  t.columns.resize(n_cols);
  era::SplitMix64 rng(seed);
  std::vector<double> row(n_cols);
  for (int r = 0; r < n_rows; ++r) {
    for (double& v : row) v = rng.uniform() * scale;
    t.add_row("l" + std::to_string(r), "g", row, rng.uniform());
  }
  return t;
}

era::MetricTable pair_table(const std::vector<double>& a, const std::vector<double>& b,
                            const std::vector<double>& fit) {
  era::MetricTable t;
  t.column_names = {"A", "B"};
  t.columns.resize(2);
  for (std::size_t i = 0; i < a.size(); ++i) {
    double row[] = {a[i], b[i]};
    t.add_row("l" + std::to_string(i), "g", row, fit[i]);
  }
  return t;
}

const era::PairCriteria& find_pair(const era::RankingTable& r, const std::string& m1,
                                   const std::string& m2) {
  for (const era::PairCriteria& p : r.pairs)
    if ((p.m1 == m1 && p.m2 == m2) || (p.m1 == m2 && p.m2 == m1)) return p;
  throw Failure("pair " + m1 + "/" + m2 + " missing from ranking");
}

// Independent Spearman oracle: rank by sorted position with tie averaging,
// then Pearson on the ranks in long double.
std::vector<long double> oracle_ranks(const std::vector<double>& v) {
  std::vector<std::size_t> order(v.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return v[x] < v[y]; });
  std::vector<long double> ranks(v.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    long double shared = (static_cast<long double>(i) + j) / 2.0L + 1.0L;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
    i = j + 1;
  }
  return ranks;
}

long double oracle_spearman(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<long double> rx = oracle_ranks(x), ry = oracle_ranks(y);
  long double mx = 0, my = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    mx += rx[i];
    my += ry[i];
  }
  mx /= rx.size();
  my /= ry.size();
  long double sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    long double dx = rx[i] - mx, dy = ry[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0 || syy == 0) return 0;
  return sxy / std::sqrt(sxx * syy);
}

// ---- criteria ---------------------------------------------------------------

void criterion_pair_count() {
  for (int n = 3; n <= 18; ++n) {
    era::MetricTable t = random_table(n, 30, 100 + n);
    era::RankingTable r = era::rank_pairs(t);
    std::size_t expected = static_cast<std::size_t>(n) * (n - 1) / 2;
    require(r.pairs.size() == expected,
            std::to_string(n) + " metrics must yield " + std::to_string(expected) +
                " pairs, got " + std::to_string(r.pairs.size()));
    require(r.n_metrics == n, "n_metrics mismatch");
  }
  era::MetricTable t18 = random_table(18, 30, 1);
  require(era::rank_pairs(t18).pairs.size() == 153, "18 metrics must yield 153 pairs");
}

void criterion_spearman_oracle() {
  era::SplitMix64 rng(7777);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t n = 2 + rng.below(199);  // lengths 2..200
    std::vector<double> x(n), y(n);
    bool coarse = trial % 2 == 0;  // half the trials are tie-heavy
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = coarse ? static_cast<double>(rng.below(6)) : rng.uniform() * 10.0;
      y[i] = coarse ? static_cast<double>(rng.below(6)) : rng.uniform() * 10.0;
    }
    era::SpearmanResult r = era::spearman_rho(x, y);
    double expected = static_cast<double>(oracle_spearman(x, y));
    require(std::fabs(r.rho - expected) <= 1e-12,
            "spearman drifted from the oracle by " +
                std::to_string(std::fabs(r.rho - expected)) + " at trial " +
                std::to_string(trial));
  }

  std::vector<double> x = {1, 2, 3, 4, 5};
  std::vector<double> y = {5, 6, 7, 8, 7};
  require(std::fabs(era::spearman_rho(x, y).rho - 8.0 / std::sqrt(95.0)) <= 1e-12,
          "tied worked example off");
  require(era::spearman_rho(x, x).rho == 1.0, "identical columns must give exactly 1");
  std::vector<double> rev(x.rbegin(), x.rend());
  require(era::spearman_rho(x, rev).rho == -1.0, "reversed columns must give exactly -1");
}

void criterion_monotone_invariance() {
  era::MetricTable t = random_table(6, 200, 33, /*scale=*/100.0);
  era::RankingTable a = era::rank_pairs(t);

  auto check_against = [&](const era::MetricTable& other, const std::string& label) {
    era::RankingTable b = era::rank_pairs(other);
    require(a.pairs.size() == b.pairs.size(), "pair count changed under " + label);
    for (const era::PairCriteria& pa : a.pairs) {
      const era::PairCriteria& pb = find_pair(b, pa.m1, pa.m2);
      require(std::fabs(pa.mc_signed - pb.mc_signed) <= 1e-12,
              "signed correlation moved under " + label + ": " + pa.m1 + "/" + pa.m2);
      require(std::fabs(pa.mc_abs - pb.mc_abs) <= 1e-12,
              "absolute correlation moved under " + label);
      require(std::fabs(pa.amc - pb.amc) <= 1e-12,
              "alternative coverage moved under " + label);
      require(pa.mc_rank == pb.mc_rank, "correlation rank moved under " + label);
      require(pa.amc_rank == pb.amc_rank, "coverage rank moved under " + label);
    }
  };

  // every column warped at once, alternating the two transforms
  era::MetricTable warped = t;
  for (std::size_t c = 0; c < warped.columns.size(); ++c)
    for (double& v : warped.columns[c])
      v = c % 2 == 0 ? v * v * v : std::exp(v);  // strictly increasing on [0, 100]
  check_against(warped, "blanket monotone transform");

  // a single column at a time
  era::MetricTable cubed = t;
  for (double& v : cubed.columns[0]) v = v * v * v;
  check_against(cubed, "cubing one column");

  era::MetricTable exped = t;
  for (double& v : exped.columns[3]) v = std::exp(v);
  check_against(exped, "exponentiating one column");
}

void criterion_fi_affine_invariance() {
  era::MetricTable t = random_table(4, 500, 44);
  era::MetricTable scaled = t;
  for (auto& column : scaled.columns)
    for (double& v : column) v = 3.0 * v + 7.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      std::string a = "M" + std::to_string(i), b = "M" + std::to_string(j);
      double before = era::compute_fi(t, a, b, 20);
      double after = era::compute_fi(scaled, a, b, 20);
      require(before == after, "fitness independence moved under affine rescale for " +
                                   a + "/" + b);
    }
}

void criterion_fi_hand_grids() {
  double spread =
      era::compute_fi(pair_table({0, 1, 0, 1}, {0, 0, 1, 1}, {1, 1, 0, 0}), "A", "B", 2);
  require(spread == 0.5, "2x2 spread grid must score exactly 0.5, got " +
                             std::to_string(spread));
  double clumped =
      era::compute_fi(pair_table({3, 3, 3, 3}, {7, 7, 7, 7}, {1, 1, 1, 1}), "A", "B", 2);
  require(clumped == 0.25, "single-cell grid must score exactly 0.25");
  double full =
      era::compute_fi(pair_table({0, 1, 0, 1}, {0, 0, 1, 1}, {1, 1, 1, 1}), "A", "B", 2);
  require(full == 1.0, "fully covered unit-fitness grid must score exactly 1.0");

  // the spread case again, end to end through `rank --grid 2`
  TempDir tmp;
  era::MetricTable toy;
  toy.column_names = {"A", "B", "C"};
  toy.columns.resize(3);
  const double rows[4][3] = {{0, 0, 0}, {1, 0, 1}, {0, 1, 2}, {1, 1, 3}};
  const double fit[4] = {1, 1, 0, 0};
  for (int i = 0; i < 4; ++i) toy.add_row("l" + std::to_string(i), "g", rows[i], fit[i]);
  era::write_metric_table(toy, tmp.path / "toy.csv");
  run_cli("rank " + (tmp.path / "toy.csv").string() + " --out " +
          (tmp.path / "r.csv").string() + " --grid 2");
  std::string csv = slurp(tmp.path / "r.csv");
  std::size_t pos = csv.find("\nA,B,");
  require(pos != std::string::npos, "ranking must contain the A,B pair");
  std::size_t fi_begin = pos + 5;
  std::string fi_text = csv.substr(fi_begin, csv.find(',', fi_begin) - fi_begin);
  require(fi_text == "0.5", "CLI FI for the spread pair must print 0.5, got " + fi_text);
}

void criterion_large_independent_table() {
  const int n = 10000;
  era::MetricTable t;
  t.column_names = {"X", "Y", "Z"};
  t.columns.resize(3);
  era::SplitMix64 rng(2468);
  for (int i = 0; i < n; ++i) {
    double x = rng.uniform();
    double y = rng.uniform();
    double row[] = {x, y, x};  // Z duplicates X
    t.add_row("l" + std::to_string(i), "g", row, 1.0);
  }

  era::RankingTable r = era::rank_pairs(t, 20);
  const era::PairCriteria& xy = find_pair(r, "X", "Y");
  require(xy.mc_abs < 0.05, "independent columns correlate at " +
                                std::to_string(xy.mc_abs));
  require(xy.fi > 0.90, "well-covered unit-fitness pair scores fi " +
                            std::to_string(xy.fi));

  const era::PairCriteria& xz = find_pair(r, "X", "Z");
  require(xz.mc_abs == 1.0, "duplicated column pair must correlate at exactly 1.0");
  double worst = 0.0;
  for (const auto& p : r.pairs) worst = std::max(worst, p.mc_rank);
  require(xz.mc_rank == worst && worst == 3.0,
          "duplicated pair must sit alone on the worst correlation rank");
}

void criterion_amc_duplicate_dominance() {
  era::SplitMix64 rng(1357);
  const int n = 300;
  std::vector<double> a(n), b(n), d(n);
  for (int i = 0; i < n; ++i) {
    a[i] = rng.uniform();
    b[i] = rng.uniform();
    d[i] = rng.uniform();
  }
  era::MetricTable t;
  t.column_names = {"A", "B", "C", "D"};
  t.columns = {a, b, a, d};  // C duplicates A
  for (int i = 0; i < n; ++i) t.level_ids.push_back("l" + std::to_string(i));
  t.generator_labels.assign(n, "g");
  t.fitness.assign(n, 0.5);
  t.has_fitness = true;

  double ab = era::compute_amc(t, "A", "B");  // C covers A perfectly
  double bd = era::compute_amc(t, "B", "D");  // only weak random links
  require(ab >= bd, "pair with a duplicated member must be at least as covered (" +
                        std::to_string(ab) + " vs " + std::to_string(bd) + ")");
  require(ab >= 0.5, "duplicate alternative must pull coverage above one half");
}

void criterion_agent_on_canonical_levels() {
  const era::TileClassification& tc = era::TileClassification::mario_default();
  era::AgentConfig cfg;

  const int w = 30;
  std::string flat;
  for (int r = 0; r < 3; ++r) flat += std::string(w, '-') + "\n";
  flat += std::string(w, 'X') + "\n";
  era::TileGrid floor = era::parse_level(flat, tc);
  era::PlayTrace t = era::run_agent(floor, cfg);
  era::AgentMetrics m = era::extract_agent_metrics(t, floor, cfg);
  require(m.playability == 1.0, "flat floor must be fully playable");
  require(m.jump_count == 0.0, "flat floor must need no jumps");
  require(m.on_ground_ratio == 1.0, "flat floor run must stay grounded");

  const int k = 12;
  std::string walled;
  for (int r = 0; r < 3; ++r) {
    std::string row(w, '-');
    row[k] = 'X';
    walled += row + "\n";
  }
  {
    std::string row(w, 'X');
    walled += row + "\n";
  }
  era::TileGrid wall = era::parse_level(walled, tc);
  era::AgentMetrics wm = era::extract_agent_metrics(era::run_agent(wall, cfg), wall, cfg);
  double target = static_cast<double>(k) / (w - 1);
  double tile = 1.0 / (w - 1);
  require(!era::run_agent(wall, cfg).completed, "full-height wall must block the run");
  require(std::fabs(wm.playability - target) <= tile + 1e-12,
          "blocked run must stop within one tile of the wall, playability " +
              std::to_string(wm.playability));
}

void criterion_cli_determinism() {
  TempDir tmp;
  fs::path params = tmp.path / "params.txt";
  spit(params,
       "generator_label = alpha\n"
       "seed = 5\n"
       "width = 100\n"
       "height = 16\n"
       "level_count = 30\n"
       "gap_prob = 0.08\n"
       "enemy_prob = 0.08\n"
       "pipe_prob = 0.04\n"
       "reward_prob = 0.08\n"
       "---\n"
       "generator_label = beta\n"
       "seed = 6\n"
       "width = 100\n"
       "height = 16\n"
       "level_count = 30\n"
       "gap_prob = 0.02\n"
       "enemy_prob = 0.15\n");

  run_cli("synth " + params.string() + " --out-dir " + (tmp.path / "corpusA").string());
  run_cli("synth " + params.string() + " --out-dir " + (tmp.path / "corpusB").string());
  require_same_tree(tmp.path / "corpusA", tmp.path / "corpusB");

  fs::path m1 = tmp.path / "m1.csv", m8 = tmp.path / "m8.csv";
  run_cli("extract " + (tmp.path / "corpusA").string() + " --out " + m1.string() +
          " --threads 1");
  run_cli("extract " + (tmp.path / "corpusA").string() + " --out " + m8.string() +
          " --threads 8");
  require(slurp(m1) == slurp(m8), "extract output depends on thread count");
  require(slurp(m1.string() + ".manifest.json") == slurp(m8.string() + ".manifest.json"),
          "extract manifest depends on thread count");

  run_cli("report " + m1.string() + " --out-dir " + (tmp.path / "repA").string() +
          " --threads 2");
  run_cli("report " + m1.string() + " --out-dir " + (tmp.path / "repB").string() +
          " --threads 5");
  require_same_tree(tmp.path / "repA", tmp.path / "repB");

  run_cli("plot " + m1.string() + " --pair Density,JumpCount --mode generator_overlay" +
          " --out " + (tmp.path / "p1.svg").string());
  run_cli("plot " + m1.string() + " --pair Density,JumpCount --mode generator_overlay" +
          " --out " + (tmp.path / "p2.svg").string());
  require(slurp(tmp.path / "p1.svg") == slurp(tmp.path / "p2.svg"),
          "plot output is not reproducible");

  // a bad request must fail, leave no artifacts, and name the valid metrics
  fs::path bad_svg = tmp.path / "bad.svg";
  fs::path err_file = tmp.path / "plot_err.txt";
  std::string bad_cmd = std::string(ERA_CLI_PATH) + " plot " + m1.string() +
                        " --pair Density,NoSuchMetric --out " + bad_svg.string() +
                        " > /dev/null 2> " + err_file.string();
  require(std::system(bad_cmd.c_str()) != 0, "plot with an unknown metric must fail");
  require(!fs::exists(bad_svg), "failed plot must not write an SVG");
  require(!fs::exists(tmp.path / "bad.svg.manifest.json"),
          "failed plot must not write a manifest");
  std::string err = slurp(err_file);
  require(err.find("NoSuchMetric") != std::string::npos &&
              err.find("available") != std::string::npos &&
              err.find("Contiguity") != std::string::npos,
          "plot error must list the available metric names");
}

double g_ensemble_seconds = 0.0;

void criterion_ensemble_scale() {
  auto start = std::chrono::steady_clock::now();

  TempDir tmp;
  std::ostringstream params;
  for (int i = 0; i < 9; ++i) {
    if (i) params << "---\n";
    params << "generator_label = gen" << i << "\n"
           << "seed = " << (100 + i) << "\n"
           << "level_count = 1000\n"
           << "gap_prob = " << (0.02 + 0.01 * i) << "\n"
           << "enemy_prob = " << (0.12 - 0.01 * i) << "\n"
           << "pipe_prob = " << (0.01 + 0.005 * i) << "\n"
           << "reward_prob = 0.05\n";
  }
  params << "---\n"
         << "generator_label = handful\n"
         << "seed = 990\n"
         << "level_count = 14\n"
         << "gap_prob = 0.1\n";
  spit(tmp.path / "params.txt", params.str());

  run_cli("synth " + (tmp.path / "params.txt").string() + " --out-dir " +
          (tmp.path / "corpus").string());
  run_cli("extract " + (tmp.path / "corpus").string() + " --out " +
          (tmp.path / "metrics.csv").string());
  run_cli("report " + (tmp.path / "metrics.csv").string() + " --out-dir " +
          (tmp.path / "report").string());

  // sanity on the artifacts before accepting the timing
  std::string metrics = slurp(tmp.path / "metrics.csv");
  long rows = std::count(metrics.begin(), metrics.end(), '\n') - 1;
  require(rows == 9014, "expected 9014 level rows, got " + std::to_string(rows));
  std::string ranking = slurp(tmp.path / "report" / "ranking.csv");
  require(std::count(ranking.begin(), ranking.end(), '\n') == 154,
          "ranking must cover all 153 pairs");
  era::MetricTable reloaded = era::read_metric_table(tmp.path / "metrics.csv");
  require(reloaded.rows() == 9014, "reloaded table must keep all rows");
  era::write_metric_table(reloaded, tmp.path / "metrics_again.csv");
  require(slurp(tmp.path / "metrics_again.csv") == metrics,
          "metric CSV must survive a read/write round trip at scale");

  g_ensemble_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  require(g_ensemble_seconds < 900.0, "pipeline took " +
                                          std::to_string(g_ensemble_seconds) + "s");
}

void criterion_report_shape() {
  TempDir tmp;
  spit(tmp.path / "params.txt",
       "generator_label = shapeA\nseed = 31\nlevel_count = 40\nwidth = 80\nheight = 14\n"
       "gap_prob = 0.06\nenemy_prob = 0.08\npipe_prob = 0.04\nreward_prob = 0.08\n"
       "---\n"
       "generator_label = shapeB\nseed = 32\nlevel_count = 40\nwidth = 80\nheight = 14\n"
       "gap_prob = 0.02\nenemy_prob = 0.02\n");
  run_cli("synth " + (tmp.path / "params.txt").string() + " --out-dir " +
          (tmp.path / "corpus").string());
  run_cli("extract " + (tmp.path / "corpus").string() + " --out " +
          (tmp.path / "m.csv").string());
  run_cli("report " + (tmp.path / "m.csv").string() + " --out-dir " +
          (tmp.path / "out").string() + " --top 5");

  std::string top = slurp(tmp.path / "out" / "top_pairs.md");
  int blocks = 0;
  for (std::size_t pos = top.find("## Top 5 by"); pos != std::string::npos;
       pos = top.find("## Top 5 by", pos + 1))
    ++blocks;
  require(blocks == 4, "summary must show four top blocks, got " + std::to_string(blocks));
  require(top.find("3 significant figures") != std::string::npos,
          "summary must state its 3-significant-figure rounding");

  std::string comp = slurp(tmp.path / "out" / "composition.csv");
  require(std::count(comp.begin(), comp.end(), '\n') == 4,
          "composition must list exactly the three pair categories");

  // 9 structural + 9 agent metrics: 36 + 81 + 36 pair split
  std::string ranking = slurp(tmp.path / "out" / "ranking.csv");
  std::istringstream lines(ranking);
  std::string line;
  std::getline(lines, line);  // header
  long ss = 0, sa = 0, aa = 0;
  while (std::getline(lines, line)) {
    std::string m1 = line.substr(0, line.find(','));
    std::string rest = line.substr(line.find(',') + 1);
    std::string m2 = rest.substr(0, rest.find(','));
    int structural = (era::metric_category(m1) == era::MetricCategory::Structural ? 1 : 0) +
                     (era::metric_category(m2) == era::MetricCategory::Structural ? 1 : 0);
    if (structural == 2)
      ++ss;
    else if (structural == 1)
      ++sa;
    else
      ++aa;
  }
  require(ss == 36, "structural-structural pairs: " + std::to_string(ss));
  require(sa == 81, "structural-agent pairs: " + std::to_string(sa));
  require(aa == 36, "agent-agent pairs: " + std::to_string(aa));

  for (const char* f : {"ranking.csv", "top_pairs.md", "composition.csv",
                        "metric_frequency.csv", "best_pair_heatmap.svg",
                        "best_pair_overlay.svg", "worst_pair_heatmap.svg",
                        "worst_pair_overlay.svg", "manifest.json"})
    require(fs::exists(tmp.path / "out" / f), std::string("report artifact missing: ") + f);
}

struct Criterion {
  const char* description;
  std::function<void()> body;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"every unordered metric pair is scored exactly once", criterion_pair_count},
      {"rank correlation matches an independent oracle to 1e-12", criterion_spearman_oracle},
      {"correlation scores and ranks survive monotone transforms",
       criterion_monotone_invariance},
      {"fitness independence survives affine rescaling exactly",
       criterion_fi_affine_invariance},
      {"fitness independence matches hand-computed grids exactly",
       criterion_fi_hand_grids},
      {"independent columns separate from duplicated ones at scale",
       criterion_large_independent_table},
      {"a duplicated metric dominates alternative coverage",
       criterion_amc_duplicate_dominance},
      {"agent playability is exact on canonical floor and wall levels",
       criterion_agent_on_canonical_levels},
      {"cli runs are byte-identical across repeats and thread counts",
       criterion_cli_determinism},
      {"nine-generator ensemble pipeline finishes inside the budget",
       criterion_ensemble_scale},
      {"report artifacts carry the documented shape", criterion_report_shape},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string label = "criterion " + std::to_string(i + 1);
    try {
      criteria[i].body();
      std::cout << "[PASS] " << label << ": " << criteria[i].description;
      if (i == 9) std::cout << " (" << static_cast<long>(g_ensemble_seconds) << "s)";
      std::cout << '\n';
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "[FAIL] " << label << ": " << criteria[i].description << " -- "
                << e.what() << '\n';
    }
  }
  if (failures) std::cout << failures << " criterion(s) failed\n";
  return failures == 0 ? 0 : 1;
}
