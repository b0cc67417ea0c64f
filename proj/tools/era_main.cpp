#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "era/agent.hpp"
#include "era/criteria.hpp"
#include "era/error.hpp"
#include "era/extract.hpp"
#include "era/level.hpp"
#include "era/report.hpp"
#include "era/stats.hpp"
#include "era/synth.hpp"
#include "era/util.hpp"

namespace {

constexpr const char* kToolVersion = "era 0.1.0";

using nlohmann::json;

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string fingerprint_grids(const std::vector<era::TileGrid>& grids) {
  std::uint64_t h = era::fnv1a64("tile-corpus");
  for (const era::TileGrid& g : grids) {
    h = era::fnv1a64(g.generator_label, h);
    h = era::fnv1a64(g.level_id, h);
    h = era::fnv1a64(era::serialize_raw(g), h);
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string fingerprint_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) era::raise(era::Errc::IoFailure, "cannot open " + file.string());
  std::ostringstream text;
  text << in.rdbuf();
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                static_cast<unsigned long long>(era::fnv1a64(text.str())));
  return buf;
}

// The manifest records inputs and effective config, never execution knobs
// like --threads: outputs must be byte-identical for any thread count.
void write_manifest(const std::filesystem::path& primary_output, const std::string& command,
                    const json& inputs, const json& config, const std::string& fingerprint) {
  json manifest;
  manifest["command"] = command;
  manifest["tool_version"] = kToolVersion;
  manifest["inputs"] = inputs;
  manifest["config"] = config;
  manifest["corpus_fingerprint"] = fingerprint;

  std::filesystem::path file = primary_output;
  if (std::filesystem::is_directory(file))
    file /= "manifest.json";
  else
    file += ".manifest.json";
  std::ofstream out(file, std::ios::binary);
  if (!out) era::raise(era::Errc::IoFailure, "cannot write " + file.string());
  out << manifest.dump(2) << '\n';
}

json agent_config_json(const era::AgentConfig& cfg) {
  return {{"max_jump_height", cfg.max_jump_height},
          {"max_jump_span", cfg.max_jump_span},
          {"ticks_per_tile_walk", cfg.ticks_per_tile_walk},
          {"ticks_per_second", cfg.ticks_per_second},
          {"max_expansions", cfg.max_expansions}};
}

json synth_params_json(const era::SynthParams& p) {
  return {{"seed", p.seed},
          {"width", p.width},
          {"height", p.height},
          {"level_count", p.level_count},
          {"gap_prob", p.gap_prob},
          {"max_gap_width", p.max_gap_width},
          {"enemy_prob", p.enemy_prob},
          {"pipe_prob", p.pipe_prob},
          {"reward_prob", p.reward_prob},
          {"height_walk_step", p.height_walk_step},
          {"generator_label", p.generator_label}};
}

struct ExtractArgs {
  std::string levels_dir;
  std::string out_csv;
  std::string tilemap;
  std::string agent_config;
  int threads = 0;
};

int cmd_extract(const ExtractArgs& a) {
  era::TileClassification tc = a.tilemap.empty()
                                   ? era::TileClassification::mario_default()
                                   : era::load_classification(a.tilemap);
  era::AgentConfig cfg;
  if (!a.agent_config.empty()) cfg = era::load_agent_config(a.agent_config);

  era::Corpus corpus = era::load_corpus(a.levels_dir, tc);
  for (const std::string& warning : corpus.warnings)
    std::cerr << "era: warning: " << warning << '\n';
  if (!corpus.failures.empty()) {
    std::cerr << "era: warning: " << corpus.failures.size() << " level file(s) skipped:\n";
    for (const era::LoadFailure& f : corpus.failures)
      std::cerr << "  " << f.path.string() << ": " << f.message << '\n';
  }
  if (corpus.grids.empty())
    era::raise(era::Errc::NoLevels, "no parseable levels under " + a.levels_dir);

  era::MetricTable table =
      era::extract_metric_table(corpus.grids, cfg, resolve_threads(a.threads));
  era::write_metric_table(table, a.out_csv);

  write_manifest(a.out_csv, "extract",
                 {{"levels_dir", a.levels_dir},
                  {"tilemap", a.tilemap.empty() ? "builtin" : a.tilemap},
                  {"agent_config", a.agent_config.empty() ? "defaults" : a.agent_config}},
                 {{"agent", agent_config_json(cfg)}}, fingerprint_grids(corpus.grids));
  std::cout << "extracted " << table.rows() << " levels, " << table.column_names.size()
            << " metrics -> " << a.out_csv << '\n';
  return 0;
}

struct RankArgs {
  std::string metrics_csv;
  std::string out_csv;
  std::string summary;
  int grid = 20;
  int top = 5;
  int threads = 0;
};

int cmd_rank(const RankArgs& a) {
  era::MetricTable table = era::read_metric_table(a.metrics_csv);
  if (!table.has_fitness)
    std::cerr << "era: warning: no " << era::fitness_metric_name()
              << " column; fitness independence skipped\n";
  era::RankingTable ranking = era::rank_pairs(table, a.grid, resolve_threads(a.threads));
  era::write_ranking_csv(ranking, a.out_csv);

  std::filesystem::path summary_path = a.summary.empty()
                                           ? std::filesystem::path(a.out_csv).replace_extension("")
                                                 .concat("_top.md")
                                           : std::filesystem::path(a.summary);
  era::write_top_summary(ranking, summary_path, a.top);

  write_manifest(a.out_csv, "rank", {{"metrics_csv", a.metrics_csv}},
                 {{"grid_resolution", a.grid}, {"top_n", a.top}},
                 fingerprint_file(a.metrics_csv));
  std::cout << "ranked " << ranking.pairs.size() << " pairs -> " << a.out_csv << ", "
            << summary_path.string() << '\n';
  return 0;
}

struct PlotArgs {
  std::string metrics_csv;
  std::string pair;
  std::string mode = "fitness_heatmap";
  std::string out_svg;
  std::string palette = "viridis";
  int grid = 20;
  int width = 640;
  int height = 520;
  std::uint64_t seed = 0;
};

int cmd_plot(const PlotArgs& a) {
  std::size_t comma = a.pair.find(',');
  if (comma == std::string::npos)
    era::raise(era::Errc::InvalidParams, "--pair expects 'Metric1,Metric2'");
  era::PlotSpec spec;
  spec.m1 = a.pair.substr(0, comma);
  spec.m2 = a.pair.substr(comma + 1);
  spec.mode = era::plot_mode_from_name(a.mode);
  spec.resolution = a.grid;
  spec.width_px = a.width;
  spec.height_px = a.height;
  spec.palette = a.palette;
  spec.jitter_seed = a.seed;

  era::MetricTable table = era::read_metric_table(a.metrics_csv);
  for (const std::string& m : {spec.m1, spec.m2}) {
    if (table.column_index(m) >= 0) continue;
    std::string names;
    for (const std::string& c : table.column_names)
      names += (names.empty() ? "" : ", ") + c;
    era::raise(era::Errc::UnknownColumn,
               "unknown metric '" + m + "'; available: " + names);
  }
  era::render_plot(table, spec, a.out_svg);

  write_manifest(a.out_svg, "plot", {{"metrics_csv", a.metrics_csv}},
                 {{"m1", spec.m1},
                  {"m2", spec.m2},
                  {"mode", era::plot_mode_name(spec.mode)},
                  {"grid_resolution", spec.resolution},
                  {"width_px", spec.width_px},
                  {"height_px", spec.height_px},
                  {"palette", spec.palette},
                  {"jitter_seed", spec.jitter_seed}},
                 fingerprint_file(a.metrics_csv));
  std::cout << "plotted " << spec.m1 << " vs " << spec.m2 << " -> " << a.out_svg << '\n';
  return 0;
}

struct ReportArgs {
  std::string metrics_csv;
  std::string out_dir;
  int grid = 20;
  int top = 5;
  int threads = 0;
};

int cmd_report(const ReportArgs& a) {
  era::MetricTable table = era::read_metric_table(a.metrics_csv);
  if (!table.has_fitness)
    std::cerr << "era: warning: no " << era::fitness_metric_name()
              << " column; fitness independence skipped\n";
  era::RankingTable ranking = era::rank_pairs(table, a.grid, resolve_threads(a.threads));

  std::filesystem::path dir(a.out_dir);
  std::filesystem::create_directories(dir);
  era::write_ranking_csv(ranking, dir / "ranking.csv");
  era::write_top_summary(ranking, dir / "top_pairs.md", a.top);

  era::CompositionSummary comp =
      era::summarize_composition(ranking, era::metric_category, a.top);
  era::write_composition_csv(comp, ranking.has_fi, dir / "composition.csv");
  era::write_metric_frequency_csv(comp, era::metric_category, dir / "metric_frequency.csv");

  const era::PairCriteria& best = ranking.pairs.front();
  const era::PairCriteria& worst = ranking.pairs.back();
  struct PlotJob {
    era::PlotSpec spec;
    std::filesystem::path file;
  };
  std::vector<PlotJob> jobs;
  auto plot_pair = [&](const era::PairCriteria& p, const std::string& stem) {
    era::PlotSpec spec;
    spec.m1 = p.m1;
    spec.m2 = p.m2;
    spec.resolution = a.grid;
    spec.mode = table.has_fitness ? era::PlotMode::FitnessHeatmap : era::PlotMode::CountHeatmap;
    jobs.push_back({spec, dir / (stem + "_heatmap.svg")});
    spec.mode = era::PlotMode::GeneratorOverlay;
    jobs.push_back({spec, dir / (stem + "_overlay.svg")});
  };
  plot_pair(best, "best_pair");
  plot_pair(worst, "worst_pair");
  // rendering is pure per plot and each job owns its output file
  era::parallel_for(jobs.size(), resolve_threads(a.threads), [&](std::size_t i) {
    era::render_plot(table, jobs[i].spec, jobs[i].file);
  });

  write_manifest(dir, "report", {{"metrics_csv", a.metrics_csv}},
                 {{"grid_resolution", a.grid}, {"top_n", a.top}},
                 fingerprint_file(a.metrics_csv));
  std::cout << "report for " << ranking.pairs.size() << " pairs -> " << a.out_dir << '\n';
  return 0;
}

struct SynthArgs {
  std::string params_file;
  std::string out_dir;
};

int cmd_synth(const SynthArgs& a) {
  std::vector<era::SynthParams> params = era::load_synth_params(a.params_file);
  std::vector<era::TileGrid> grids = era::generate_ensemble(params);
  std::filesystem::create_directories(a.out_dir);
  era::write_corpus(grids, a.out_dir);

  json blocks = json::array();
  for (const era::SynthParams& p : params) blocks.push_back(synth_params_json(p));
  write_manifest(a.out_dir, "synth", {{"params_file", a.params_file}},
                 {{"generators", blocks}}, fingerprint_grids(grids));
  std::cout << "generated " << grids.size() << " levels from " << params.size()
            << " generator(s) -> " << a.out_dir << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Expressive range metric pair selection toolkit"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  ExtractArgs extract_args;
  CLI::App* extract = app.add_subcommand(
      "extract", "Compute per-level metrics for a corpus of level files");
  extract->add_option("levels_dir", extract_args.levels_dir, "Corpus root directory")->required();
  extract->add_option("--out", extract_args.out_csv, "Output metrics CSV")->required();
  extract->add_option("--tilemap", extract_args.tilemap, "Character classification file");
  extract->add_option("--agent-config", extract_args.agent_config, "Agent config file");
  extract->add_option("--threads", extract_args.threads, "Worker threads (0 = auto)");

  RankArgs rank_args;
  CLI::App* rank = app.add_subcommand("rank", "Score and rank every metric pair");
  rank->add_option("metrics_csv", rank_args.metrics_csv, "Metrics CSV from extract")->required();
  rank->add_option("--out", rank_args.out_csv, "Output ranking CSV")->required();
  rank->add_option("--summary", rank_args.summary, "Summary path (default: <out>_top.md)");
  rank->add_option("--grid", rank_args.grid, "Grid resolution for fitness independence");
  rank->add_option("--top", rank_args.top, "Rows per summary block");
  rank->add_option("--threads", rank_args.threads, "Worker threads (0 = auto)");

  PlotArgs plot_args;
  CLI::App* plot = app.add_subcommand("plot", "Render one metric pair to SVG");
  plot->add_option("metrics_csv", plot_args.metrics_csv, "Metrics CSV from extract")->required();
  plot->add_option("--pair", plot_args.pair, "Metric pair 'M1,M2'")->required();
  plot->add_option("--mode", plot_args.mode,
                   "fitness_heatmap | count_heatmap | generator_overlay");
  plot->add_option("--out", plot_args.out_svg, "Output SVG path")->required();
  plot->add_option("--grid", plot_args.grid, "Grid resolution for heatmaps");
  plot->add_option("--width", plot_args.width, "Canvas width in px");
  plot->add_option("--height", plot_args.height, "Canvas height in px");
  plot->add_option("--palette", plot_args.palette, "viridis | heat");
  plot->add_option("--seed", plot_args.seed, "Jitter seed for the overlay");

  ReportArgs report_args;
  CLI::App* report = app.add_subcommand(
      "report", "Full pair ranking report with plots and composition summary");
  report->add_option("metrics_csv", report_args.metrics_csv, "Metrics CSV from extract")
      ->required();
  report->add_option("--out-dir", report_args.out_dir, "Output directory")->required();
  report->add_option("--grid", report_args.grid, "Grid resolution for fitness independence");
  report->add_option("--top", report_args.top, "Rows per summary block");
  report->add_option("--threads", report_args.threads, "Worker threads (0 = auto)");

  SynthArgs synth_args;
  CLI::App* synth = app.add_subcommand("synth", "Generate a synthetic level corpus");
  synth->add_option("params_file", synth_args.params_file, "Generator parameter blocks")
      ->required();
  synth->add_option("--out-dir", synth_args.out_dir, "Corpus output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (extract->parsed()) return cmd_extract(extract_args);
    if (rank->parsed()) return cmd_rank(rank_args);
    if (plot->parsed()) return cmd_plot(plot_args);
    if (report->parsed()) return cmd_report(report_args);
    if (synth->parsed()) return cmd_synth(synth_args);
  } catch (const std::exception& e) {
    std::cerr << "era: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
