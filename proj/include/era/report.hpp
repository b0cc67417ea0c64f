#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "era/criteria.hpp"
#include "era/extract.hpp"
#include "era/stats.hpp"

namespace era {

/// CSV layout: level_id,generator,<metric columns...>,Playability with values
/// at 6 significant digits. Reading back a written file reproduces the table
/// at that precision, and rewriting it reproduces the bytes.
void write_metric_table(const MetricTable& t, const std::filesystem::path& file);
MetricTable read_metric_table(const std::filesystem::path& file);

/// Ranking CSV: m1,m2,FI,MC_signed,MC_abs,AMC,FI_rank,MC_rank,AMC_rank,
/// avg_rank,degenerate; rows in the table's avg-rank order. FI cells are
/// empty when the ranking was built without a fitness column.
void write_ranking_csv(const RankingTable& r, const std::filesystem::path& file);

/// Markdown summary: one block of the top_n pairs per criterion plus one by
/// average rank, scores at 3 significant figures.
void write_top_summary(const RankingTable& r, const std::filesystem::path& file, int top_n);

enum class PlotMode { FitnessHeatmap, CountHeatmap, GeneratorOverlay };

PlotMode plot_mode_from_name(const std::string& name);  // throws InvalidParams
const char* plot_mode_name(PlotMode m);

struct PlotSpec {
  std::string m1, m2;
  PlotMode mode = PlotMode::FitnessHeatmap;
  int resolution = 20;
  int width_px = 640;
  int height_px = 520;
  std::string palette = "viridis";  // or "heat"
  std::uint64_t jitter_seed = 0;    // generator_overlay point jitter

  void validate() const;  // resolution >= 1, both dimensions >= 100
};

/// Self-contained SVG 1.1. Identical inputs produce identical bytes: fixed
/// palettes, seeded jitter, no timestamps. Heatmap cell shading uses mean
/// fitness (neutral grey for unoccupied cells) or log1p-scaled counts; the
/// overlay draws one jittered point per level, coloured by generator.
std::string render_plot_svg(const MetricTable& t, const PlotSpec& spec);
void render_plot(const MetricTable& t, const PlotSpec& spec, const std::filesystem::path& file);

struct CompositionSummary {
  // pair category counts over the pooled top lists (union, no duplicates)
  long structural_structural = 0;
  long structural_agent = 0;
  long agent_agent = 0;
  // the same counts per contributing block
  long per_block[4][3] = {};  // blocks: fi, mc, amc, avg_rank
  std::vector<std::pair<std::string, std::string>> pool;  // sorted (m1, m2)
  std::vector<std::pair<std::string, long>> metric_appearances;  // every metric, pool hits
};

/// Pools the top_n pairs of each criterion block plus the top_n by average
/// rank and classifies them. Rankings without FI pool three blocks.
CompositionSummary summarize_composition(
    const RankingTable& r, const std::function<MetricCategory(const std::string&)>& category_of,
    int top_n);

void write_composition_csv(const CompositionSummary& c, bool has_fi,
                           const std::filesystem::path& file);
void write_metric_frequency_csv(const CompositionSummary& c,
                                const std::function<MetricCategory(const std::string&)>& category_of,
                                const std::filesystem::path& file);

}  // namespace era
