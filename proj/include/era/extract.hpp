#pragma once

#include <string>
#include <vector>

#include "era/agent.hpp"
#include "era/level.hpp"
#include "era/stats.hpp"

namespace era {

enum class MetricCategory { Structural, Agent };

/// The 18 candidate metric columns in canonical order: the nine structural
/// metrics followed by the nine agent metrics. Playability is the fitness
/// column and never appears here.
const std::vector<std::string>& candidate_metric_names();

inline const char* fitness_metric_name() { return "Playability"; }

MetricCategory metric_category(const std::string& name);  // throws UncategorizedMetric
const char* metric_category_name(MetricCategory c);

/// Runs the full per-level pipeline (structural metrics, agent run, agent
/// metrics) and assembles the table. Levels are processed in corpus order;
/// results land in per-level slots, so any thread count yields the same table.
MetricTable extract_metric_table(const std::vector<TileGrid>& grids, const AgentConfig& cfg,
                                 int threads = 1);

}  // namespace era
