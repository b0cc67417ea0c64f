#include "era/extract.hpp"

#include <array>

#include "era/error.hpp"
#include "era/structural_metrics.hpp"
#include "era/util.hpp"

namespace era {
namespace {

const std::vector<std::string> kStructuralNames = {
    "Contiguity", "Linearity", "BlockCount", "EnemyCount", "RewardCount",
    "EmptyCount", "PipeCount",  "Density",    "ClearColumns"};

const std::vector<std::string> kAgentNames = {
    "JumpCount",      "JumpEntropy",  "Speed",          "TimeTaken", "TotalEnemyDeaths",
    "KillsByStomp",   "MaxJumpAirTime", "OnGroundRatio", "AverageY"};

}  // namespace

const std::vector<std::string>& candidate_metric_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> all = kStructuralNames;
    all.insert(all.end(), kAgentNames.begin(), kAgentNames.end());
    return all;
  }();
  return names;
}

MetricCategory metric_category(const std::string& name) {
  for (const std::string& n : kStructuralNames)
    if (n == name) return MetricCategory::Structural;
  for (const std::string& n : kAgentNames)
    if (n == name) return MetricCategory::Agent;
  if (name == fitness_metric_name()) return MetricCategory::Agent;
  raise(Errc::UncategorizedMetric, "no category known for metric '" + name + "'");
}

const char* metric_category_name(MetricCategory c) {
  return c == MetricCategory::Structural ? "Structural" : "Agent";
}

MetricTable extract_metric_table(const std::vector<TileGrid>& grids, const AgentConfig& cfg,
                                 int threads) {
  cfg.validate();
  if (grids.empty()) raise(Errc::NoLevels, "no levels to extract metrics from");

  struct Row {
    std::array<double, 18> values{};
    double fitness = 0.0;
  };
  std::vector<Row> rows(grids.size());

  parallel_for(grids.size(), threads, [&](std::size_t i) {
    const TileGrid& g = grids[i];
    std::vector<MetricValue> structural = structural_metrics(g);
    PlayTrace trace = run_agent(g, cfg);
    AgentMetrics am = extract_agent_metrics(trace, g, cfg);
    std::vector<MetricValue> agent = agent_metric_values(am);

    Row& row = rows[i];
    std::size_t c = 0;
    for (const MetricValue& mv : structural) row.values[c++] = mv.value;
    for (const MetricValue& mv : agent) row.values[c++] = mv.value;
    row.fitness = am.playability;
  });

  MetricTable t;
  t.column_names = candidate_metric_names();
  for (std::size_t i = 0; i < grids.size(); ++i)
    t.add_row(grids[i].level_id, grids[i].generator_label, rows[i].values, rows[i].fitness);
  return t;
}

}  // namespace era
