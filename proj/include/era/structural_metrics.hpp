#pragma once

#include <string>
#include <vector>

#include "era/level.hpp"

namespace era {

struct MetricValue {
  std::string name;
  double value = 0.0;
};

// Solid tiles with at least one Solid 4-neighbour. Counts tiles, not edges.
MetricValue contiguity(const TileGrid& g);
// Solid tiles with at least one Solid horizontal neighbour.
MetricValue linearity(const TileGrid& g);
MetricValue block_count(const TileGrid& g);
MetricValue enemy_count(const TileGrid& g);
MetricValue reward_count(const TileGrid& g);
MetricValue empty_count(const TileGrid& g);
MetricValue pipe_count(const TileGrid& g);
// Standable cells divided by level width.
MetricValue density(const TileGrid& g);
// Columns containing only Empty tiles.
MetricValue clear_columns(const TileGrid& g);

/// All nine structural metrics in canonical column order.
std::vector<MetricValue> structural_metrics(const TileGrid& g);

}  // namespace era
