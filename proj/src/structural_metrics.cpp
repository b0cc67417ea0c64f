#include "era/structural_metrics.hpp"

namespace era {
namespace {

long count_class(const TileGrid& g, TileClass c) {
  long n = 0;
  for (TileClass cell : g.cells)
    if (cell == c) ++n;
  return n;
}

bool solid_at(const TileGrid& g, int x, int y) {
  return g.in_bounds(x, y) && g.at(x, y) == TileClass::Solid;
}

}  // namespace

MetricValue contiguity(const TileGrid& g) {
  long n = 0;
  for (int y = 0; y < g.height; ++y)
    for (int x = 0; x < g.width; ++x)
      if (g.at(x, y) == TileClass::Solid &&
          (solid_at(g, x - 1, y) || solid_at(g, x + 1, y) ||
           solid_at(g, x, y - 1) || solid_at(g, x, y + 1)))
        ++n;
  return {"Contiguity", static_cast<double>(n)};
}

MetricValue linearity(const TileGrid& g) {
  long n = 0;
  for (int y = 0; y < g.height; ++y)
    for (int x = 0; x < g.width; ++x)
      if (g.at(x, y) == TileClass::Solid &&
          (solid_at(g, x - 1, y) || solid_at(g, x + 1, y)))
        ++n;
  return {"Linearity", static_cast<double>(n)};
}

MetricValue block_count(const TileGrid& g) {
  return {"BlockCount", static_cast<double>(count_class(g, TileClass::Solid))};
}

MetricValue enemy_count(const TileGrid& g) {
  return {"EnemyCount", static_cast<double>(count_class(g, TileClass::Enemy))};
}

MetricValue reward_count(const TileGrid& g) {
  return {"RewardCount", static_cast<double>(count_class(g, TileClass::Reward))};
}

MetricValue empty_count(const TileGrid& g) {
  return {"EmptyCount", static_cast<double>(count_class(g, TileClass::Empty))};
}

MetricValue pipe_count(const TileGrid& g) {
  return {"PipeCount", static_cast<double>(count_class(g, TileClass::Pipe))};
}

MetricValue density(const TileGrid& g) {
  long standable = 0;
  for (int y = 0; y < g.height; ++y)
    for (int x = 0; x < g.width; ++x)
      if (g.standable(x, y)) ++standable;
  return {"Density", static_cast<double>(standable) / g.width};
}

MetricValue clear_columns(const TileGrid& g) {
  long n = 0;
  for (int x = 0; x < g.width; ++x) {
    bool clear = true;
    for (int y = 0; y < g.height && clear; ++y)
      clear = g.at(x, y) == TileClass::Empty;
    if (clear) ++n;
  }
  return {"ClearColumns", static_cast<double>(n)};
}

std::vector<MetricValue> structural_metrics(const TileGrid& g) {
  return {contiguity(g),   linearity(g),  block_count(g),
          enemy_count(g),  reward_count(g), empty_count(g),
          pipe_count(g),   density(g),    clear_columns(g)};
}

}  // namespace era
