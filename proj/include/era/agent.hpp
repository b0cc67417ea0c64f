#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "era/level.hpp"
#include "era/structural_metrics.hpp"

namespace era {

struct AgentConfig {
  int max_jump_height = 4;   // tiles of rise a jump can gain
  int max_jump_span = 6;     // horizontal tiles a jump can cover
  int ticks_per_tile_walk = 1;
  int ticks_per_second = 24;
  long max_expansions = 200000;  // search node budget

  void validate() const;  // throws InvalidParams
};

AgentConfig load_agent_config(const std::filesystem::path& file);

/// Movement graph over standable cells.
struct MoveGraph {
  struct Node {
    int x = 0;
    int y = 0;
  };
  struct Edge {
    int to = -1;
    int ticks = 0;
    bool jump = false;
  };
  std::vector<Node> nodes;               // sorted by (x, y)
  std::vector<std::vector<Edge>> edges;  // parallel to nodes, deterministic order
  std::vector<int> node_index;           // width*height cells, -1 where no node
  int start = -1;                        // -1 when the level has no standable cell
  int width = 0;
  int height = 0;
};

/// Nodes are standable cells. Walk edges join horizontally adjacent nodes
/// with height difference <= 1 and never enter enemy cells. Jump edges form
/// an ascend/traverse/descend arc whose cells must all be passable; rise is
/// capped by max_jump_height, horizontal reach by max_jump_span, drops are
/// unbounded. Air time of a jump is 2 + horizontal distance ticks. Landing
/// in an enemy cell is allowed and stomps the enemy.
MoveGraph build_reachability(const TileGrid& g, const AgentConfig& cfg);

struct TraceStep {
  int x = 0;
  int y = 0;
  bool airborne = false;
  long tick = 0;
};

struct PlayTrace {
  std::vector<TraceStep> steps;  // one entry per tick, plus the start pose
  std::vector<int> jumps;        // air ticks of each jump taken
  int stomp_kills = 0;
  int total_enemy_deaths = 0;
  int reached_x = 0;
  bool completed = false;
  long total_ticks = 0;
  bool budget_exhausted = false;
};

/// Deterministic A* run to the rightmost column. Ties in the open list break
/// on (f cost, x descending, y ascending, insertion order). On failure the
/// trace is the path to the expanded node with the greatest x, ties broken
/// by lowest tick cost.
PlayTrace run_agent(const TileGrid& g, const AgentConfig& cfg);

struct AgentMetrics {
  double playability = 0.0;      // reached_x / (width - 1), clamped to [0, 1]
  double jump_count = 0.0;
  double jump_entropy = 0.0;     // jumps per tick
  double speed = 0.0;            // playability per second
  double time_taken = 0.0;       // seconds
  double total_enemy_deaths = 0.0;
  double kills_by_stomp = 0.0;
  double max_jump_air_time = 0.0;  // ticks; 0 when the trace has no jumps
  double on_ground_ratio = 0.0;
  double average_y = 0.0;        // mean row over steps; row 0 is the top
  bool degenerate = false;       // zero-tick trace; time_taken forced to one tick
};

AgentMetrics extract_agent_metrics(const PlayTrace& t, const TileGrid& g, const AgentConfig& cfg);

/// The nine agent metric columns in canonical order (Playability is reported
/// separately as the fitness column).
std::vector<MetricValue> agent_metric_values(const AgentMetrics& m);

}  // namespace era
