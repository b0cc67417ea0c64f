#include "era/agent.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <queue>
#include <sstream>

#include "era/error.hpp"
#include "era/util.hpp"

namespace era {
namespace {

// Arc shape shared by edge building and trace expansion: ascend in the source
// column to the peak row, traverse the peak row, descend in the target column.
// Rising jumps traverse at the landing row; flat and falling jumps hop one row
// above the source so ground level obstacles can be cleared.
std::optional<int> jump_arc_peak(const TileGrid& g, const AgentConfig& cfg,
                                 int x0, int y0, int x1, int y1) {
  int dx = std::abs(x1 - x0);
  if (dx < 1 || dx > cfg.max_jump_span) return std::nullopt;
  if (y0 - y1 > cfg.max_jump_height) return std::nullopt;
  int peak = (y1 < y0) ? y1 : y0 - 1;
  if (peak < 0) return std::nullopt;

  for (int y = peak; y < y0; ++y)
    if (!g.passable(x0, y)) return std::nullopt;
  int step = (x1 > x0) ? 1 : -1;
  for (int x = x0 + step; x != x1 + step; x += step) {
    if (x == x1 && peak == y1) break;  // landing cell, checked as a node
    if (!g.passable(x, peak)) return std::nullopt;
  }
  for (int y = peak + 1; y < y1; ++y)
    if (!g.passable(x1, y)) return std::nullopt;
  return peak;
}

int air_ticks_for(int dx) { return 2 + dx; }

struct OpenEntry {
  double f = 0.0;
  int x = 0;
  int y = 0;
  long seq = 0;
  int node = -1;
  long g = 0;
};

// priority_queue keeps the "largest" element on top, so this orders entries
// by being worse: higher f, then smaller x, then larger y, then later insert.
struct WorseThan {
  bool operator()(const OpenEntry& a, const OpenEntry& b) const {
    if (a.f != b.f) return a.f > b.f;
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y > b.y;
    return a.seq > b.seq;
  }
};

}  // namespace

void AgentConfig::validate() const {
  if (max_jump_height < 1 || max_jump_span < 1 || ticks_per_tile_walk < 1 ||
      ticks_per_second < 1 || max_expansions < 1)
    raise(Errc::InvalidParams, "agent config fields must be positive");
}

AgentConfig load_agent_config(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) raise(Errc::IoFailure, "cannot open " + file.string());
  std::ostringstream text;
  text << in.rdbuf();

  AgentConfig cfg;
  for (const auto& [key, value] : parse_key_values(text.str())) {
    if (key == "max_jump_height") cfg.max_jump_height = static_cast<int>(parse_int(value));
    else if (key == "max_jump_span") cfg.max_jump_span = static_cast<int>(parse_int(value));
    else if (key == "ticks_per_tile_walk") cfg.ticks_per_tile_walk = static_cast<int>(parse_int(value));
    else if (key == "ticks_per_second") cfg.ticks_per_second = static_cast<int>(parse_int(value));
    else if (key == "max_expansions") cfg.max_expansions = parse_int(value);
    else raise(Errc::InvalidParams, "unknown agent config key '" + key + "'");
  }
  cfg.validate();
  return cfg;
}

MoveGraph build_reachability(const TileGrid& g, const AgentConfig& cfg) {
  cfg.validate();
  MoveGraph mg;
  mg.width = g.width;
  mg.height = g.height;
  mg.node_index.assign(static_cast<std::size_t>(g.width) * g.height, -1);

  for (int x = 0; x < g.width; ++x)
    for (int y = 0; y < g.height; ++y)
      if (g.standable(x, y)) {
        mg.node_index[static_cast<std::size_t>(y) * g.width + x] =
            static_cast<int>(mg.nodes.size());
        mg.nodes.push_back({x, y});
      }

  // Start at the leftmost standable cell, lowest such cell on ties.
  for (const auto& [x, y] : mg.nodes) {
    if (mg.start == -1) {
      mg.start = mg.node_index[static_cast<std::size_t>(y) * g.width + x];
    } else {
      const MoveGraph::Node& s = mg.nodes[mg.start];
      if (x == s.x && y > s.y)
        mg.start = mg.node_index[static_cast<std::size_t>(y) * g.width + x];
      if (x > s.x) break;
    }
  }

  auto node_at = [&](int x, int y) -> int {
    if (!g.in_bounds(x, y)) return -1;
    return mg.node_index[static_cast<std::size_t>(y) * g.width + x];
  };

  mg.edges.resize(mg.nodes.size());
  for (std::size_t i = 0; i < mg.nodes.size(); ++i) {
    const MoveGraph::Node n = mg.nodes[i];
    auto& out = mg.edges[i];
    for (int dist = 1; dist <= cfg.max_jump_span; ++dist) {
      for (int sign : {+1, -1}) {
        int tx = n.x + sign * dist;
        if (tx < 0 || tx >= g.width) continue;
        for (int ty = 0; ty < g.height; ++ty) {
          int target = node_at(tx, ty);
          if (target < 0) continue;
          if (dist == 1 && std::abs(ty - n.y) <= 1 && g.at(tx, ty) != TileClass::Enemy)
            out.push_back({target, cfg.ticks_per_tile_walk, false});
          if (jump_arc_peak(g, cfg, n.x, n.y, tx, ty))
            out.push_back({target, air_ticks_for(dist), true});
        }
      }
    }
  }
  return mg;
}

PlayTrace run_agent(const TileGrid& g, const AgentConfig& cfg) {
  MoveGraph mg = build_reachability(g, cfg);
  PlayTrace trace;
  if (mg.start < 0) return trace;  // nothing to stand on anywhere

  const int goal_x = g.width - 1;
  const double per_tile =
      std::min(static_cast<double>(cfg.ticks_per_tile_walk),
               static_cast<double>(air_ticks_for(cfg.max_jump_span)) / cfg.max_jump_span);

  const long inf = std::numeric_limits<long>::max();
  std::vector<long> gscore(mg.nodes.size(), inf);
  std::vector<int> parent_node(mg.nodes.size(), -1);
  std::vector<int> parent_edge(mg.nodes.size(), -1);
  std::vector<char> closed(mg.nodes.size(), 0);

  std::priority_queue<OpenEntry, std::vector<OpenEntry>, WorseThan> open;
  long seq = 0;
  gscore[mg.start] = 0;
  open.push({per_tile * (goal_x - mg.nodes[mg.start].x), mg.nodes[mg.start].x,
             mg.nodes[mg.start].y, seq++, mg.start, 0});

  int best_node = mg.start;
  long expanded = 0;
  int goal_node = -1;

  while (!open.empty()) {
    OpenEntry top = open.top();
    open.pop();
    if (closed[top.node] || top.g != gscore[top.node]) continue;
    closed[top.node] = 1;
    ++expanded;

    const MoveGraph::Node& nd = mg.nodes[top.node];
    const MoveGraph::Node& bd = mg.nodes[best_node];
    if (nd.x > bd.x || (nd.x == bd.x && gscore[top.node] < gscore[best_node]))
      best_node = top.node;

    if (nd.x == goal_x) {
      goal_node = top.node;
      break;
    }
    if (expanded >= cfg.max_expansions) {
      trace.budget_exhausted = true;
      break;
    }

    for (std::size_t e = 0; e < mg.edges[top.node].size(); ++e) {
      const MoveGraph::Edge& edge = mg.edges[top.node][e];
      long cand = gscore[top.node] + edge.ticks;
      if (cand < gscore[edge.to]) {
        gscore[edge.to] = cand;
        parent_node[edge.to] = top.node;
        parent_edge[edge.to] = static_cast<int>(e);
        const MoveGraph::Node& tn = mg.nodes[edge.to];
        open.push({static_cast<double>(cand) + per_tile * (goal_x - tn.x), tn.x, tn.y,
                   seq++, edge.to, cand});
      }
    }
  }

  trace.completed = goal_node >= 0;
  int end_node = trace.completed ? goal_node : best_node;

  std::vector<int> path;
  for (int n = end_node; n >= 0; n = parent_node[n]) path.push_back(n);
  std::reverse(path.begin(), path.end());

  long tick = 0;
  const MoveGraph::Node& start_nd = mg.nodes[path[0]];
  trace.steps.push_back({start_nd.x, start_nd.y, false, 0});
  trace.reached_x = start_nd.x;

  for (std::size_t i = 1; i < path.size(); ++i) {
    const MoveGraph::Node from = mg.nodes[path[i - 1]];
    const MoveGraph::Node to = mg.nodes[path[i]];
    const MoveGraph::Edge& edge = mg.edges[path[i - 1]][parent_edge[path[i]]];
    if (!edge.jump) {
      for (int t = 1; t <= edge.ticks; ++t) {
        bool last = t == edge.ticks;
        trace.steps.push_back({last ? to.x : from.x, last ? to.y : from.y, false, ++tick});
      }
    } else {
      int peak = *jump_arc_peak(g, cfg, from.x, from.y, to.x, to.y);
      int step = (to.x > from.x) ? 1 : -1;
      int dx = std::abs(to.x - from.x);
      trace.steps.push_back({from.x, peak, true, ++tick});
      for (int k = 1; k <= dx; ++k)
        trace.steps.push_back({from.x + step * k, peak, true, ++tick});
      trace.steps.push_back({to.x, to.y, true, ++tick});
      trace.jumps.push_back(edge.ticks);
      if (g.at(to.x, to.y) == TileClass::Enemy) {
        ++trace.stomp_kills;
        ++trace.total_enemy_deaths;
      }
    }
    trace.reached_x = std::max(trace.reached_x, to.x);
  }
  trace.total_ticks = tick;
  return trace;
}

AgentMetrics extract_agent_metrics(const PlayTrace& t, const TileGrid& g, const AgentConfig& cfg) {
  cfg.validate();
  AgentMetrics m;

  if (g.width > 1) {
    m.playability = std::clamp(static_cast<double>(t.reached_x) / (g.width - 1), 0.0, 1.0);
  } else {
    m.playability = t.completed ? 1.0 : 0.0;
  }

  m.jump_count = static_cast<double>(t.jumps.size());
  long air = 0;
  int max_air = 0;
  for (int a : t.jumps) {
    air += a;
    max_air = std::max(max_air, a);
  }
  m.max_jump_air_time = max_air;

  if (t.total_ticks > 0) {
    m.time_taken = static_cast<double>(t.total_ticks) / cfg.ticks_per_second;
    m.jump_entropy = m.jump_count / static_cast<double>(t.total_ticks);
    m.on_ground_ratio =
        static_cast<double>(t.total_ticks - air) / static_cast<double>(t.total_ticks);
  } else {
    m.degenerate = true;
    m.time_taken = 1.0 / cfg.ticks_per_second;  // one tick's duration
    m.jump_entropy = 0.0;
    m.on_ground_ratio = 1.0;
  }
  m.speed = m.playability / m.time_taken;

  m.total_enemy_deaths = t.total_enemy_deaths;
  m.kills_by_stomp = t.stomp_kills;

  if (!t.steps.empty()) {
    double sum_y = 0.0;
    for (const TraceStep& s : t.steps) sum_y += s.y;
    m.average_y = sum_y / static_cast<double>(t.steps.size());
  } else {
    m.degenerate = true;
    m.average_y = 0.0;
  }
  return m;
}

std::vector<MetricValue> agent_metric_values(const AgentMetrics& m) {
  return {{"JumpCount", m.jump_count},
          {"JumpEntropy", m.jump_entropy},
          {"Speed", m.speed},
          {"TimeTaken", m.time_taken},
          {"TotalEnemyDeaths", m.total_enemy_deaths},
          {"KillsByStomp", m.kills_by_stomp},
          {"MaxJumpAirTime", m.max_jump_air_time},
          {"OnGroundRatio", m.on_ground_ratio},
          {"AverageY", m.average_y}};
}

}  // namespace era
