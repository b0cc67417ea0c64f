#include "era/synth.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "era/error.hpp"
#include "era/util.hpp"

namespace era {
namespace {

constexpr char kEmpty = '-';
constexpr char kSolid = 'X';
constexpr char kEnemy = 'E';
constexpr char kReward = 'Q';
constexpr char kPipe = 't';

std::string level_name(int index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "lvl_%04d", index);
  return buf;
}

TileGrid generate_level(const SynthParams& p, int index) {
  SplitMix64 rng(mix_seed(mix_seed(p.seed, fnv1a64(p.generator_label)),
                          static_cast<std::uint64_t>(index)));

  std::vector<std::string> rows(p.height, std::string(p.width, kEmpty));

  // Ground rows walk within [min_ground, height - 1]; four rows of headroom
  // keep pipe tops standable and jumpable-from. validate() guarantees height >= 5.
  const int min_ground = 4;
  int ground = std::clamp(p.height - 3, min_ground, p.height - 1);
  int gap_left = 0;
  const int safe_margin = 2;  // first and last columns always have ground

  for (int x = 0; x < p.width; ++x) {
    bool decorated_column = x >= safe_margin && x < p.width - safe_margin;
    if (gap_left > 0) {
      --gap_left;
      continue;
    }
    if (decorated_column && rng.chance(p.gap_prob)) {
      int gap = rng.range_int(1, p.max_gap_width);
      gap_left = std::min(gap, p.width - safe_margin - x) - 1;
      continue;
    }
    if (x > 0 && p.height_walk_step > 0) {
      ground = std::clamp(ground + rng.range_int(-p.height_walk_step, p.height_walk_step),
                          min_ground, p.height - 1);
    }
    for (int y = ground; y < p.height; ++y) rows[y][x] = kSolid;

    if (!decorated_column) continue;
    if (ground - 3 >= 0 && rng.chance(p.pipe_prob)) {
      rows[ground - 1][x] = kPipe;
      rows[ground - 2][x] = kPipe;
    } else if (rng.chance(p.enemy_prob)) {
      rows[ground - 1][x] = kEnemy;
    }
    if (ground - 3 >= 0 && rows[ground - 3][x] == kEmpty && rng.chance(p.reward_prob)) {
      rows[ground - 3][x] = kReward;
    }
  }

  std::string text;
  for (const std::string& row : rows) {
    text += row;
    text += '\n';
  }
  return parse_level(text, TileClassification::mario_default(), level_name(index),
                     p.generator_label);
}

}  // namespace

void SynthParams::validate() const {
  // two solid margin columns at each end; ground walking from row 4 keeps
  // pipe tops standable with jump headroom above them
  if (width < 4) raise(Errc::InvalidParams, "width must be at least 4");
  if (height < 5) raise(Errc::InvalidParams, "height must be at least 5");
  if (level_count < 0) raise(Errc::InvalidParams, "level_count must be >= 0");
  if (max_gap_width < 1) raise(Errc::InvalidParams, "max_gap_width must be >= 1");
  if (height_walk_step < 0) raise(Errc::InvalidParams, "height_walk_step must be >= 0");
  for (double prob : {gap_prob, enemy_prob, pipe_prob, reward_prob})
    if (!(prob >= 0.0 && prob <= 1.0))
      raise(Errc::InvalidParams, "probabilities must be within [0, 1]");
  if (generator_label.empty()) raise(Errc::InvalidParams, "generator_label must not be empty");
}

std::vector<TileGrid> generate_corpus(const SynthParams& params) {
  params.validate();
  std::vector<TileGrid> grids;
  grids.reserve(params.level_count);
  for (int i = 0; i < params.level_count; ++i) grids.push_back(generate_level(params, i));
  return grids;
}

std::vector<TileGrid> generate_ensemble(const std::vector<SynthParams>& params) {
  std::set<std::string> labels;
  for (const SynthParams& p : params)
    if (!labels.insert(p.generator_label).second)
      raise(Errc::DuplicateLabel, "duplicate generator label '" + p.generator_label + "'");

  std::vector<TileGrid> grids;
  for (const SynthParams& p : params) {
    std::vector<TileGrid> part = generate_corpus(p);
    grids.insert(grids.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
  }
  return grids;
}

std::vector<SynthParams> parse_synth_params(const std::string& text) {
  std::vector<std::string> blocks;
  std::string current;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string trimmed = line;
    while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' ')) trimmed.pop_back();
    if (trimmed == "---") {
      blocks.push_back(current);
      current.clear();
    } else {
      current += line;
      current += '\n';
    }
  }
  blocks.push_back(current);

  std::vector<SynthParams> out;
  for (const std::string& block : blocks) {
    auto kvs = parse_key_values(block);
    if (kvs.empty()) continue;
    SynthParams p;
    bool seed_set = false;
    for (const auto& [key, value] : kvs) {
      if (key == "seed") { p.seed = static_cast<std::uint64_t>(parse_int(value)); seed_set = true; }
      else if (key == "width") p.width = static_cast<int>(parse_int(value));
      else if (key == "height") p.height = static_cast<int>(parse_int(value));
      else if (key == "level_count") p.level_count = static_cast<int>(parse_int(value));
      else if (key == "gap_prob") p.gap_prob = parse_double(value);
      else if (key == "max_gap_width") p.max_gap_width = static_cast<int>(parse_int(value));
      else if (key == "enemy_prob") p.enemy_prob = parse_double(value);
      else if (key == "pipe_prob") p.pipe_prob = parse_double(value);
      else if (key == "reward_prob") p.reward_prob = parse_double(value);
      else if (key == "height_walk_step") p.height_walk_step = static_cast<int>(parse_int(value));
      else if (key == "generator_label") p.generator_label = value;
      else raise(Errc::InvalidParams, "unknown synth key '" + key + "'");
    }
    if (!seed_set) p.seed = static_cast<std::uint64_t>(out.size());
    p.validate();
    out.push_back(std::move(p));
  }
  if (out.empty()) raise(Errc::InvalidParams, "synth params define no generators");
  return out;
}

std::vector<SynthParams> load_synth_params(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) raise(Errc::IoFailure, "cannot open " + file.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_synth_params(text.str());
}

void write_corpus(const std::vector<TileGrid>& grids, const std::filesystem::path& out_dir) {
  for (const TileGrid& g : grids) {
    std::filesystem::path dir = out_dir / g.generator_label;
    std::filesystem::create_directories(dir);
    std::filesystem::path file = dir / (g.level_id + ".txt");
    std::ofstream out(file, std::ios::binary);
    if (!out) raise(Errc::IoFailure, "cannot write " + file.string());
    out << serialize_raw(g);
  }
}

}  // namespace era
