#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "era/level.hpp"

namespace era {

/// Bounded-random-walk terrain generator. Every level derives its own stream
/// from (seed, generator_label, level index), so corpora are reproducible
/// per seed and distinct per label.
struct SynthParams {
  std::uint64_t seed = 0;
  int width = 150;
  int height = 16;
  int level_count = 100;
  double gap_prob = 0.05;       // per column chance to open a gap
  int max_gap_width = 3;
  double enemy_prob = 0.05;     // per column chance of a ground enemy
  double pipe_prob = 0.03;      // per column chance of a 2-tile pipe
  double reward_prob = 0.05;    // per column chance of a floating reward
  int height_walk_step = 1;     // max ground height change per column
  std::string generator_label = "synth";

  void validate() const;  // throws InvalidParams
};

std::vector<TileGrid> generate_corpus(const SynthParams& params);

/// Concatenation of per-generator corpora; labels must be unique.
std::vector<TileGrid> generate_ensemble(const std::vector<SynthParams>& params);

/// One key-value block per generator, blocks separated by a line of "---".
std::vector<SynthParams> parse_synth_params(const std::string& text);
std::vector<SynthParams> load_synth_params(const std::filesystem::path& file);

/// Writes out_dir/<generator_label>/<level_id>.txt for every grid.
void write_corpus(const std::vector<TileGrid>& grids, const std::filesystem::path& out_dir);

}  // namespace era
