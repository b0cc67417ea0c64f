#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace era {

enum class TileClass : std::uint8_t { Solid, Empty, Enemy, Reward, Pipe };

const char* tile_class_name(TileClass c);
std::optional<TileClass> tile_class_from_name(const std::string& name);

/// Maps raw level characters to tile classes. Keys are unique; the optional
/// default class absorbs characters missing from the map.
struct TileClassification {
  std::map<char, TileClass> char_map;
  std::optional<TileClass> default_class;

  TileClass classify(char c) const;  // throws on unmapped char without default

  /// Built-in table for the common Mario-style text encoding.
  static const TileClassification& mario_default();
};

/// Rectangular tile grid. Row 0 is the top line of the source text and y
/// grows downward; everything height-sensitive uses this frame.
struct TileGrid {
  int width = 0;
  int height = 0;
  std::vector<TileClass> cells;  // row-major, index y * width + x
  std::vector<std::string> raw;  // original lines, one per row
  std::string level_id;
  std::string generator_label;

  bool in_bounds(int x, int y) const {
    return x >= 0 && x < width && y >= 0 && y < height;
  }
  TileClass at(int x, int y) const {
    return cells[static_cast<std::size_t>(y) * width + x];
  }
  // Solid and Pipe both carry weight; everything else can be occupied.
  bool solid_support(int x, int y) const {
    TileClass c = at(x, y);
    return c == TileClass::Solid || c == TileClass::Pipe;
  }
  bool passable(int x, int y) const { return !solid_support(x, y); }
  // A cell something can stand in: passable with solid support directly below.
  bool standable(int x, int y) const {
    return passable(x, y) && y + 1 < height && solid_support(x, y + 1);
  }
};

/// Parses "<char> = <ClassName>" lines; "//" starts a comment line and the
/// special key "default" sets the fallback class.
TileClassification parse_classification(const std::string& text);
TileClassification load_classification(const std::filesystem::path& file);

TileGrid parse_level(const std::string& text, const TileClassification& tc,
                     std::string level_id = {}, std::string generator_label = {});

/// Original text, one row per line with a trailing newline.
std::string serialize_raw(const TileGrid& g);

struct LoadFailure {
  std::filesystem::path path;
  std::string message;
};

struct Corpus {
  std::vector<TileGrid> grids;
  std::vector<LoadFailure> failures;
  std::vector<std::string> warnings;
};

/// Loads root/<generator>/<level_id>.txt in lexicographic order. Files that
/// fail to parse are collected in `failures` and skipped.
Corpus load_corpus(const std::filesystem::path& root, const TileClassification& tc);

}  // namespace era
