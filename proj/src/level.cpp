#include "era/level.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "era/error.hpp"

namespace era {
namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) {
    if (cur.back() == '\r') cur.pop_back();
    lines.push_back(cur);
  }
  return lines;
}

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) raise(Errc::IoFailure, "cannot open " + file.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

const char* tile_class_name(TileClass c) {
  switch (c) {
    case TileClass::Solid: return "Solid";
    case TileClass::Empty: return "Empty";
    case TileClass::Enemy: return "Enemy";
    case TileClass::Reward: return "Reward";
    case TileClass::Pipe: return "Pipe";
  }
  return "?";
}

std::optional<TileClass> tile_class_from_name(const std::string& name) {
  if (name == "Solid") return TileClass::Solid;
  if (name == "Empty") return TileClass::Empty;
  if (name == "Enemy") return TileClass::Enemy;
  if (name == "Reward") return TileClass::Reward;
  if (name == "Pipe") return TileClass::Pipe;
  return std::nullopt;
}

TileClass TileClassification::classify(char c) const {
  auto it = char_map.find(c);
  if (it != char_map.end()) return it->second;
  if (default_class) return *default_class;
  raise(Errc::UnmappedChar, std::string("unmapped level character '") + c + "'");
}

const TileClassification& TileClassification::mario_default() {
  static const TileClassification tc = [] {
    TileClassification t;
    auto add = [&t](const char* chars, TileClass c) {
      for (const char* p = chars; *p; ++p) t.char_map.emplace(*p, c);
    };
    add("-", TileClass::Empty);
    add("X#S%DU", TileClass::Solid);
    add("EgGkKryY", TileClass::Enemy);
    add("Q!CoL12", TileClass::Reward);
    add("tT<>[]", TileClass::Pipe);
    return t;
  }();
  return tc;
}

TileClassification parse_classification(const std::string& text) {
  TileClassification tc;
  int line_no = 0;
  for (const std::string& raw_line : split_lines(text)) {
    ++line_no;
    std::string line = trim(raw_line);
    if (line.empty() || line.rfind("//", 0) == 0) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      raise(Errc::BadFormat, "classification line " + std::to_string(line_no) + ": missing '='");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    auto cls = tile_class_from_name(value);
    if (!cls)
      raise(Errc::UnknownClass, "classification line " + std::to_string(line_no) +
                                    ": unknown class '" + value + "'");
    if (key == "default") {
      if (tc.default_class)
        raise(Errc::DuplicateKey, "classification line " + std::to_string(line_no) +
                                      ": duplicate default");
      tc.default_class = *cls;
    } else if (key.size() == 1) {
      if (!tc.char_map.emplace(key[0], *cls).second)
        raise(Errc::DuplicateKey, "classification line " + std::to_string(line_no) +
                                      ": duplicate key '" + key + "'");
    } else {
      raise(Errc::BadFormat, "classification line " + std::to_string(line_no) +
                                 ": key must be one character or 'default'");
    }
  }
  if (tc.char_map.empty())
    raise(Errc::EmptyMap, "classification defines no characters");
  return tc;
}

TileClassification load_classification(const std::filesystem::path& file) {
  return parse_classification(read_file(file));
}

TileGrid parse_level(const std::string& text, const TileClassification& tc,
                     std::string level_id, std::string generator_label) {
  std::vector<std::string> lines = split_lines(text);
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) raise(Errc::EmptyInput, "level text is empty");

  TileGrid g;
  g.level_id = std::move(level_id);
  g.generator_label = std::move(generator_label);
  g.height = static_cast<int>(lines.size());
  g.width = static_cast<int>(lines[0].size());
  if (g.width == 0) raise(Errc::EmptyInput, "level rows are empty");
  g.cells.reserve(static_cast<std::size_t>(g.width) * g.height);
  for (int y = 0; y < g.height; ++y) {
    if (static_cast<int>(lines[y].size()) != g.width)
      raise(Errc::RaggedRows, "row " + std::to_string(y) + " has length " +
                                  std::to_string(lines[y].size()) + ", expected " +
                                  std::to_string(g.width));
    for (char c : lines[y]) g.cells.push_back(tc.classify(c));
  }
  g.raw = std::move(lines);
  return g;
}

std::string serialize_raw(const TileGrid& g) {
  std::string out;
  for (const std::string& row : g.raw) {
    out += row;
    out += '\n';
  }
  return out;
}

Corpus load_corpus(const std::filesystem::path& root, const TileClassification& tc) {
  Corpus corpus;
  if (!std::filesystem::is_directory(root))
    raise(Errc::IoFailure, "corpus root is not a directory: " + root.string());

  std::vector<std::filesystem::path> generator_dirs;
  for (const auto& entry : std::filesystem::directory_iterator(root))
    if (entry.is_directory()) generator_dirs.push_back(entry.path());
  std::sort(generator_dirs.begin(), generator_dirs.end());

  for (const auto& dir : generator_dirs) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
      if (entry.is_regular_file() && entry.path().extension() == ".txt")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& file : files) {
      try {
        corpus.grids.push_back(parse_level(read_file(file), tc,
                                           file.stem().string(), dir.filename().string()));
      } catch (const Error& e) {
        corpus.failures.push_back({file, e.what()});
      }
    }
  }
  if (corpus.grids.empty() && corpus.failures.empty())
    corpus.warnings.push_back("no level files found under " + root.string());
  return corpus;
}

}  // namespace era
