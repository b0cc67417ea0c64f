#include "era/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "era/error.hpp"
#include "era/util.hpp"

namespace era {
namespace {

// ---- CSV ----

bool needs_quoting(const std::string& field) {
  return field.find_first_of(",\"\n\r") != std::string::npos;
}

std::string csv_escape(const std::string& field) {
  if (!needs_quoting(field)) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool row_started = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"': quoted = true; row_started = true; break;
      case ',':
        row.push_back(std::move(field));
        field.clear();
        row_started = true;
        break;
      case '\r': break;
      case '\n':
        if (row_started || !field.empty()) {
          row.push_back(std::move(field));
          field.clear();
          rows.push_back(std::move(row));
          row.clear();
          row_started = false;
        }
        break;
      default: field += c; row_started = true; break;
    }
  }
  if (row_started || !field.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) raise(Errc::IoFailure, "cannot open " + file.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::filesystem::path& file, const std::string& content) {
  std::ofstream out(file, std::ios::binary);
  if (!out) raise(Errc::IoFailure, "cannot write " + file.string());
  out << content;
  if (!out) raise(Errc::IoFailure, "failed writing " + file.string());
}

// ---- SVG helpers ----

struct Rgb {
  int r, g, b;
};

constexpr Rgb kViridis[5] = {
    {0x44, 0x01, 0x54}, {0x3b, 0x52, 0x8b}, {0x21, 0x91, 0x8c},
    {0x5e, 0xc9, 0x62}, {0xfd, 0xe7, 0x25}};
constexpr Rgb kHeat[5] = {
    {0x00, 0x00, 0x00}, {0x7a, 0x00, 0x00}, {0xe3, 0x41, 0x00},
    {0xff, 0xa5, 0x00}, {0xff, 0xff, 0xff}};
constexpr const char* kNeutralCell = "#d9d9d9";
constexpr const char* kOverlayColors[10] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

const Rgb* palette_stops(const std::string& name) {
  if (name == "viridis") return kViridis;
  if (name == "heat") return kHeat;
  raise(Errc::InvalidParams, "unknown palette '" + name + "' (viridis, heat)");
}

std::string ramp_color(const Rgb* stops, double t) {
  t = std::clamp(t, 0.0, 1.0);
  double seg = t * 4.0;
  int i = std::min(static_cast<int>(seg), 3);
  double frac = seg - i;
  auto lerp = [frac](int a, int b) {
    return static_cast<int>(std::lround(a + (b - a) * frac));
  };
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", lerp(stops[i].r, stops[i + 1].r),
                lerp(stops[i].g, stops[i + 1].g), lerp(stops[i].b, stops[i + 1].b));
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

// ---- metric table CSV ----

void write_metric_table(const MetricTable& t, const std::filesystem::path& file) {
  std::string out = "level_id,generator";
  for (const std::string& name : t.column_names) out += "," + csv_escape(name);
  if (t.has_fitness) out += std::string(",") + fitness_metric_name();
  out += '\n';

  for (std::size_t i = 0; i < t.rows(); ++i) {
    out += csv_escape(t.level_ids[i]);
    out += ',';
    out += csv_escape(t.generator_labels[i]);
    for (const auto& column : t.columns) {
      out += ',';
      out += format_sig(column[i], 6);
    }
    if (t.has_fitness) {
      out += ',';
      out += format_sig(t.fitness[i], 6);
    }
    out += '\n';
  }
  write_file(file, out);
}

MetricTable read_metric_table(const std::filesystem::path& file) {
  auto rows = parse_csv(read_file(file));
  if (rows.empty()) raise(Errc::BadFormat, file.string() + ": empty CSV");
  const auto& header = rows[0];
  if (header.size() < 3 || header[0] != "level_id" || header[1] != "generator")
    raise(Errc::BadFormat, file.string() + ": header must start with level_id,generator");

  MetricTable t;
  bool has_fitness = header.back() == fitness_metric_name();
  std::size_t metric_end = has_fitness ? header.size() - 1 : header.size();
  for (std::size_t c = 2; c < metric_end; ++c) t.column_names.push_back(header[c]);
  if (t.column_names.empty())
    raise(Errc::BadFormat, file.string() + ": no metric columns");

  std::vector<double> values(t.column_names.size());
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != header.size())
      raise(Errc::BadFormat, file.string() + ": row " + std::to_string(r) + " has " +
                                 std::to_string(row.size()) + " fields, expected " +
                                 std::to_string(header.size()));
    for (std::size_t c = 0; c < values.size(); ++c) values[c] = parse_double(row[2 + c]);
    if (has_fitness)
      t.add_row(row[0], row[1], values, parse_double(row.back()));
    else
      t.add_row_no_fitness(row[0], row[1], values);
  }
  return t;
}

// ---- ranking outputs ----

void write_ranking_csv(const RankingTable& r, const std::filesystem::path& file) {
  std::string out = "m1,m2,FI,MC_signed,MC_abs,AMC,FI_rank,MC_rank,AMC_rank,avg_rank,degenerate\n";
  for (const PairCriteria& p : r.pairs) {
    out += csv_escape(p.m1);
    out += ',';
    out += csv_escape(p.m2);
    out += ',';
    if (r.has_fi) out += format_sig(p.fi, 9);
    out += ',';
    out += format_sig(p.mc_signed, 9);
    out += ',';
    out += format_sig(p.mc_abs, 9);
    out += ',';
    out += format_sig(p.amc, 9);
    out += ',';
    if (r.has_fi) out += format_sig(p.fi_rank, 6);
    out += ',';
    out += format_sig(p.mc_rank, 6);
    out += ',';
    out += format_sig(p.amc_rank, 6);
    out += ',';
    out += format_sig(p.avg_rank, 6);
    out += ',';
    out += p.degenerate ? '1' : '0';
    out += '\n';
  }
  write_file(file, out);
}

namespace {

std::string pair_label(const PairCriteria& p) { return p.m1 + " / " + p.m2; }

void append_block(std::string& out, const std::string& heading,
                  const std::vector<const PairCriteria*>& rows, bool has_fi) {
  out += "## " + heading + "\n\n";
  out += has_fi ? "| pair | FI | FI rank | MC | MC rank | AMC | AMC rank | avg rank |\n"
                  "|---|---|---|---|---|---|---|---|\n"
                : "| pair | MC | MC rank | AMC | AMC rank | avg rank |\n"
                  "|---|---|---|---|---|---|\n";
  for (const PairCriteria* p : rows) {
    out += "| " + pair_label(*p) + " | ";
    if (has_fi) out += format_sig(p->fi, 3) + " | " + format_sig(p->fi_rank, 3) + " | ";
    out += format_sig(p->mc_signed, 3) + " | " + format_sig(p->mc_rank, 3) + " | ";
    out += format_sig(p->amc, 3) + " | " + format_sig(p->amc_rank, 3) + " | ";
    out += format_sig(p->avg_rank, 3);
    out += p->degenerate ? " (degenerate) |\n" : " |\n";
  }
  out += '\n';
}

std::vector<const PairCriteria*> top_by(const RankingTable& r, int top_n,
                                        double PairCriteria::*rank_field) {
  std::vector<const PairCriteria*> sorted;
  sorted.reserve(r.pairs.size());
  for (const PairCriteria& p : r.pairs) sorted.push_back(&p);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [rank_field](const PairCriteria* a, const PairCriteria* b) {
                     if (a->*rank_field != b->*rank_field) return a->*rank_field < b->*rank_field;
                     if (a->m1 != b->m1) return a->m1 < b->m1;
                     return a->m2 < b->m2;
                   });
  if (static_cast<int>(sorted.size()) > top_n) sorted.resize(top_n);
  return sorted;
}

std::vector<const PairCriteria*> top_by_avg(const RankingTable& r, int top_n) {
  std::vector<const PairCriteria*> rows;
  for (const PairCriteria& p : r.pairs) {
    rows.push_back(&p);
    if (static_cast<int>(rows.size()) == top_n) break;
  }
  return rows;
}

}  // namespace

void write_top_summary(const RankingTable& r, const std::filesystem::path& file, int top_n) {
  if (top_n < 1) raise(Errc::InvalidParams, "top_n must be >= 1");
  int n = std::min<int>(top_n, static_cast<int>(r.pairs.size()));
  std::string out = "# Metric pair selection summary\n\n";
  out += std::to_string(r.pairs.size()) + " pairs over " + std::to_string(r.n_metrics) +
         " metrics, grid resolution " + std::to_string(r.resolution) +
         ", scores shown at 3 significant figures.\n\n";
  if (r.has_fi)
    append_block(out, "Top " + std::to_string(n) + " by fitness independence",
                 top_by(r, n, &PairCriteria::fi_rank), r.has_fi);
  append_block(out, "Top " + std::to_string(n) + " by mutual correlation (weakest)",
               top_by(r, n, &PairCriteria::mc_rank), r.has_fi);
  append_block(out, "Top " + std::to_string(n) + " by alternative metric coverage",
               top_by(r, n, &PairCriteria::amc_rank), r.has_fi);
  append_block(out, "Top " + std::to_string(n) + " by average rank", top_by_avg(r, n), r.has_fi);
  write_file(file, out);
}

// ---- plots ----

PlotMode plot_mode_from_name(const std::string& name) {
  if (name == "fitness_heatmap") return PlotMode::FitnessHeatmap;
  if (name == "count_heatmap") return PlotMode::CountHeatmap;
  if (name == "generator_overlay") return PlotMode::GeneratorOverlay;
  raise(Errc::InvalidParams, "unknown plot mode '" + name +
                                 "' (fitness_heatmap, count_heatmap, generator_overlay)");
}

const char* plot_mode_name(PlotMode m) {
  switch (m) {
    case PlotMode::FitnessHeatmap: return "fitness_heatmap";
    case PlotMode::CountHeatmap: return "count_heatmap";
    case PlotMode::GeneratorOverlay: return "generator_overlay";
  }
  return "?";
}

void PlotSpec::validate() const {
  if (resolution < 1) raise(Errc::InvalidParams, "plot resolution must be >= 1");
  if (width_px < 100 || height_px < 100)
    raise(Errc::InvalidParams, "plot canvas must be at least 100x100 px");
  palette_stops(palette);
}

std::string render_plot_svg(const MetricTable& t, const PlotSpec& spec) {
  spec.validate();
  if (t.rows() == 0) raise(Errc::NoLevels, "cannot plot an empty table");
  int c1 = t.column_index(spec.m1);
  int c2 = t.column_index(spec.m2);
  if (c1 < 0) raise(Errc::UnknownColumn, "unknown metric '" + spec.m1 + "'");
  if (c2 < 0) raise(Errc::UnknownColumn, "unknown metric '" + spec.m2 + "'");
  if (spec.mode == PlotMode::FitnessHeatmap && !t.has_fitness)
    raise(Errc::InvalidParams, "fitness heatmap needs a fitness column");

  const bool overlay = spec.mode == PlotMode::GeneratorOverlay;
  const double left = 64, top = 36, bottom = 48;
  const double right = overlay ? 170 : 84;
  const double w = spec.width_px - left - right;
  const double h = spec.height_px - top - bottom;
  if (w < 40 || h < 40) raise(Errc::InvalidParams, "plot margins leave no drawing area");
  const Rgb* stops = palette_stops(spec.palette);

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.width_px
      << "\" height=\"" << spec.height_px << "\" viewBox=\"0 0 " << spec.width_px << " "
      << spec.height_px << "\">\n";
  svg << "<title>" << xml_escape(spec.m1) << " vs " << xml_escape(spec.m2) << " ("
      << plot_mode_name(spec.mode) << ")</title>\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << spec.width_px << "\" height=\"" << spec.height_px
      << "\" fill=\"#ffffff\"/>\n";
  svg << "<text x=\"" << px(left + w / 2) << "\" y=\"22\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"14\" fill=\"#111111\">"
      << xml_escape(spec.m1) << " vs " << xml_escape(spec.m2) << " (" << plot_mode_name(spec.mode)
      << ")</text>\n";

  double x_min = 0, x_max = 0, y_min = 0, y_max = 0;
  if (overlay) {
    const std::vector<double>& xs = t.columns[c1];
    const std::vector<double>& ys = t.columns[c2];
    auto [a, b] = std::minmax_element(xs.begin(), xs.end());
    auto [c, d] = std::minmax_element(ys.begin(), ys.end());
    x_min = *a; x_max = *b; y_min = *c; y_max = *d;

    std::map<std::string, int> generator_index;
    for (const std::string& label : t.generator_labels) generator_index.emplace(label, 0);
    int next_index = 0;
    for (auto& [label, index] : generator_index) index = next_index++;

    svg << "<g class=\"points\">\n";
    SplitMix64 jitter(spec.jitter_seed);
    const double x_range = x_max - x_min;
    const double y_range = y_max - y_min;
    for (std::size_t i = 0; i < t.rows(); ++i) {
      double jx = (jitter.uniform() * 2.0 - 1.0) * 0.005 * x_range;
      double jy = (jitter.uniform() * 2.0 - 1.0) * 0.005 * y_range;
      double fx = x_range > 0 ? std::clamp((t.columns[c1][i] + jx - x_min) / x_range, 0.0, 1.0) : 0.5;
      double fy = y_range > 0 ? std::clamp((t.columns[c2][i] + jy - y_min) / y_range, 0.0, 1.0) : 0.5;
      const char* color = kOverlayColors[generator_index[t.generator_labels[i]] % 10];
      svg << "<circle cx=\"" << px(left + fx * w) << "\" cy=\"" << px(top + h - fy * h)
          << "\" r=\"2.5\" fill=\"" << color << "\" fill-opacity=\"0.55\"/>\n";
    }
    svg << "</g>\n";

    svg << "<g class=\"legend\">\n";
    double ly = top + 6;
    for (const auto& [label, index] : generator_index) {
      svg << "<rect class=\"legend-swatch\" x=\"" << px(left + w + 14) << "\" y=\"" << px(ly)
          << "\" width=\"10\" height=\"10\" fill=\"" << kOverlayColors[index % 10] << "\"/>\n";
      svg << "<text class=\"legend-label\" x=\"" << px(left + w + 29) << "\" y=\"" << px(ly + 9)
          << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#111111\">"
          << xml_escape(label) << "</text>\n";
      ly += 16;
    }
    svg << "</g>\n";
  } else {
    GridHistogram grid = bin_pair(t, spec.m1, spec.m2, spec.resolution);
    x_min = grid.x_min; x_max = grid.x_max; y_min = grid.y_min; y_max = grid.y_max;
    long max_count = 0;
    for (long c : grid.counts) max_count = std::max(max_count, c);

    const double cw = w / grid.resolution;
    const double ch = h / grid.resolution;
    svg << "<g class=\"cells\">\n";
    for (int iy = 0; iy < grid.resolution; ++iy)
      for (int ix = 0; ix < grid.resolution; ++ix) {
        long count = grid.count_at(ix, iy);
        std::string fill;
        if (count == 0) {
          fill = kNeutralCell;
        } else if (spec.mode == PlotMode::FitnessHeatmap) {
          fill = ramp_color(stops, grid.fitness_sum_at(ix, iy) / static_cast<double>(count));
        } else {
          fill = ramp_color(stops, std::log1p(static_cast<double>(count)) /
                                       std::log1p(static_cast<double>(max_count)));
        }
        svg << "<rect x=\"" << px(left + ix * cw) << "\" y=\"" << px(top + h - (iy + 1) * ch)
            << "\" width=\"" << px(cw) << "\" height=\"" << px(ch) << "\" fill=\"" << fill
            << "\"/>\n";
      }
    svg << "</g>\n";

    // colour bar
    svg << "<g class=\"scale\">\n";
    const int bar_steps = 20;
    const double bar_h = h / bar_steps;
    for (int s = 0; s < bar_steps; ++s) {
      double tt = (s + 0.5) / bar_steps;
      svg << "<rect x=\"" << px(left + w + 18) << "\" y=\"" << px(top + h - (s + 1) * bar_h)
          << "\" width=\"12\" height=\"" << px(bar_h) << "\" fill=\"" << ramp_color(stops, tt)
          << "\"/>\n";
    }
    std::string hi_label =
        spec.mode == PlotMode::FitnessHeatmap ? "1" : format_sig(static_cast<double>(max_count), 4);
    svg << "<text x=\"" << px(left + w + 34) << "\" y=\"" << px(top + 10)
        << "\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#111111\">" << hi_label
        << "</text>\n";
    svg << "<text x=\"" << px(left + w + 34) << "\" y=\"" << px(top + h)
        << "\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#111111\">0</text>\n";
    svg << "</g>\n";
  }

  // axes
  svg << "<g class=\"axes\">\n";
  svg << "<rect x=\"" << px(left) << "\" y=\"" << px(top) << "\" width=\"" << px(w)
      << "\" height=\"" << px(h) << "\" fill=\"none\" stroke=\"#333333\"/>\n";
  svg << "<text x=\"" << px(left) << "\" y=\"" << px(top + h + 16)
      << "\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#111111\">"
      << format_sig(x_min, 4) << "</text>\n";
  svg << "<text x=\"" << px(left + w) << "\" y=\"" << px(top + h + 16)
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#111111\">"
      << format_sig(x_max, 4) << "</text>\n";
  svg << "<text x=\"" << px(left + w / 2) << "\" y=\"" << px(top + h + 34)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#111111\">"
      << xml_escape(spec.m1) << "</text>\n";
  svg << "<text x=\"" << px(left - 6) << "\" y=\"" << px(top + h)
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#111111\">"
      << format_sig(y_min, 4) << "</text>\n";
  svg << "<text x=\"" << px(left - 6) << "\" y=\"" << px(top + 10)
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#111111\">"
      << format_sig(y_max, 4) << "</text>\n";
  svg << "<text x=\"14\" y=\"" << px(top + h / 2)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#111111\" "
         "transform=\"rotate(-90 14 "
      << px(top + h / 2) << ")\">" << xml_escape(spec.m2) << "</text>\n";
  svg << "</g>\n";
  svg << "</svg>\n";
  return svg.str();
}

void render_plot(const MetricTable& t, const PlotSpec& spec, const std::filesystem::path& file) {
  write_file(file, render_plot_svg(t, spec));
}

// ---- composition ----

CompositionSummary summarize_composition(
    const RankingTable& r, const std::function<MetricCategory(const std::string&)>& category_of,
    int top_n) {
  if (top_n < 1) raise(Errc::InvalidParams, "top_n must be >= 1");
  int n = std::min<int>(top_n, static_cast<int>(r.pairs.size()));

  auto category_slot = [&](const PairCriteria& p) {
    MetricCategory a = category_of(p.m1);
    MetricCategory b = category_of(p.m2);
    if (a == MetricCategory::Structural && b == MetricCategory::Structural) return 0;
    if (a == MetricCategory::Agent && b == MetricCategory::Agent) return 2;
    return 1;
  };

  CompositionSummary c;
  std::set<std::pair<std::string, std::string>> pool;
  std::vector<std::vector<const PairCriteria*>> blocks;
  blocks.push_back(r.has_fi ? top_by(r, n, &PairCriteria::fi_rank)
                            : std::vector<const PairCriteria*>{});
  blocks.push_back(top_by(r, n, &PairCriteria::mc_rank));
  blocks.push_back(top_by(r, n, &PairCriteria::amc_rank));
  blocks.push_back(top_by_avg(r, n));

  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (const PairCriteria* p : blocks[b]) {
      ++c.per_block[b][category_slot(*p)];
      pool.emplace(p->m1, p->m2);
    }

  std::map<std::string, long> appearances;
  for (const PairCriteria& p : r.pairs) {
    appearances.emplace(p.m1, 0);
    appearances.emplace(p.m2, 0);
  }
  for (const auto& [m1, m2] : pool) {
    const PairCriteria* found = nullptr;
    for (const PairCriteria& p : r.pairs)
      if (p.m1 == m1 && p.m2 == m2) {
        found = &p;
        break;
      }
    switch (category_slot(*found)) {
      case 0: ++c.structural_structural; break;
      case 1: ++c.structural_agent; break;
      default: ++c.agent_agent; break;
    }
    ++appearances[m1];
    ++appearances[m2];
    c.pool.emplace_back(m1, m2);
  }
  c.metric_appearances.assign(appearances.begin(), appearances.end());
  return c;
}

void write_composition_csv(const CompositionSummary& c, bool has_fi,
                           const std::filesystem::path& file) {
  auto row = [&](const char* name, int slot, long pooled) {
    std::string out = name;
    out += ',';
    if (has_fi) out += std::to_string(c.per_block[0][slot]);
    out += ',' + std::to_string(c.per_block[1][slot]);
    out += ',' + std::to_string(c.per_block[2][slot]);
    out += ',' + std::to_string(c.per_block[3][slot]);
    out += ',' + std::to_string(pooled);
    out += '\n';
    return out;
  };
  std::string out = "category,fi_top,mc_top,amc_top,avg_rank_top,pool\n";
  out += row("Structural-Structural", 0, c.structural_structural);
  out += row("Structural-Agent", 1, c.structural_agent);
  out += row("Agent-Agent", 2, c.agent_agent);
  write_file(file, out);
}

void write_metric_frequency_csv(const CompositionSummary& c,
                                const std::function<MetricCategory(const std::string&)>& category_of,
                                const std::filesystem::path& file) {
  std::string out = "metric,category,appearances\n";
  for (const auto& [name, count] : c.metric_appearances) {
    out += csv_escape(name);
    out += ',';
    out += metric_category_name(category_of(name));
    out += ',' + std::to_string(count) + '\n';
  }
  write_file(file, out);
}

}  // namespace era
