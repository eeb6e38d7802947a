// Command-line front end: ingest, report, plot.

#include <charconv>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "mirkit/cooc.h"
#include "mirkit/corpus.h"
#include "mirkit/csv.h"
#include "mirkit/errors.h"
#include "mirkit/io.h"
#include "mirkit/report.h"
#include "mirkit/stats.h"
#include "mirkit/svg.h"
#include "mirkit/version.h"

namespace {

using namespace mirkit;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitIo = 3;

struct IngestArgs {
  std::string input;
  std::vector<std::string> col_flags;
  std::string col_file;
  bool strict = false;
};

struct ReportArgs {
  std::string input;
  std::string out_dir;
  std::vector<std::string> analyses;
  std::vector<std::string> col_flags;
  std::string col_file;
  int top_words = 10;
  std::string feature = "valence";
  bool force = false;
  bool full_vocab = false;
};

struct PlotArgs {
  std::string kind;
  std::string data;
  std::string out;
  std::string title;
  int width = 960;
  int height = 600;
  bool no_annotate = false;
};

ColumnMap make_column_map(const std::vector<std::string>& flags,
                          const std::string& file) {
  ColumnMap columns;
  if (!file.empty()) columns.load_file(file);
  for (const auto& assignment : flags) columns.add_assignment(assignment);
  return columns;
}

Feature parse_feature(const std::string& name) {
  const auto feature = feature_from_name(name);
  if (!feature) throw UsageError(fmt::format("unknown feature '{}'", name));
  return *feature;
}

int cmd_ingest(const IngestArgs& args) {
  const auto columns = make_column_map(args.col_flags, args.col_file);
  const auto document = read_text_file(args.input);
  const auto result = parse_corpus(document, columns, args.input);

  std::cout << result.report.to_json() << "\n";

  if (args.strict) {
    if (result.report.rows_rejected > 0) {
      std::cerr << fmt::format("error: {} row(s) rejected in strict mode\n",
                               result.report.rows_rejected);
      return kExitData;
    }
    return kExitOk;
  }
  if (result.report.rows_accepted == 0) {
    std::cerr << "error: no rows accepted\n";
    return kExitData;
  }
  return kExitOk;
}

int cmd_report(const ReportArgs& args) {
  const auto columns = make_column_map(args.col_flags, args.col_file);
  const auto document = read_text_file(args.input);
  const auto result = parse_corpus(document, columns, args.input);
  for (const auto& [row, reason] : result.report.rejections) {
    std::cerr << fmt::format("warning: row {} rejected: {}\n", row, reason);
  }
  if (result.report.rows_accepted == 0) {
    std::cerr << "error: no rows accepted\n";
    return kExitData;
  }

  ReportOptions options;
  options.input_path = args.input;
  options.out_dir = args.out_dir;
  options.analyses = args.analyses;
  options.top_words = args.top_words;
  options.mood_feature = parse_feature(args.feature);
  options.force = args.force;
  options.full_vocab = args.full_vocab;

  const auto manifest = run_report(result.corpus, options);
  std::cout << manifest.to_json();
  return kExitOk;
}

std::optional<double> cell_number(const std::string& cell) {
  if (cell.empty()) return std::nullopt;
  double value = 0.0;
  const char* last = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(cell.data(), last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

double require_number(const std::string& cell, size_t row, size_t col) {
  const auto value = cell_number(cell);
  if (!value) {
    throw DataError(
        fmt::format("row {}, column {}: '{}' is not a number", row, col, cell));
  }
  return *value;
}

FigureData figure_data_from_csv(FigureKind kind, const csv::Table& table) {
  switch (kind) {
    case FigureKind::kHBar: {
      // First column is the label; the value comes from the first column
      // whose cells parse as numbers.
      HBarData data;
      if (table.rows.empty()) throw DataError("hbar: empty data");
      size_t value_col = 0;
      for (size_t c = 1; c < table.header.size(); ++c) {
        if (cell_number(table.rows.front()[c])) {
          value_col = c;
          break;
        }
      }
      if (value_col == 0) throw DataError("hbar: no numeric column found");
      data.value_label = table.header[value_col];
      for (size_t r = 0; r < table.rows.size(); ++r) {
        data.bars.push_back(
            {table.rows[r][0],
             require_number(table.rows[r][value_col], r + 1, value_col + 1)});
      }
      return data;
    }
    case FigureKind::kLine: {
      LineData data;
      data.x_label = table.header.empty() ? "" : table.header[0];
      for (size_t c = 1; c < table.header.size(); ++c) {
        LineSeries series;
        series.name = table.header[c];
        for (size_t r = 0; r < table.rows.size(); ++r) {
          const auto y = cell_number(table.rows[r][c]);
          if (!y) continue;  // gap
          series.points.push_back(
              {require_number(table.rows[r][0], r + 1, 1), *y});
        }
        if (!series.points.empty()) data.series.push_back(std::move(series));
      }
      if (data.series.empty()) throw DataError("line: empty data");
      return data;
    }
    case FigureKind::kScatterFit: {
      ScatterFitData data;
      if (table.header.size() < 2)
        throw DataError("scatter_fit: need two columns");
      data.x_label = table.header[0];
      data.y_label = table.header[1];
      std::vector<double> xs, ys;
      for (size_t r = 0; r < table.rows.size(); ++r) {
        const double x = require_number(table.rows[r][0], r + 1, 1);
        const double y = require_number(table.rows[r][1], r + 1, 2);
        data.points.push_back({x, y});
        xs.push_back(x);
        ys.push_back(y);
      }
      if (data.points.empty()) throw DataError("scatter_fit: empty data");
      data.fit = linear_fit(xs, ys);
      return data;
    }
    case FigureKind::kHeatmap: {
      HeatmapData data;
      data.labels.assign(table.header.begin() + 1, table.header.end());
      bool integral = true;
      for (size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        if (row.size() != table.header.size()) {
          throw DataError(fmt::format("heatmap: row {} has {} cells, "
                                      "expected {}",
                                      r + 1, row.size(), table.header.size()));
        }
        std::vector<std::optional<double>> cells;
        for (size_t c = 1; c < row.size(); ++c) {
          if (row[c].empty()) {
            cells.push_back(std::nullopt);
            continue;
          }
          const double v = require_number(row[c], r + 1, c + 1);
          if (v != static_cast<double>(static_cast<long long>(v)))
            integral = false;
          cells.push_back(v);
        }
        data.cells.push_back(std::move(cells));
      }
      if (data.cells.size() != data.labels.size())
        throw DataError("heatmap: matrix is not square");
      data.decimals = integral ? 0 : 2;
      return data;
    }
  }
  throw UsageError("unknown figure kind");
}

int cmd_plot(const PlotArgs& args) {
  const auto kind = figure_kind_from_name(args.kind);
  if (!kind) {
    throw UsageError(fmt::format(
        "unknown kind '{}' (expected hbar, line, scatter_fit or heatmap)",
        args.kind));
  }
  const auto document = read_text_file(args.data);
  const auto table = csv::parse(document);

  FigureSpec spec;
  spec.kind = *kind;
  spec.title = args.title;
  spec.width_px = args.width;
  spec.height_px = args.height;
  spec.annotate = !args.no_annotate;

  const auto svg = render_figure(spec, figure_data_from_csv(*kind, table));
  write_text_file(args.out, svg);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Song-corpus analytics: audio-feature statistics, lyric "
               "frequencies, co-occurrence networks and genre mood profiles"};
  app.set_version_flag("--version",
                       fmt::format("{} {}", kToolName, kToolVersion));
  app.require_subcommand(1);

  IngestArgs ingest_args;
  auto* ingest = app.add_subcommand(
      "ingest", "Parse and validate a corpus CSV, print the ingest report");
  ingest->add_option("--input", ingest_args.input, "corpus CSV path")
      ->required();
  ingest->add_option("--col", ingest_args.col_flags,
                     "column mapping logical=header (repeatable)");
  ingest->add_option("--col-file", ingest_args.col_file,
                     "column mapping file, one logical=header per line");
  ingest->add_flag("--strict", ingest_args.strict,
                   "treat any rejected row as fatal");

  ReportArgs report_args;
  auto* report = app.add_subcommand(
      "report", "Run analyses and write CSV/JSON/SVG artifacts");
  report->add_option("--input", report_args.input, "corpus CSV path")
      ->required();
  report->add_option("--out", report_args.out_dir, "output directory")
      ->required();
  report
      ->add_option("--analyses", report_args.analyses,
                   "comma-separated: stats,trends,corr,tokens,cooc,mood or all")
      ->required()
      ->delimiter(',');
  report->add_option("--col", report_args.col_flags,
                     "column mapping logical=header (repeatable)");
  report->add_option("--col-file", report_args.col_file,
                     "column mapping file");
  report->add_option("--top-words", report_args.top_words,
                     "word-list size for tokens/cooc (default 10)");
  report->add_option("--feature", report_args.feature,
                     "feature for the mood analysis (default valence)");
  report->add_flag("--force", report_args.force,
                   "write into an existing output directory");
  report->add_flag("--full-vocab", report_args.full_vocab,
                   "also export the full vocabulary table");

  PlotArgs plot_args;
  auto* plot = app.add_subcommand("plot", "Render one SVG figure from a CSV");
  plot->add_option("--kind", plot_args.kind,
                   "hbar | line | scatter_fit | heatmap")
      ->required();
  plot->add_option("--data", plot_args.data, "input CSV path")->required();
  plot->add_option("--out", plot_args.out, "output SVG path")->required();
  plot->add_option("--title", plot_args.title, "figure title");
  plot->add_option("--width", plot_args.width, "width in px (default 960)");
  plot->add_option("--height", plot_args.height, "height in px (default 600)");
  plot->add_flag("--no-annotate", plot_args.no_annotate,
                 "suppress value annotations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    std::cout << app.version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (ingest->parsed()) return cmd_ingest(ingest_args);
    if (report->parsed()) return cmd_report(report_args);
    if (plot->parsed()) return cmd_plot(plot_args);
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
}
