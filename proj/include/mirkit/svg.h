#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mirkit/stats.h"

namespace mirkit {

enum class FigureKind { kHBar, kLine, kScatterFit, kHeatmap };

std::string_view figure_kind_name(FigureKind kind);
std::optional<FigureKind> figure_kind_from_name(std::string_view name);

struct FigureSpec {
  FigureKind kind = FigureKind::kHBar;
  std::string title;
  int width_px = 960;
  int height_px = 600;
  bool annotate = true;
};

struct BarDatum {
  std::string label;
  double value = 0.0;
};

// Bars drawn top to bottom in data order (callers pass ranked data).
struct HBarData {
  std::vector<BarDatum> bars;
  std::string value_label;
  int decimals = 0;  // annotation precision
};

struct SeriesPoint {
  double x = 0.0;
  double y = 0.0;
};

struct LineSeries {
  std::string name;
  std::vector<SeriesPoint> points;
};

struct LineData {
  std::vector<LineSeries> series;
  std::string x_label;
  std::string y_label;
};

struct ScatterFitData {
  std::vector<SeriesPoint> points;
  LinearFit fit;
  std::string x_label;
  std::string y_label;
};

// Square matrix with shared row/column labels; absent cells are drawn
// neutral and unannotated.
struct HeatmapData {
  std::vector<std::string> labels;
  std::vector<std::vector<std::optional<double>>> cells;
  int decimals = 0;  // cell annotation precision
};

using FigureData =
    std::variant<HBarData, LineData, ScatterFitData, HeatmapData>;

// Renders a self-contained SVG document: no external resources, generic
// font family, deterministic output. Throws UsageError for an invalid
// spec (width or height < 100) and DataError for empty data or a
// kind/data mismatch.
std::string render_figure(const FigureSpec& spec, const FigureData& data);

}  // namespace mirkit
