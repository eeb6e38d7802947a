#include "mirkit/svg.h"

#include <algorithm>
#include <array>
#include <cmath>

#include <fmt/format.h>

#include "mirkit/errors.h"

namespace mirkit {

namespace {

// Grayscale plus one accent.
constexpr std::string_view kAccent = "#1f4e79";
constexpr std::string_view kInk = "#1a1a1a";
constexpr std::string_view kMuted = "#6b6b6b";
constexpr std::string_view kGrid = "#cccccc";
constexpr std::string_view kFont = "sans-serif";

// Series styling cycles through the accent and two grays.
constexpr std::array<std::string_view, 3> kSeriesColors = {"#1f4e79",
                                                           "#4d4d4d",
                                                           "#9a9a9a"};

std::string esc(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c; break;
    }
  }
  return out;
}

std::string num(double v) {
  return fmt::format("{:.2f}", v);
}

std::string fixed(double v, int decimals) {
  return fmt::format("{:.{}f}", v, decimals);
}

// Rounds a raw tick step to 1/2/2.5/5 times a power of ten.
double nice_step(double range, int target_ticks) {
  if (range <= 0.0) return 1.0;
  const double raw = range / target_ticks;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double norm = raw / mag;
  double step;
  if (norm <= 1.0) step = 1.0;
  else if (norm <= 2.0) step = 2.0;
  else if (norm <= 2.5) step = 2.5;
  else if (norm <= 5.0) step = 5.0;
  else step = 10.0;
  return step * mag;
}

std::vector<double> ticks_for(double lo, double hi, int target = 5) {
  const double step = nice_step(hi - lo, target);
  std::vector<double> ticks;
  double t = std::ceil(lo / step) * step;
  for (; t <= hi + step * 1e-9; t += step) {
    ticks.push_back(std::abs(t) < step * 1e-9 ? 0.0 : t);
  }
  return ticks;
}

std::string tick_label(double v) {
  if (std::abs(v - std::round(v)) < 1e-9) return fmt::format("{:.0f}", v);
  return fmt::format("{:g}", v);
}

struct Frame {
  int width;
  int height;
  double left, right, top, bottom;  // plot margins
  double plot_w() const { return width - left - right; }
  double plot_h() const { return height - top - bottom; }
};

void open_svg(std::string& s, const FigureSpec& spec) {
  s += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" "
      "height=\"{1}\" viewBox=\"0 0 {0} {1}\">\n",
      spec.width_px, spec.height_px);
  s += fmt::format(
      "<style>\n"
      "text {{ font-family: {}; fill: {}; }}\n"
      ".title {{ font-size: 16px; font-weight: bold; }}\n"
      ".axis {{ font-size: 12px; }}\n"
      ".label {{ font-size: 12px; fill: {}; }}\n"
      ".cell {{ font-size: 11px; }}\n"
      ".anno {{ font-size: 11px; }}\n"
      "</style>\n",
      kFont, kInk, kMuted);
  s += fmt::format(
      "<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"#ffffff\"/>\n",
      spec.width_px, spec.height_px);
  if (!spec.title.empty()) {
    s += fmt::format(
        "<text class=\"title\" x=\"{}\" y=\"24\" text-anchor=\"middle\">{}"
        "</text>\n",
        spec.width_px / 2, esc(spec.title));
  }
}

void close_svg(std::string& s) { s += "</svg>\n"; }

void validate_spec(const FigureSpec& spec) {
  if (spec.width_px < 100 || spec.height_px < 100) {
    throw UsageError(fmt::format("figure size {}x{} below minimum 100x100",
                                 spec.width_px, spec.height_px));
  }
}

// Estimated pixel width of a 12px label, for margin sizing.
double label_width(std::string_view label) {
  return 8.0 + 6.8 * static_cast<double>(label.size());
}

std::string render_hbar(const FigureSpec& spec, const HBarData& data) {
  if (data.bars.empty()) throw DataError("hbar: empty data");

  double max_label = 0.0;
  double lo = 0.0, hi = 0.0;
  for (const auto& bar : data.bars) {
    max_label = std::max(max_label, label_width(bar.label));
    lo = std::min(lo, bar.value);
    hi = std::max(hi, bar.value);
  }
  if (hi == lo) hi = lo + 1.0;

  Frame f{spec.width_px, spec.height_px,
          std::min(max_label, spec.width_px * 0.45), 70.0,
          spec.title.empty() ? 20.0 : 44.0, 40.0};

  auto x_of = [&](double v) {
    return f.left + (v - lo) / (hi - lo) * f.plot_w();
  };

  std::string s;
  open_svg(s, spec);

  // Vertical gridlines at value ticks.
  const auto ticks = ticks_for(lo, hi);
  for (const double t : ticks) {
    s += fmt::format(
        "<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"{3}\" "
        "stroke-width=\"1\" stroke-dasharray=\"3,3\"/>\n",
        num(x_of(t)), num(f.top), num(f.top + f.plot_h()), kGrid);
    s += fmt::format(
        "<text class=\"axis\" x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}"
        "</text>\n",
        num(x_of(t)), num(f.top + f.plot_h() + 16), tick_label(t));
  }

  const size_t n = data.bars.size();
  const double slot = f.plot_h() / static_cast<double>(n);
  const double bar_h = slot * 0.7;
  for (size_t i = 0; i < n; ++i) {
    const auto& bar = data.bars[i];
    const double y = f.top + slot * static_cast<double>(i) + (slot - bar_h) / 2;
    const double x0 = x_of(std::min(0.0, bar.value));
    const double x1 = x_of(std::max(0.0, bar.value));
    s += fmt::format(
        "<rect class=\"bar\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" "
        "fill=\"{}\"/>\n",
        num(x0), num(y), num(std::max(x1 - x0, 0.5)), num(bar_h), kAccent);
    s += fmt::format(
        "<text class=\"label\" x=\"{}\" y=\"{}\" text-anchor=\"end\">{}"
        "</text>\n",
        num(f.left - 8), num(y + bar_h / 2 + 4), esc(bar.label));
    if (spec.annotate) {
      // Value annotation at the end of the bar.
      s += fmt::format(
          "<text class=\"anno\" x=\"{}\" y=\"{}\">{}</text>\n",
          num(x1 + 6), num(y + bar_h / 2 + 4), fixed(bar.value, data.decimals));
    }
  }

  // Axis baseline.
  s += fmt::format(
      "<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"{3}\" "
      "stroke-width=\"1.5\"/>\n",
      num(x_of(std::clamp(0.0, lo, hi))), num(f.top),
      num(f.top + f.plot_h()), kInk);
  if (!data.value_label.empty()) {
    s += fmt::format(
        "<text class=\"axis\" x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}"
        "</text>\n",
        num(f.left + f.plot_w() / 2), num(f.top + f.plot_h() + 34),
        esc(data.value_label));
  }

  close_svg(s);
  return s;
}

struct Extent {
  double xlo, xhi, ylo, yhi;
};

Extent extent_of(const std::vector<LineSeries>& series) {
  Extent e{0, 0, 0, 0};
  bool first = true;
  for (const auto& s : series) {
    for (const auto& p : s.points) {
      if (first) {
        e = {p.x, p.x, p.y, p.y};
        first = false;
      } else {
        e.xlo = std::min(e.xlo, p.x);
        e.xhi = std::max(e.xhi, p.x);
        e.ylo = std::min(e.ylo, p.y);
        e.yhi = std::max(e.yhi, p.y);
      }
    }
  }
  if (e.xlo == e.xhi) {
    e.xlo -= 1.0;
    e.xhi += 1.0;
  }
  // Anchor non-negative data at zero for comparability.
  if (e.ylo > 0.0) e.ylo = 0.0;
  if (e.ylo == e.yhi) e.yhi = e.ylo + 1.0;
  return e;
}

void draw_axes(std::string& s, const Frame& f, const Extent& e,
               std::string_view x_label, std::string_view y_label) {
  auto x_of = [&](double v) {
    return f.left + (v - e.xlo) / (e.xhi - e.xlo) * f.plot_w();
  };
  auto y_of = [&](double v) {
    return f.top + (1.0 - (v - e.ylo) / (e.yhi - e.ylo)) * f.plot_h();
  };

  // Dashed horizontal gridlines with y tick labels.
  for (const double t : ticks_for(e.ylo, e.yhi)) {
    s += fmt::format(
        "<line class=\"grid\" x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" "
        "stroke=\"{3}\" stroke-width=\"1\" stroke-dasharray=\"4,4\"/>\n",
        num(f.left), num(y_of(t)), num(f.left + f.plot_w()), kGrid);
    s += fmt::format(
        "<text class=\"axis\" x=\"{}\" y=\"{}\" text-anchor=\"end\">{}"
        "</text>\n",
        num(f.left - 8), num(y_of(t) + 4), tick_label(t));
  }
  // X ticks.
  for (const double t : ticks_for(e.xlo, e.xhi, 8)) {
    s += fmt::format(
        "<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"{3}\" "
        "stroke-width=\"1\"/>\n",
        num(x_of(t)), num(f.top + f.plot_h()), num(f.top + f.plot_h() + 5),
        kInk);
    s += fmt::format(
        "<text class=\"axis\" x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}"
        "</text>\n",
        num(x_of(t)), num(f.top + f.plot_h() + 20), tick_label(t));
  }
  // Frame lines.
  s += fmt::format(
      "<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"{3}\" "
      "stroke-width=\"1.5\"/>\n",
      num(f.left), num(f.top), num(f.top + f.plot_h()), kInk);
  s += fmt::format(
      "<line x1=\"{0}\" y1=\"{2}\" x2=\"{1}\" y2=\"{2}\" stroke=\"{3}\" "
      "stroke-width=\"1.5\"/>\n",
      num(f.left), num(f.left + f.plot_w()), num(f.top + f.plot_h()), kInk);

  if (!x_label.empty()) {
    s += fmt::format(
        "<text class=\"axis\" x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}"
        "</text>\n",
        num(f.left + f.plot_w() / 2), num(f.top + f.plot_h() + 40),
        esc(x_label));
  }
  if (!y_label.empty()) {
    s += fmt::format(
        "<text class=\"axis\" x=\"{0}\" y=\"{1}\" text-anchor=\"middle\" "
        "transform=\"rotate(-90 {0} {1})\">{2}</text>\n",
        num(f.left - 44), num(f.top + f.plot_h() / 2), esc(y_label));
  }
}

std::string render_line(const FigureSpec& spec, const LineData& data) {
  size_t total_points = 0;
  for (const auto& series : data.series) total_points += series.points.size();
  if (data.series.empty() || total_points == 0)
    throw DataError("line: empty data");

  Frame f{spec.width_px, spec.height_px, 64.0, 24.0,
          spec.title.empty() ? 24.0 : 48.0, 56.0};
  const Extent e = extent_of(data.series);

  auto x_of = [&](double v) {
    return f.left + (v - e.xlo) / (e.xhi - e.xlo) * f.plot_w();
  };
  auto y_of = [&](double v) {
    return f.top + (1.0 - (v - e.ylo) / (e.yhi - e.ylo)) * f.plot_h();
  };

  std::string s;
  open_svg(s, spec);
  draw_axes(s, f, e, data.x_label, data.y_label);

  for (size_t si = 0; si < data.series.size(); ++si) {
    const auto& series = data.series[si];
    const auto color = kSeriesColors[si % kSeriesColors.size()];
    if (series.points.size() > 1) {
      std::string path = "M";
      for (const auto& p : series.points) {
        path += fmt::format(" {} {}", num(x_of(p.x)), num(y_of(p.y)));
      }
      s += fmt::format(
          "<path d=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\"/>\n",
          path, color);
    }
    // Point markers.
    for (const auto& p : series.points) {
      s += fmt::format(
          "<circle class=\"marker\" cx=\"{}\" cy=\"{}\" r=\"3.5\" "
          "fill=\"{}\"/>\n",
          num(x_of(p.x)), num(y_of(p.y)), color);
    }
  }

  // Legend, top-right inside the plot.
  if (data.series.size() > 1 || !data.series.front().name.empty()) {
    double ly = f.top + 14;
    for (size_t si = 0; si < data.series.size(); ++si) {
      const auto color = kSeriesColors[si % kSeriesColors.size()];
      const double lx = f.left + f.plot_w() - 150;
      s += fmt::format(
          "<circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"{}\"/>\n", num(lx),
          num(ly - 4), color);
      s += fmt::format("<text class=\"axis\" x=\"{}\" y=\"{}\">{}</text>\n",
                       num(lx + 10), num(ly), esc(data.series[si].name));
      ly += 18;
    }
  }

  close_svg(s);
  return s;
}

std::string render_scatter_fit(const FigureSpec& spec,
                               const ScatterFitData& data) {
  if (data.points.empty()) throw DataError("scatter_fit: empty data");

  std::vector<LineSeries> wrap(1);
  wrap[0].points = data.points;
  Extent e = extent_of(wrap);

  Frame f{spec.width_px, spec.height_px, 64.0, 24.0,
          spec.title.empty() ? 24.0 : 48.0, 56.0};
  auto x_of = [&](double v) {
    return f.left + (v - e.xlo) / (e.xhi - e.xlo) * f.plot_w();
  };
  auto y_of = [&](double v) {
    return f.top + (1.0 - (v - e.ylo) / (e.yhi - e.ylo)) * f.plot_h();
  };

  std::string s;
  open_svg(s, spec);
  draw_axes(s, f, e, data.x_label, data.y_label);

  for (const auto& p : data.points) {
    s += fmt::format(
        "<circle class=\"pt\" cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"{}\" "
        "fill-opacity=\"0.55\"/>\n",
        num(x_of(p.x)), num(y_of(p.y)), kAccent);
  }

  // Dashed regression line, clipped to the y extent.
  double fx0 = e.xlo, fx1 = e.xhi;
  double fy0 = data.fit.slope * fx0 + data.fit.intercept;
  double fy1 = data.fit.slope * fx1 + data.fit.intercept;
  auto clip = [&](double& x, double& y) {
    if (data.fit.slope == 0.0) return;
    if (y < e.ylo) {
      x = (e.ylo - data.fit.intercept) / data.fit.slope;
      y = e.ylo;
    } else if (y > e.yhi) {
      x = (e.yhi - data.fit.intercept) / data.fit.slope;
      y = e.yhi;
    }
  };
  clip(fx0, fy0);
  clip(fx1, fy1);
  s += fmt::format(
      "<line class=\"fit\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" "
      "stroke=\"{}\" stroke-width=\"2\" stroke-dasharray=\"6,4\"/>\n",
      num(x_of(fx0)), num(y_of(fy0)), num(x_of(fx1)), num(y_of(fy1)), kInk);

  // Correlation readout, two decimals.
  s += fmt::format(
      "<text class=\"axis\" x=\"{}\" y=\"{}\">r = {:.2f}</text>\n",
      num(f.left + 10), num(f.top + 16), data.fit.r);

  close_svg(s);
  return s;
}

std::string ramp_color(double t) {
  // White to accent (31, 78, 121).
  const auto lerp = [t](double a, double b) {
    return static_cast<int>(std::lround(a + (b - a) * t));
  };
  return fmt::format("#{:02x}{:02x}{:02x}", lerp(255, 31), lerp(255, 78),
                     lerp(255, 121));
}

std::string render_heatmap(const FigureSpec& spec, const HeatmapData& data) {
  const size_t n = data.labels.size();
  if (n == 0) throw DataError("heatmap: empty data");
  if (data.cells.size() != n)
    throw DataError("heatmap: cell matrix does not match labels");
  for (const auto& row : data.cells) {
    if (row.size() != n)
      throw DataError("heatmap: cell matrix does not match labels");
  }

  double lo = 0.0, hi = 0.0;
  bool first = true;
  for (const auto& row : data.cells) {
    for (const auto& cell : row) {
      if (!cell) continue;
      if (first) {
        lo = hi = *cell;
        first = false;
      } else {
        lo = std::min(lo, *cell);
        hi = std::max(hi, *cell);
      }
    }
  }

  double max_label = 0.0;
  for (const auto& label : data.labels)
    max_label = std::max(max_label, label_width(label));

  Frame f{spec.width_px, spec.height_px,
          std::min(max_label + 8, spec.width_px * 0.35),
          24.0,
          (spec.title.empty() ? 16.0 : 40.0) + std::min(max_label, 90.0),
          24.0};
  const double cell =
      std::min(f.plot_w() / static_cast<double>(n),
               f.plot_h() / static_cast<double>(n));
  const double gx = f.left;
  const double gy = f.top;

  std::string s;
  open_svg(s, spec);

  for (size_t i = 0; i < n; ++i) {
    // Row label (left) and column label (top, slanted).
    s += fmt::format(
        "<text class=\"label\" x=\"{}\" y=\"{}\" text-anchor=\"end\">{}"
        "</text>\n",
        num(gx - 8), num(gy + cell * (i + 0.5) + 4), esc(data.labels[i]));
    const double cx = gx + cell * (i + 0.5);
    s += fmt::format(
        "<text class=\"label\" x=\"{0}\" y=\"{1}\" text-anchor=\"start\" "
        "transform=\"rotate(-55 {0} {1})\">{2}</text>\n",
        num(cx), num(gy - 6), esc(data.labels[i]));
  }

  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      const double x = gx + cell * static_cast<double>(j);
      const double y = gy + cell * static_cast<double>(i);
      const auto& value = data.cells[i][j];
      double t = 0.0;
      std::string fill = "#f0f0f0";
      if (value) {
        t = hi > lo ? (*value - lo) / (hi - lo) : 0.5;
        fill = ramp_color(t);
      }
      s += fmt::format(
          "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\" "
          "stroke=\"#ffffff\" stroke-width=\"1\"/>\n",
          num(x), num(y), num(cell), num(cell), fill);
      if (value && spec.annotate) {
        s += fmt::format(
            "<text class=\"cell\" x=\"{}\" y=\"{}\" text-anchor=\"middle\" "
            "fill=\"{}\">{}</text>\n",
            num(x + cell / 2), num(y + cell / 2 + 4),
            t > 0.55 ? "#ffffff" : std::string(kInk),
            fixed(*value, data.decimals));
      }
    }
  }

  close_svg(s);
  return s;
}

}  // namespace

std::string_view figure_kind_name(FigureKind kind) {
  switch (kind) {
    case FigureKind::kHBar: return "hbar";
    case FigureKind::kLine: return "line";
    case FigureKind::kScatterFit: return "scatter_fit";
    case FigureKind::kHeatmap: return "heatmap";
  }
  return "?";
}

std::optional<FigureKind> figure_kind_from_name(std::string_view name) {
  if (name == "hbar") return FigureKind::kHBar;
  if (name == "line") return FigureKind::kLine;
  if (name == "scatter_fit") return FigureKind::kScatterFit;
  if (name == "heatmap") return FigureKind::kHeatmap;
  return std::nullopt;
}

std::string render_figure(const FigureSpec& spec, const FigureData& data) {
  validate_spec(spec);
  switch (spec.kind) {
    case FigureKind::kHBar:
      if (const auto* d = std::get_if<HBarData>(&data))
        return render_hbar(spec, *d);
      break;
    case FigureKind::kLine:
      if (const auto* d = std::get_if<LineData>(&data))
        return render_line(spec, *d);
      break;
    case FigureKind::kScatterFit:
      if (const auto* d = std::get_if<ScatterFitData>(&data))
        return render_scatter_fit(spec, *d);
      break;
    case FigureKind::kHeatmap:
      if (const auto* d = std::get_if<HeatmapData>(&data))
        return render_heatmap(spec, *d);
      break;
  }
  throw DataError(fmt::format("figure data does not match kind '{}'",
                              figure_kind_name(spec.kind)));
}

}  // namespace mirkit
