#include "mirkit/report.h"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include <fmt/format.h>

#include "json.hpp"
#include "mirkit/cooc.h"
#include "mirkit/csv.h"
#include "mirkit/errors.h"
#include "mirkit/io.h"
#include "mirkit/lexicon.h"
#include "mirkit/mood.h"
#include "mirkit/stats.h"
#include "mirkit/svg.h"
#include "mirkit/version.h"

namespace mirkit {

namespace {

namespace fs = std::filesystem;

std::string f2(double v) { return fmt::format("{:.2f}", v); }

std::string round_trip(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

// Emission context shared by the analysis writers.
struct Emitter {
  const Corpus& corpus;
  const ReportOptions& options;
  RunManifest& manifest;

  void write(const std::string& name, std::string_view content) const {
    write_text_file(options.out_dir / name, content);
    manifest.outputs.push_back(name);
  }
};

FigureSpec figure(FigureKind kind, std::string title) {
  FigureSpec spec;
  spec.kind = kind;
  spec.title = std::move(title);
  return spec;
}

void emit_stats(const Emitter& e) {
  std::string csv = "feature,mean,std,min,max,n_valid,n_missing\n";
  nlohmann::ordered_json summaries = nlohmann::ordered_json::array();
  for (const auto f : kAllFeatures) {
    const auto s = summarize(e.corpus, f);
    csv += fmt::format("{},{},{},{},{},{},{}\n", feature_name(f), f2(s.mean),
                       f2(s.std_dev), f2(s.min), f2(s.max), s.n_valid,
                       s.n_missing);
    summaries.push_back({{"feature", std::string(feature_name(f))},
                         {"mean", s.mean},
                         {"std", s.std_dev},
                         {"min", s.min},
                         {"max", s.max},
                         {"n_valid", s.n_valid},
                         {"n_missing", s.n_missing},
                         {"degenerate", s.degenerate}});
  }
  e.write("summary.csv", csv);
  e.write("summary.json", summaries.dump(2) + "\n");

  // Genre distribution, most frequent first.
  std::map<std::string, size_t> counts;
  for (const auto& song : e.corpus.songs) ++counts[song.genre];
  std::vector<std::pair<std::string, size_t>> ranked(counts.begin(),
                                                     counts.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });

  std::string genre_csv = "genre,count\n";
  HBarData bars;
  bars.value_label = "songs";
  for (const auto& [genre, count] : ranked) {
    genre_csv += fmt::format("{},{}\n", csv::escape_field(genre), count);
    bars.bars.push_back({genre, static_cast<double>(count)});
  }
  e.write("genre_counts.csv", genre_csv);
  e.write("genre_counts.svg",
          render_figure(figure(FigureKind::kHBar, "Songs per genre"), bars));
}

void emit_trends(const Emitter& e) {
  constexpr std::array<Feature, 3> kTrendFeatures = {
      Feature::kEnergy, Feature::kDanceability, Feature::kValence};

  std::map<int, std::array<std::optional<double>, 3>> by_year;
  LineData lines;
  for (size_t i = 0; i < kTrendFeatures.size(); ++i) {
    const auto series = annual_means(e.corpus, kTrendFeatures[i]);
    LineSeries ls;
    ls.name = std::string(feature_name(kTrendFeatures[i]));
    for (const auto& point : series.points) {
      by_year[point.year][i] = point.mean;
      ls.points.push_back({static_cast<double>(point.year), point.mean});
    }
    lines.series.push_back(std::move(ls));
  }
  lines.x_label = "year";
  lines.y_label = "annual mean";

  std::string csv = "year,energy,danceability,valence\n";
  for (const auto& [year, means] : by_year) {
    csv += fmt::format("{},{},{},{}\n", year,
                       means[0] ? f2(*means[0]) : std::string(),
                       means[1] ? f2(*means[1]) : std::string(),
                       means[2] ? f2(*means[2]) : std::string());
  }
  e.write("trends.csv", csv);
  e.write("trends.svg",
          render_figure(figure(FigureKind::kLine, "Annual feature means"),
                        lines));

  // Energy vs danceability with the regression overlay.
  const auto sample =
      pairwise_complete(feature_column(e.corpus, Feature::kEnergy),
                        feature_column(e.corpus, Feature::kDanceability));
  ScatterFitData scatter;
  scatter.fit = linear_fit(sample.x, sample.y);
  for (size_t i = 0; i < sample.x.size(); ++i) {
    scatter.points.push_back({sample.x[i], sample.y[i]});
  }
  scatter.x_label = "energy";
  scatter.y_label = "danceability";

  std::string pair_csv = "energy,danceability\n";
  for (const auto& p : scatter.points) {
    pair_csv += fmt::format("{},{}\n", round_trip(p.x), round_trip(p.y));
  }
  e.write("energy_danceability.csv", pair_csv);
  e.write("energy_danceability.svg",
          render_figure(
              figure(FigureKind::kScatterFit, "Energy vs danceability"),
              scatter));
}

void emit_corr(const Emitter& e) {
  const auto matrix = correlation_matrix(e.corpus);

  std::string csv = "feature";
  for (const auto f : kAllFeatures) csv += fmt::format(",{}", feature_name(f));
  csv += '\n';
  HeatmapData heat;
  heat.decimals = 2;
  for (size_t i = 0; i < kFeatureCount; ++i) {
    heat.labels.emplace_back(feature_name(kAllFeatures[i]));
    csv += feature_name(kAllFeatures[i]);
    std::vector<std::optional<double>> row;
    for (size_t j = 0; j < kFeatureCount; ++j) {
      const auto& r = matrix.r[i][j];
      csv += r ? fmt::format(",{}", f2(*r)) : ",";
      row.push_back(r);
    }
    csv += '\n';
    heat.cells.push_back(std::move(row));
  }
  e.write("correlation_matrix.csv", csv);
  e.write("correlation_heatmap.svg",
          render_figure(
              figure(FigureKind::kHeatmap, "Audio feature correlations"),
              heat));
}

void emit_tokens(const Emitter& e) {
  const auto table = count_corpus(e.corpus);
  const auto ranked = top_n(table, static_cast<size_t>(e.options.top_words));

  std::string csv = "word,count,relative_frequency\n";
  HBarData bars;
  bars.value_label = "occurrences";
  for (const auto& rw : ranked) {
    csv += fmt::format("{},{},{:.6f}\n", rw.word, rw.count,
                       rw.relative_frequency);
    bars.bars.push_back({rw.word, static_cast<double>(rw.count)});
  }
  e.write("top_words.csv", csv);
  e.write("top_words.svg",
          render_figure(figure(FigureKind::kHBar,
                               fmt::format("Top {} words", ranked.size())),
                        bars));

  if (e.options.full_vocab) {
    const auto all = top_n(table, table.vocab_size());
    std::string vocab_csv = "word,count,relative_frequency\n";
    for (const auto& rw : all) {
      vocab_csv += fmt::format("{},{},{:.6f}\n", rw.word, rw.count,
                               rw.relative_frequency);
    }
    e.write("vocabulary.csv", vocab_csv);
  }
}

void emit_cooc(const Emitter& e) {
  const auto table = count_corpus(e.corpus);
  const auto ranked = top_n(table, static_cast<size_t>(e.options.top_words));
  if (ranked.empty()) throw DataError("no tokens in corpus");
  std::vector<std::string> words;
  words.reserve(ranked.size());
  for (const auto& rw : ranked) words.push_back(rw.word);

  const auto net = build_network(e.corpus, words);

  std::string adj_csv = "word";
  for (const auto& word : net.words) adj_csv += fmt::format(",{}", word);
  adj_csv += '\n';
  HeatmapData heat;
  heat.decimals = 0;
  heat.labels = net.words;
  for (size_t i = 0; i < net.words.size(); ++i) {
    adj_csv += net.words[i];
    std::vector<std::optional<double>> row;
    for (size_t j = 0; j < net.words.size(); ++j) {
      adj_csv += fmt::format(",{}", net.adjacency[i][j]);
      row.emplace_back(static_cast<double>(net.adjacency[i][j]));
    }
    adj_csv += '\n';
    heat.cells.push_back(std::move(row));
  }
  e.write("cooc_adjacency.csv", adj_csv);
  e.write("cooc_heatmap.svg",
          render_figure(
              figure(FigureKind::kHeatmap, "Word co-occurrence (songs)"),
              heat));

  std::string edges_csv = "word_a,word_b,count\n";
  for (const auto& edge : export_edges(net)) {
    edges_csv +=
        fmt::format("{},{},{}\n", edge.word_a, edge.word_b, edge.count);
  }
  e.write("cooc_edges.csv", edges_csv);

  std::string cent_csv = "word,count,simple_degree,weighted_degree\n";
  for (const auto& row : centralities(net)) {
    cent_csv += fmt::format("{},{},{},{}\n", row.word,
                            table.counts.at(row.word), row.simple_degree,
                            row.weighted_degree);
  }
  e.write("cooc_centralities.csv", cent_csv);
}

void emit_mood(const Emitter& e) {
  const auto feature = e.options.mood_feature;
  const auto profiles = genre_means(e.corpus, feature);

  std::string csv = "genre,feature,mean,n\n";
  HBarData bars;
  bars.decimals = 2;
  bars.value_label = fmt::format("mean {}", feature_name(feature));
  for (const auto& profile : profiles) {
    csv += fmt::format("{},{},{},{}\n", csv::escape_field(profile.genre),
                       feature_name(feature), f2(profile.mean), profile.n);
    bars.bars.push_back({profile.genre, profile.mean});
  }
  const std::string stem = fmt::format("mood_{}", feature_name(feature));
  e.write(stem + ".csv", csv);
  e.write(stem + ".svg",
          render_figure(figure(FigureKind::kHBar,
                               fmt::format("Mean {} by genre",
                                           feature_name(feature))),
                        bars));
}

std::vector<std::string> normalize_analyses(
    const std::vector<std::string>& requested) {
  std::set<std::string> wanted;
  for (const auto& name : requested) {
    if (name == "all") {
      for (const auto a : kAnalysisNames) wanted.emplace(a);
      continue;
    }
    if (std::find(kAnalysisNames.begin(), kAnalysisNames.end(), name) ==
        kAnalysisNames.end()) {
      throw UsageError(fmt::format("unknown analysis '{}'", name));
    }
    wanted.insert(name);
  }
  if (wanted.empty()) throw UsageError("no analyses requested");
  // Fixed execution order, independent of request order.
  std::vector<std::string> ordered;
  for (const auto a : kAnalysisNames) {
    if (wanted.contains(std::string(a))) ordered.emplace_back(a);
  }
  return ordered;
}

}  // namespace

std::string RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["input_path"] = input_path;
  j["parameters"] = parameters;
  j["outputs"] = outputs;
  j["tool_version"] = tool_version;
  return j.dump(2) + "\n";
}

RunManifest run_report(const Corpus& corpus, const ReportOptions& options) {
  if (corpus.empty()) throw DataError("empty corpus");
  if (options.top_words < 1) throw UsageError("--top-words must be >= 1");
  const auto analyses = normalize_analyses(options.analyses);

  if (fs::exists(options.out_dir) && !options.force) {
    throw IoError(fmt::format(
        "output directory '{}' already exists (use --force to overwrite)",
        options.out_dir.string()));
  }
  std::error_code ec;
  fs::create_directories(options.out_dir, ec);
  if (ec || !fs::is_directory(options.out_dir)) {
    throw IoError(fmt::format("cannot create output directory '{}'",
                              options.out_dir.string()));
  }

  RunManifest manifest;
  manifest.command = "report";
  manifest.input_path = options.input_path;
  manifest.tool_version = fmt::format("{} {}", kToolName, kToolVersion);
  {
    std::string joined;
    for (const auto& a : analyses) {
      if (!joined.empty()) joined += ',';
      joined += a;
    }
    manifest.parameters["analyses"] = joined;
  }
  manifest.parameters["top_words"] = std::to_string(options.top_words);
  manifest.parameters["feature"] =
      std::string(feature_name(options.mood_feature));
  manifest.parameters["force"] = options.force ? "true" : "false";
  manifest.parameters["full_vocab"] = options.full_vocab ? "true" : "false";

  const Emitter emitter{corpus, options, manifest};
  for (const auto& analysis : analyses) {
    try {
      if (analysis == "stats") emit_stats(emitter);
      else if (analysis == "trends") emit_trends(emitter);
      else if (analysis == "corr") emit_corr(emitter);
      else if (analysis == "tokens") emit_tokens(emitter);
      else if (analysis == "cooc") emit_cooc(emitter);
      else if (analysis == "mood") emit_mood(emitter);
    } catch (const IoError& err) {
      throw IoError(fmt::format("{}: {}", analysis, err.what()));
    } catch (const DataError& err) {
      throw DataError(fmt::format("{}: {}", analysis, err.what()));
    }
  }

  write_text_file(options.out_dir / "manifest.json", manifest.to_json());
  return manifest;
}

}  // namespace mirkit
