#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "mirkit/errors.h"
#include "mirkit/io.h"
#include "mirkit/report.h"
#include "support/oracles.h"

using namespace mirkit;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() /
           ("mirkit_report_test_" + tag + "_" +
            std::to_string(std::random_device{}()));
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

Corpus sample_corpus() {
  std::mt19937 rng(161803);
  return testsupport::random_corpus(rng, 60, 0.1);
}

ReportOptions options_for(const fs::path& out,
                          std::vector<std::string> analyses) {
  ReportOptions options;
  options.input_path = "input.csv";
  options.out_dir = out;
  options.analyses = std::move(analyses);
  return options;
}

std::set<std::string> files_in(const fs::path& dir) {
  std::set<std::string> names;
  for (const auto& entry : fs::directory_iterator(dir)) {
    names.insert(entry.path().filename().string());
  }
  return names;
}

}  // namespace

TEST_CASE("report: analyses=all writes the full artifact set") {
  TempDir tmp("all");
  const auto manifest =
      run_report(sample_corpus(), options_for(tmp.path, {"all"}));

  const std::set<std::string> expected = {
      "summary.csv",        "summary.json",
      "genre_counts.csv",   "genre_counts.svg",
      "trends.csv",         "trends.svg",
      "energy_danceability.csv", "energy_danceability.svg",
      "correlation_matrix.csv",  "correlation_heatmap.svg",
      "top_words.csv",      "top_words.svg",
      "cooc_adjacency.csv", "cooc_heatmap.svg",
      "cooc_edges.csv",     "cooc_centralities.csv",
      "mood_valence.csv",   "mood_valence.svg",
  };
  const std::set<std::string> listed(manifest.outputs.begin(),
                                     manifest.outputs.end());
  CHECK(listed == expected);

  auto on_disk = files_in(tmp.path);
  REQUIRE(on_disk.count("manifest.json") == 1);
  on_disk.erase("manifest.json");
  CHECK(on_disk == expected);

  CHECK(manifest.command == "report");
  CHECK(manifest.parameters.at("analyses") ==
        "stats,trends,corr,tokens,cooc,mood");
}

TEST_CASE("report: analyses=corr writes exactly the matrix and heatmap") {
  TempDir tmp("corr");
  const auto manifest =
      run_report(sample_corpus(), options_for(tmp.path, {"corr"}));

  const std::set<std::string> expected = {"correlation_matrix.csv",
                                          "correlation_heatmap.svg"};
  CHECK(std::set<std::string>(manifest.outputs.begin(),
                              manifest.outputs.end()) == expected);
  auto on_disk = files_in(tmp.path);
  on_disk.erase("manifest.json");
  CHECK(on_disk == expected);
}

TEST_CASE("report: repeated runs are byte-identical") {
  const auto corpus = sample_corpus();
  TempDir a("det_a");
  TempDir b("det_b");
  run_report(corpus, options_for(a.path, {"all"}));
  run_report(corpus, options_for(b.path, {"all"}));

  const auto names = files_in(a.path);
  REQUIRE(names == files_in(b.path));
  for (const auto& name : names) {
    if (name == "manifest.json") continue;  // input path may differ by run
    const auto left = read_text_file((a.path / name).string());
    const auto right = read_text_file((b.path / name).string());
    INFO("file: " << name);
    REQUIRE(left == right);
  }
}

TEST_CASE("report: existing output directory requires force") {
  TempDir tmp("force");
  fs::create_directories(tmp.path);
  CHECK_THROWS_AS(run_report(sample_corpus(), options_for(tmp.path, {"stats"})),
                  IoError);

  auto options = options_for(tmp.path, {"stats"});
  options.force = true;
  const auto manifest = run_report(sample_corpus(), options);
  CHECK_FALSE(manifest.outputs.empty());
}

TEST_CASE("report: option validation") {
  TempDir tmp("validate");
  CHECK_THROWS_AS(run_report(Corpus{}, options_for(tmp.path, {"stats"})),
                  DataError);
  CHECK_THROWS_AS(
      run_report(sample_corpus(), options_for(tmp.path, {"sentiment"})),
      UsageError);
  CHECK_THROWS_AS(run_report(sample_corpus(), options_for(tmp.path, {})),
                  UsageError);
  auto options = options_for(tmp.path, {"tokens"});
  options.top_words = 0;
  CHECK_THROWS_AS(run_report(sample_corpus(), options), UsageError);
}

TEST_CASE("report: duplicate and unordered analysis lists normalize") {
  TempDir tmp("norm");
  const auto manifest = run_report(
      sample_corpus(), options_for(tmp.path, {"corr", "stats", "corr"}));
  CHECK(manifest.parameters.at("analyses") == "stats,corr");
}

TEST_CASE("report: manifest json lists outputs and version") {
  TempDir tmp("json");
  const auto manifest =
      run_report(sample_corpus(), options_for(tmp.path, {"mood"}));
  const auto json = manifest.to_json();
  CHECK(json.find("\"mood_valence.csv\"") != std::string::npos);
  CHECK(json.find("\"tool_version\"") != std::string::npos);
  const auto disk = read_text_file((tmp.path / "manifest.json").string());
  CHECK(disk == json);
}

TEST_CASE("report: full vocabulary export is opt-in") {
  TempDir tmp("vocab");
  auto options = options_for(tmp.path, {"tokens"});
  options.full_vocab = true;
  const auto manifest = run_report(sample_corpus(), options);
  CHECK(files_in(tmp.path).count("vocabulary.csv") == 1);
  CHECK(std::find(manifest.outputs.begin(), manifest.outputs.end(),
                  "vocabulary.csv") != manifest.outputs.end());

  TempDir tmp2("novocab");
  run_report(sample_corpus(), options_for(tmp2.path, {"tokens"}));
  CHECK(files_in(tmp2.path).count("vocabulary.csv") == 0);
}

TEST_CASE("report: mood feature selection names the artifacts") {
  TempDir tmp("feat");
  auto options = options_for(tmp.path, {"mood"});
  options.mood_feature = Feature::kEnergy;
  const auto manifest = run_report(sample_corpus(), options);
  CHECK(std::find(manifest.outputs.begin(), manifest.outputs.end(),
                  "mood_energy.csv") != manifest.outputs.end());
  CHECK(files_in(tmp.path).count("mood_energy.svg") == 1);
}

TEST_CASE("report: summary csv carries one row per feature") {
  TempDir tmp("summary");
  run_report(sample_corpus(), options_for(tmp.path, {"stats"}));
  const auto csv = read_text_file((tmp.path / "summary.csv").string());
  std::istringstream stream(csv);
  std::string line;
  std::getline(stream, line);
  CHECK(line == "feature,mean,std,min,max,n_valid,n_missing");
  size_t rows = 0;
  while (std::getline(stream, line)) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == kFeatureCount);
}

TEST_CASE("report: analysis failures carry the analysis name") {
  // A corpus whose lyrics are all empty: tokens analysis has no words to
  // rank, which must surface as a DataError mentioning the analysis.
  Corpus corpus;
  for (int i = 0; i < 3; ++i) {
    corpus.songs.push_back(
        testsupport::make_song("s" + std::to_string(i), "Pop", 2015, ""));
  }
  TempDir tmp("fail");
  try {
    run_report(corpus, options_for(tmp.path, {"cooc"}));
    FAIL("expected DataError");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("cooc") != std::string::npos);
  }
}
