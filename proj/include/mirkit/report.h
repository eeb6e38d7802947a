#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "mirkit/corpus.h"

namespace mirkit {

// One keyword per analysis family; "all" expands to every entry in this
// order, which is also the canonical output order.
inline constexpr std::array<std::string_view, 6> kAnalysisNames = {
    "stats", "trends", "corr", "tokens", "cooc", "mood"};

struct ReportOptions {
  std::string input_path;  // recorded in the manifest
  std::filesystem::path out_dir;
  std::vector<std::string> analyses;  // subset of kAnalysisNames, or "all"
  int top_words = 10;
  Feature mood_feature = Feature::kValence;
  bool force = false;
  bool full_vocab = false;
};

// Record of one report run. Outputs are paths relative to the output
// directory; tool_version is the only environment-sensitive field.
struct RunManifest {
  std::string command;
  std::string input_path;
  std::map<std::string, std::string> parameters;
  std::vector<std::string> outputs;
  std::string tool_version;

  std::string to_json() const;
};

// Runs the requested analyses over an ingested corpus, writing every
// CSV/JSON artifact and SVG figure (with its sidecar data) into
// options.out_dir, then the manifest as manifest.json. Identical corpus
// and options produce byte-identical artifacts. Throws UsageError for an
// unknown analysis name, IoError when the output directory already
// exists without force, and propagates analysis errors with the failing
// analysis named.
RunManifest run_report(const Corpus& corpus, const ReportOptions& options);

}  // namespace mirkit
