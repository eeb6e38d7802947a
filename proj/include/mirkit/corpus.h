#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mirkit {

// The eight audio descriptors carried by every song record.
enum class Feature {
  kEnergy,
  kDanceability,
  kLoudness,
  kLiveness,
  kValence,
  kAcousticness,
  kSpeechiness,
  kPopularity,
};

inline constexpr size_t kFeatureCount = 8;

inline constexpr std::array<Feature, kFeatureCount> kAllFeatures = {
    Feature::kEnergy,      Feature::kDanceability, Feature::kLoudness,
    Feature::kLiveness,    Feature::kValence,      Feature::kAcousticness,
    Feature::kSpeechiness, Feature::kPopularity,
};

std::string_view feature_name(Feature f);
std::optional<Feature> feature_from_name(std::string_view name);

// Valid range for a feature value. Loudness is in dBFS, the rest are
// 0-100 scores.
struct FeatureRange {
  double lo;
  double hi;
};
FeatureRange feature_range(Feature f);

// Per-song audio descriptors. A disengaged optional encodes a missing
// cell (empty or "N/A" in the source data).
struct AudioFeatures {
  std::array<std::optional<double>, kFeatureCount> values{};

  std::optional<double>& operator[](Feature f) {
    return values[static_cast<size_t>(f)];
  }
  const std::optional<double>& operator[](Feature f) const {
    return values[static_cast<size_t>(f)];
  }

  bool operator==(const AudioFeatures&) const = default;
};

struct SongRecord {
  int id = 0;  // position in input order, 0-based
  std::string title;
  std::string artist;
  std::string genre;
  int year = 0;
  AudioFeatures features;
  std::string lyrics;

  bool operator==(const SongRecord&) const = default;
};

// An ordered song collection; iteration order equals input file order.
// Immutable after construction, safe for concurrent readers.
struct Corpus {
  std::vector<SongRecord> songs;
  std::string source_name;

  size_t size() const { return songs.size(); }
  bool empty() const { return songs.empty(); }

  bool operator==(const Corpus&) const = default;
};

// Maps logical field names (title, artist, genre, year, the eight feature
// names, lyrics) to header names in the input CSV. Unmapped fields fall
// back to their logical name.
class ColumnMap {
 public:
  static const std::vector<std::string>& logical_fields();

  // Throws UsageError for an unknown logical field name.
  void set(std::string_view logical, std::string_view header);

  // Parses one "logical=header" assignment, as given on the command line.
  void add_assignment(std::string_view assignment);

  // Loads a mapping file: one "logical=header" per line, '#' comments and
  // blank lines ignored. Throws IoError when unreadable.
  void load_file(const std::string& path);

  // Header name for a logical field (explicit or fallback).
  const std::string& header_for(std::string_view logical) const;

  bool has_explicit(std::string_view logical) const;

 private:
  std::map<std::string, std::string, std::less<>> entries_;
};

struct IngestReport {
  size_t rows_read = 0;
  size_t rows_accepted = 0;
  size_t rows_rejected = 0;
  // (1-based data-row number, reason)
  std::vector<std::pair<size_t, std::string>> rejections;
  // feature name -> count of missing cells among accepted rows
  std::map<std::string, size_t> missing_cells;

  std::string to_json() const;
};

struct IngestResult {
  Corpus corpus;
  IngestReport report;
};

// Parses a CSV document into a corpus, applying the missing-value policy
// (empty cell or case-insensitive "N/A" -> missing) and rejecting rows
// whose required fields are unparseable or whose feature values fall
// outside their valid range. Throws IngestError when the header row is
// missing or the column map references a nonexistent header.
IngestResult parse_corpus(std::string_view csv_document,
                          const ColumnMap& columns,
                          std::string source_name = "");

// Release year of a record (validated at ingestion).
inline int year_of(const SongRecord& record) { return record.year; }

// Extracts a release year from a raw cell. A trimmed cell that is exactly
// four digits with value >= 1000 is taken as-is; otherwise the cell must
// contain exactly one distinct maximal 4-digit run in [1900, 2099]
// (covers full dates like "2019-07-04" or "04/07/2019").
std::optional<int> extract_year(std::string_view cell);

// Serializes a corpus with canonical headers (the logical field names);
// re-parsing the output with a default ColumnMap reproduces the corpus.
std::string write_corpus_csv(const Corpus& corpus);

}  // namespace mirkit
