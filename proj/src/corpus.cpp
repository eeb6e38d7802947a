#include "mirkit/corpus.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "json.hpp"
#include "mirkit/csv.h"
#include "mirkit/errors.h"

namespace mirkit {

namespace {

constexpr std::array<std::string_view, kFeatureCount> kFeatureNames = {
    "energy",       "danceability", "loudness", "liveness",
    "valence",      "acousticness", "speechiness", "popularity",
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

bool is_missing_token(std::string_view cell) {
  if (cell.empty()) return true;
  if (cell.size() != 3) return false;
  return (cell[0] == 'n' || cell[0] == 'N') && cell[1] == '/' &&
         (cell[2] == 'a' || cell[2] == 'A');
}

std::optional<double> parse_number(std::string_view cell) {
  double value = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

// Shortest representation that round-trips through from_chars.
std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

}  // namespace

std::string_view feature_name(Feature f) {
  return kFeatureNames[static_cast<size_t>(f)];
}

std::optional<Feature> feature_from_name(std::string_view name) {
  for (size_t i = 0; i < kFeatureCount; ++i) {
    if (kFeatureNames[i] == name) return kAllFeatures[i];
  }
  return std::nullopt;
}

FeatureRange feature_range(Feature f) {
  if (f == Feature::kLoudness) return {-60.0, 0.0};
  return {0.0, 100.0};
}

const std::vector<std::string>& ColumnMap::logical_fields() {
  static const std::vector<std::string> fields = [] {
    std::vector<std::string> v = {"title", "artist", "genre", "year"};
    for (const auto f : kAllFeatures) v.emplace_back(feature_name(f));
    v.emplace_back("lyrics");
    return v;
  }();
  return fields;
}

void ColumnMap::set(std::string_view logical, std::string_view header) {
  const auto& fields = logical_fields();
  if (std::find(fields.begin(), fields.end(), logical) == fields.end()) {
    throw UsageError(fmt::format("unknown logical field '{}'", logical));
  }
  entries_[std::string(logical)] = std::string(header);
}

void ColumnMap::add_assignment(std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw UsageError(
        fmt::format("bad column mapping '{}', expected logical=header",
                    assignment));
  }
  set(trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

void ColumnMap::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot open column map file '{}'", path));
  std::string line;
  while (std::getline(in, line)) {
    const auto stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    add_assignment(stripped);
  }
}

const std::string& ColumnMap::header_for(std::string_view logical) const {
  const auto it = entries_.find(logical);
  if (it != entries_.end()) return it->second;
  const auto& fields = logical_fields();
  const auto fit = std::find(fields.begin(), fields.end(), logical);
  if (fit == fields.end())
    throw UsageError(fmt::format("unknown logical field '{}'", logical));
  return *fit;
}

bool ColumnMap::has_explicit(std::string_view logical) const {
  return entries_.find(logical) != entries_.end();
}

std::string IngestReport::to_json() const {
  nlohmann::ordered_json j;
  j["rows_read"] = rows_read;
  j["rows_accepted"] = rows_accepted;
  j["rows_rejected"] = rows_rejected;
  auto rej = nlohmann::ordered_json::array();
  for (const auto& [row, reason] : rejections) {
    rej.push_back({{"row", row}, {"reason", reason}});
  }
  j["rejections"] = std::move(rej);
  nlohmann::ordered_json cells;
  for (const auto f : kAllFeatures) {
    const std::string name(feature_name(f));
    const auto it = missing_cells.find(name);
    cells[name] = it == missing_cells.end() ? 0 : it->second;
  }
  j["missing_cells"] = std::move(cells);
  return j.dump(2);
}

std::optional<int> extract_year(std::string_view cell) {
  const auto trimmed = trim(cell);
  if (trimmed.empty()) return std::nullopt;

  const bool all_digits =
      std::all_of(trimmed.begin(), trimmed.end(), [](unsigned char c) {
        return std::isdigit(c);
      });
  if (all_digits && trimmed.size() == 4) {
    int value = 0;
    std::from_chars(trimmed.data(), trimmed.data() + 4, value);
    if (value >= 1000) return value;
    return std::nullopt;
  }

  // Date-style cell: exactly one distinct maximal 4-digit run in range.
  std::optional<int> candidate;
  size_t i = 0;
  while (i < trimmed.size()) {
    if (!std::isdigit(static_cast<unsigned char>(trimmed[i]))) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < trimmed.size() &&
           std::isdigit(static_cast<unsigned char>(trimmed[j])))
      ++j;
    if (j - i == 4) {
      int value = 0;
      std::from_chars(trimmed.data() + i, trimmed.data() + j, value);
      if (value >= 1900 && value <= 2099) {
        if (candidate && *candidate != value) return std::nullopt;  // ambiguous
        candidate = value;
      }
    }
    i = j;
  }
  return candidate;
}

IngestResult parse_corpus(std::string_view csv_document,
                          const ColumnMap& columns,
                          std::string source_name) {
  const csv::Table table = csv::parse(csv_document);

  // Resolve every logical field to a column index up front.
  auto column_index = [&](std::string_view logical) -> std::optional<size_t> {
    const std::string& header = columns.header_for(logical);
    for (size_t i = 0; i < table.header.size(); ++i) {
      if (trim(table.header[i]) == header) return i;
    }
    return std::nullopt;
  };

  std::map<std::string, size_t, std::less<>> index;
  for (const auto& logical : ColumnMap::logical_fields()) {
    const auto idx = column_index(logical);
    if (!idx) {
      // Lyrics may be absent entirely unless explicitly mapped.
      if (logical == "lyrics" && !columns.has_explicit("lyrics")) continue;
      throw IngestError(fmt::format(
          "column map references nonexistent header '{}' (for field '{}')",
          columns.header_for(logical), logical));
    }
    index[logical] = *idx;
  }
  const bool has_lyrics = index.contains("lyrics");

  IngestResult result;
  result.corpus.source_name = std::move(source_name);
  result.corpus.songs.reserve(table.rows.size());
  for (const auto f : kAllFeatures) {
    result.report.missing_cells[std::string(feature_name(f))] = 0;
  }

  for (size_t row_i = 0; row_i < table.rows.size(); ++row_i) {
    const auto& row = table.rows[row_i];
    const size_t row_number = row_i + 1;
    ++result.report.rows_read;

    auto reject = [&](std::string reason) {
      ++result.report.rows_rejected;
      result.report.rejections.emplace_back(row_number, std::move(reason));
    };

    if (row.size() != table.header.size()) {
      reject(fmt::format("expected {} fields, found {}", table.header.size(),
                         row.size()));
      continue;
    }

    SongRecord record;
    record.title = row[index.at("title")];
    record.artist = row[index.at("artist")];
    record.genre = std::string(trim(row[index.at("genre")]));
    if (record.genre.empty()) {
      reject("empty genre");
      continue;
    }

    const auto year = extract_year(row[index.at("year")]);
    if (!year) {
      reject(fmt::format("malformed year '{}'",
                         std::string(trim(row[index.at("year")]))));
      continue;
    }
    record.year = *year;

    bool rejected = false;
    std::vector<std::string_view> missing;
    for (const auto f : kAllFeatures) {
      const std::string_view name = feature_name(f);
      const auto cell = trim(row[index.find(name)->second]);
      if (is_missing_token(cell)) {
        missing.push_back(name);
        continue;
      }
      const auto value = parse_number(cell);
      if (!value) {
        reject(fmt::format("{}: '{}' is not a number", name,
                           std::string(cell)));
        rejected = true;
        break;
      }
      const auto range = feature_range(f);
      if (*value < range.lo || *value > range.hi) {
        reject(fmt::format("{}: {} outside [{}, {}]", name, *value, range.lo,
                           range.hi));
        rejected = true;
        break;
      }
      record.features[f] = *value;
    }
    if (rejected) continue;

    if (has_lyrics) record.lyrics = row[index.at("lyrics")];

    record.id = static_cast<int>(result.corpus.songs.size());
    for (const auto name : missing)
      ++result.report.missing_cells[std::string(name)];
    result.corpus.songs.push_back(std::move(record));
    ++result.report.rows_accepted;
  }

  return result;
}

std::string write_corpus_csv(const Corpus& corpus) {
  std::string out;
  out += csv::join_row(ColumnMap::logical_fields());
  out += '\n';
  for (const auto& song : corpus.songs) {
    std::vector<std::string> fields;
    fields.reserve(4 + kFeatureCount + 1);
    fields.push_back(song.title);
    fields.push_back(song.artist);
    fields.push_back(song.genre);
    fields.push_back(std::to_string(song.year));
    for (const auto f : kAllFeatures) {
      const auto& value = song.features[f];
      fields.push_back(value ? format_double(*value) : std::string());
    }
    fields.push_back(song.lyrics);
    out += csv::join_row(fields);
    out += '\n';
  }
  return out;
}

}  // namespace mirkit
