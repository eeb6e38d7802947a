// Independent reference implementations and fixture builders used by the
// test suites. These deliberately avoid the library's own code paths:
// oracle_pearson is the textbook two-pass formula, oracle_cooc is a
// quadratic double loop over documents, and the corpus builders construct
// records directly.

#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mirkit/corpus.h"

namespace testsupport {

// ----------------------------------------------------------------- numerics

inline double oracle_mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

inline double oracle_sample_std(const std::vector<double>& v) {
  const double m = oracle_mean(v);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

// Textbook Pearson: covariance over (n-1) divided by the two sample
// standard deviations. Assumes n >= 2 and non-constant inputs.
inline double oracle_pearson(const std::vector<double>& x,
                             const std::vector<double>& y) {
  const double mx = oracle_mean(x);
  const double my = oracle_mean(y);
  double cov = 0.0;
  for (size_t i = 0; i < x.size(); ++i) cov += (x[i] - mx) * (y[i] - my);
  cov /= static_cast<double>(x.size() - 1);
  return cov / (oracle_sample_std(x) * oracle_sample_std(y));
}

// --------------------------------------------------------------- tokenizing

// Independent tokenizer: same grammar, different mechanics (index-based
// scanning rather than the library's accumulator loop).
inline std::vector<std::string> oracle_tokenize(std::string_view text) {
  std::vector<std::string> out;
  size_t i = 0;
  const auto is_letter = [](unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  };
  while (i < text.size()) {
    while (i < text.size() && !is_letter(text[i])) ++i;
    size_t j = i;
    while (j < text.size() && is_letter(text[j])) ++j;
    if (j > i) {
      std::string word(text.substr(i, j - i));
      for (char& c : word)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      out.push_back(std::move(word));
    }
    i = j;
  }
  return out;
}

// -------------------------------------------------------------------- cooc

// Number of documents whose token set contains both words.
inline std::uint32_t oracle_cooc_count(
    const std::vector<std::set<std::string>>& doc_sets, const std::string& a,
    const std::string& b) {
  std::uint32_t n = 0;
  for (const auto& doc : doc_sets) {
    if (doc.count(a) != 0 && doc.count(b) != 0) ++n;
  }
  return n;
}

inline std::vector<std::set<std::string>> doc_sets_of(
    const mirkit::Corpus& corpus) {
  std::vector<std::set<std::string>> sets;
  for (const auto& song : corpus.songs) {
    const auto tokens = oracle_tokenize(song.lyrics);
    sets.emplace_back(tokens.begin(), tokens.end());
  }
  return sets;
}

// ---------------------------------------------------------------- fixtures

inline mirkit::SongRecord make_song(std::string title, std::string genre,
                                    int year, std::string lyrics = "") {
  mirkit::SongRecord song;
  song.title = std::move(title);
  song.artist = "artist";
  song.genre = std::move(genre);
  song.year = year;
  song.lyrics = std::move(lyrics);
  for (const auto f : mirkit::kAllFeatures) song.features[f] = 50.0;
  song.features[mirkit::Feature::kLoudness] = -7.0;
  return song;
}

// Random corpus: every feature value drawn uniformly from its range, with
// the given probability of a missing cell; lyrics drawn from a small
// vocabulary so co-occurrence is dense enough to be interesting.
inline mirkit::Corpus random_corpus(std::mt19937& rng, size_t n_songs,
                                    double p_missing = 0.15,
                                    size_t max_words_per_song = 40) {
  static const std::vector<std::string> kVocabulary = {
      "love", "night", "dance", "heart", "fire",  "gold",
      "rain", "city",  "dream", "light", "sound", "wild"};
  static const std::vector<std::string> kGenres = {"Pop", "Rock", "Hip-Hop",
                                                   "R&B", "Indie"};
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> year_dist(1998, 2023);
  std::uniform_int_distribution<size_t> genre_dist(0, kGenres.size() - 1);
  std::uniform_int_distribution<size_t> word_dist(0, kVocabulary.size() - 1);
  std::uniform_int_distribution<size_t> len_dist(0, max_words_per_song);

  mirkit::Corpus corpus;
  corpus.source_name = "synthetic";
  for (size_t i = 0; i < n_songs; ++i) {
    mirkit::SongRecord song;
    song.id = static_cast<int>(i);
    song.title = "Song " + std::to_string(i);
    song.artist = "Artist " + std::to_string(i % 7);
    song.genre = kGenres[genre_dist(rng)];
    song.year = year_dist(rng);
    for (const auto f : mirkit::kAllFeatures) {
      if (unit(rng) < p_missing) continue;
      const auto range = mirkit::feature_range(f);
      song.features[f] =
          range.lo + unit(rng) * (range.hi - range.lo);
    }
    const size_t n_words = len_dist(rng);
    std::string lyrics;
    for (size_t w = 0; w < n_words; ++w) {
      if (w != 0) lyrics += ' ';
      lyrics += kVocabulary[word_dist(rng)];
    }
    song.lyrics = std::move(lyrics);
    corpus.songs.push_back(std::move(song));
  }
  return corpus;
}

// ------------------------------------------------------------ xml checking

// Minimal well-formedness check for the SVG subset the renderer emits:
// balanced tags, quoted attributes, no raw '<' in text, entities closed.
inline bool xml_well_formed(std::string_view doc, std::string* error = nullptr) {
  const auto fail = [&](const std::string& message) {
    if (error != nullptr) *error = message;
    return false;
  };
  std::vector<std::string> stack;
  size_t i = 0;
  bool saw_root = false;
  while (i < doc.size()) {
    const char c = doc[i];
    if (c == '<') {
      size_t j = i + 1;
      if (j < doc.size() && (doc[j] == '?' || doc[j] == '!')) {
        // declaration / comment: skip to '>'
        while (j < doc.size() && doc[j] != '>') ++j;
        if (j == doc.size()) return fail("unterminated declaration");
        i = j + 1;
        continue;
      }
      const bool closing = j < doc.size() && doc[j] == '/';
      if (closing) ++j;
      size_t name_start = j;
      while (j < doc.size() &&
             (std::isalnum(static_cast<unsigned char>(doc[j])) ||
              doc[j] == ':' || doc[j] == '-' || doc[j] == '_')) {
        ++j;
      }
      if (j == name_start) return fail("tag with empty name");
      const std::string name(doc.substr(name_start, j - name_start));
      // scan to '>' honouring quotes
      char quote = 0;
      bool self_closing = false;
      while (j < doc.size()) {
        const char d = doc[j];
        if (quote != 0) {
          if (d == quote) quote = 0;
        } else if (d == '"' || d == '\'') {
          quote = d;
        } else if (d == '>') {
          break;
        } else if (d == '/' && j + 1 < doc.size() && doc[j + 1] == '>') {
          self_closing = true;
        }
        ++j;
      }
      if (j == doc.size()) return fail("unterminated tag " + name);
      if (closing) {
        if (stack.empty()) return fail("close without open: " + name);
        if (stack.back() != name) {
          return fail("mismatched close: " + name + " vs " + stack.back());
        }
        stack.pop_back();
      } else if (!self_closing) {
        if (stack.empty() && saw_root) return fail("second root element");
        stack.push_back(name);
        saw_root = true;
      } else {
        saw_root = true;
      }
      i = j + 1;
    } else if (c == '>') {
      return fail("stray '>'");
    } else if (c == '&') {
      size_t j = i + 1;
      while (j < doc.size() && j < i + 8 && doc[j] != ';') ++j;
      if (j == doc.size() || doc[j] != ';') return fail("unterminated entity");
      i = j + 1;
    } else {
      ++i;
    }
  }
  if (!stack.empty()) return fail("unclosed tag: " + stack.back());
  if (!saw_root) return fail("no root element");
  return true;
}

}  // namespace testsupport
