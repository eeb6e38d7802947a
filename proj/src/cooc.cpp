#include "mirkit/cooc.h"

#include <algorithm>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <fmt/format.h>

#include "mirkit/errors.h"
#include "mirkit/lexicon.h"

namespace mirkit {

namespace {

void validate_words(const std::vector<std::string>& words) {
  if (words.empty()) throw UsageError("word list is empty");
  std::set<std::string_view> seen;
  for (const auto& word : words) {
    if (!matches_token_grammar(word)) {
      throw UsageError(
          fmt::format("'{}' does not match the token grammar", word));
    }
    if (!seen.insert(word).second) {
      throw UsageError(fmt::format("duplicate word '{}'", word));
    }
  }
}

// Bit i set iff the song's token set contains words[i].
std::uint64_t membership_mask(const std::string& lyrics,
                              const std::map<std::string, size_t>& word_index) {
  std::uint64_t mask = 0;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    if (const auto it = word_index.find(token); it != word_index.end()) {
      mask |= std::uint64_t{1} << it->second;
    }
    token.clear();
  };
  for (const char c : lyrics) {
    if (c >= 'a' && c <= 'z') {
      token += c;
    } else if (c >= 'A' && c <= 'Z') {
      token += static_cast<char>(c - 'A' + 'a');
    } else {
      flush();
    }
  }
  flush();
  return mask;
}

CoocNetwork make_empty_network(const Corpus& corpus,
                               const std::vector<std::string>& words) {
  CoocNetwork net;
  net.words = words;
  net.n_documents = corpus.size();
  net.adjacency.assign(words.size(),
                       std::vector<std::uint32_t>(words.size(), 0));
  for (const auto& word : words) net.doc_freq[word] = 0;
  return net;
}

void accumulate_song(std::uint64_t mask, CoocNetwork& net) {
  if (mask == 0) return;
  std::vector<size_t> present;
  for (size_t i = 0; i < net.words.size(); ++i) {
    if (mask & (std::uint64_t{1} << i)) present.push_back(i);
  }
  for (const size_t i : present) ++net.doc_freq[net.words[i]];
  for (size_t a = 0; a < present.size(); ++a) {
    for (size_t b = a + 1; b < present.size(); ++b) {
      ++net.adjacency[present[a]][present[b]];
      ++net.adjacency[present[b]][present[a]];
    }
  }
}

}  // namespace

CoocNetwork build_network(const Corpus& corpus,
                          const std::vector<std::string>& words) {
  if (corpus.empty()) throw DataError("empty corpus");
  validate_words(words);
  if (words.size() > 64) {
    // Masks are single 64-bit words; larger lists take the reference path.
    return serial::build_network(corpus, words);
  }

  std::map<std::string, size_t> word_index;
  for (size_t i = 0; i < words.size(); ++i) word_index[words[i]] = i;

  const size_t n_songs = corpus.size();
  std::vector<std::uint64_t> masks(n_songs, 0);

#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (ptrdiff_t s = 0; s < static_cast<ptrdiff_t>(n_songs); ++s) {
    masks[s] = membership_mask(corpus.songs[s].lyrics, word_index);
  }

  CoocNetwork net = make_empty_network(corpus, words);

#ifdef _OPENMP
  const int n_threads = omp_get_max_threads();
  std::vector<CoocNetwork> partials(n_threads);
  for (auto& partial : partials) partial = make_empty_network(corpus, words);
#pragma omp parallel
  {
    CoocNetwork& local = partials[omp_get_thread_num()];
#pragma omp for schedule(static)
    for (ptrdiff_t s = 0; s < static_cast<ptrdiff_t>(n_songs); ++s) {
      accumulate_song(masks[s], local);
    }
  }
  for (const auto& partial : partials) {
    for (size_t i = 0; i < words.size(); ++i) {
      for (size_t j = 0; j < words.size(); ++j) {
        net.adjacency[i][j] += partial.adjacency[i][j];
      }
      net.doc_freq[words[i]] += partial.doc_freq.at(words[i]);
    }
  }
#else
  for (const std::uint64_t mask : masks) accumulate_song(mask, net);
#endif
  return net;
}

std::vector<CentralityRow> centralities(const CoocNetwork& net) {
  std::vector<CentralityRow> rows;
  rows.reserve(net.words.size());
  for (size_t i = 0; i < net.words.size(); ++i) {
    CentralityRow row;
    row.word = net.words[i];
    for (size_t j = 0; j < net.words.size(); ++j) {
      if (j == i) continue;
      const std::uint32_t w = net.adjacency[i][j];
      if (w > 0) ++row.simple_degree;
      row.weighted_degree += w;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<EdgeRecord> export_edges(const CoocNetwork& net) {
  std::vector<EdgeRecord> edges;
  for (size_t i = 0; i < net.words.size(); ++i) {
    for (size_t j = i + 1; j < net.words.size(); ++j) {
      const std::uint32_t count = net.adjacency[i][j];
      if (count == 0) continue;
      EdgeRecord edge;
      if (net.words[i] < net.words[j]) {
        edge.word_a = net.words[i];
        edge.word_b = net.words[j];
      } else {
        edge.word_a = net.words[j];
        edge.word_b = net.words[i];
      }
      edge.count = count;
      edges.push_back(std::move(edge));
    }
  }
  std::sort(edges.begin(), edges.end(),
            [](const EdgeRecord& a, const EdgeRecord& b) {
              if (a.count != b.count) return a.count > b.count;
              if (a.word_a != b.word_a) return a.word_a < b.word_a;
              return a.word_b < b.word_b;
            });
  return edges;
}

namespace serial {

CoocNetwork build_network(const Corpus& corpus,
                          const std::vector<std::string>& words) {
  if (corpus.empty()) throw DataError("empty corpus");
  validate_words(words);
  CoocNetwork net = make_empty_network(corpus, words);

  for (const auto& song : corpus.songs) {
    const auto tokens = tokenize(song.lyrics);
    const std::set<std::string> token_set(tokens.begin(), tokens.end());
    std::vector<size_t> present;
    for (size_t i = 0; i < words.size(); ++i) {
      if (token_set.contains(words[i])) present.push_back(i);
    }
    for (const size_t i : present) ++net.doc_freq[words[i]];
    for (size_t a = 0; a < present.size(); ++a) {
      for (size_t b = a + 1; b < present.size(); ++b) {
        ++net.adjacency[present[a]][present[b]];
        ++net.adjacency[present[b]][present[a]];
      }
    }
  }
  return net;
}

}  // namespace serial

}  // namespace mirkit
