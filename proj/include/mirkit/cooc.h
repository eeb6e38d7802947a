#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mirkit/corpus.h"

namespace mirkit {

// Song-level word co-occurrence network. adjacency[i][j] counts the songs
// whose token set contains both words; the diagonal is defined as 0 and
// per-word song counts live in doc_freq instead.
struct CoocNetwork {
  std::vector<std::string> words;
  std::vector<std::vector<std::uint32_t>> adjacency;  // N x N, symmetric
  std::map<std::string, std::uint32_t> doc_freq;
  size_t n_documents = 0;

  size_t word_count() const { return words.size(); }
};

struct CentralityRow {
  std::string word;
  std::uint32_t simple_degree = 0;    // neighbours with positive weight
  std::uint64_t weighted_degree = 0;  // sum of off-diagonal weights
};

struct EdgeRecord {
  std::string word_a;  // lexicographically smaller endpoint
  std::string word_b;
  std::uint32_t count = 0;
};

// Builds the network over the given word list (presence per song, not
// token multiplicity). Words must be distinct, non-empty and lowercase
// a-z. Parallelized over songs when OpenMP is enabled.
CoocNetwork build_network(const Corpus& corpus,
                          const std::vector<std::string>& words);

// One row per word in network order.
std::vector<CentralityRow> centralities(const CoocNetwork& net);

// Unordered pairs with positive weight, word_a < word_b, sorted by count
// descending then lexicographically.
std::vector<EdgeRecord> export_edges(const CoocNetwork& net);

namespace serial {
// Plain-loop reference implementation, kept for testing and the benchmark.
CoocNetwork build_network(const Corpus& corpus,
                          const std::vector<std::string>& words);
}  // namespace serial

}  // namespace mirkit
