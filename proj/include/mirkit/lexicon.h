#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mirkit/corpus.h"

namespace mirkit {

// Corpus-wide word counts C(w) over the token grammar.
struct TokenCountTable {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t total_tokens = 0;
  size_t n_documents = 0;

  size_t vocab_size() const { return counts.size(); }
};

struct RankedWord {
  std::string word;
  std::uint64_t count = 0;
  double relative_frequency = 0.0;
};

// Lowercases and splits into maximal runs of letters; every other
// character (digits, punctuation, apostrophes, non-ASCII bytes) is a
// separator. The alphabet is a-z, so accented letters do not survive.
std::vector<std::string> tokenize(std::string_view text);

// True iff the word is non-empty lowercase a-z, i.e. a possible token.
bool matches_token_grammar(std::string_view word);

// Accumulates token counts over every song's lyrics; songs with empty
// lyrics still count toward n_documents. Parallelized over songs when
// OpenMP is enabled.
TokenCountTable count_corpus(const Corpus& corpus);

// Words sorted by count descending, ties broken lexicographically
// ascending; at most n entries. Throws UsageError for n = 0.
std::vector<RankedWord> top_n(const TokenCountTable& table, size_t n);

namespace serial {
// Plain-loop reference implementation, kept for testing and the benchmark.
TokenCountTable count_corpus(const Corpus& corpus);
}  // namespace serial

}  // namespace mirkit
