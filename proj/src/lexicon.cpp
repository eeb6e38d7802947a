#include "mirkit/lexicon.h"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mirkit/errors.h"

namespace mirkit {

namespace {

void accumulate_tokens(const std::string& lyrics, TokenCountTable& table) {
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    ++table.counts[token];
    ++table.total_tokens;
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
}

void merge_into(TokenCountTable& dst, const TokenCountTable& src) {
  for (const auto& [word, count] : src.counts) dst.counts[word] += count;
  dst.total_tokens += src.total_tokens;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) {
      tokens.push_back(std::move(token));
      token.clear();
    }
  };
  for (const char c : text) {
    if (c >= 'a' && c <= 'z') {
      token += c;
    } else if (c >= 'A' && c <= 'Z') {
      token += static_cast<char>(c - 'A' + 'a');
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

bool matches_token_grammar(std::string_view word) {
  if (word.empty()) return false;
  return std::all_of(word.begin(), word.end(),
                     [](char c) { return c >= 'a' && c <= 'z'; });
}

TokenCountTable count_corpus(const Corpus& corpus) {
  if (corpus.empty()) throw DataError("empty corpus");
  TokenCountTable table;
  table.n_documents = corpus.size();

#ifdef _OPENMP
  const int n_threads = omp_get_max_threads();
  std::vector<TokenCountTable> partials(n_threads);
#pragma omp parallel
  {
    TokenCountTable& local = partials[omp_get_thread_num()];
#pragma omp for schedule(static)
    for (ptrdiff_t i = 0; i < static_cast<ptrdiff_t>(corpus.size()); ++i) {
      accumulate_tokens(corpus.songs[i].lyrics, local);
    }
  }
  for (const auto& partial : partials) merge_into(table, partial);
#else
  for (const auto& song : corpus.songs) accumulate_tokens(song.lyrics, table);
#endif
  return table;
}

std::vector<RankedWord> top_n(const TokenCountTable& table, size_t n) {
  if (n == 0) throw UsageError("top_n requires n >= 1");
  std::vector<RankedWord> ranked;
  ranked.reserve(table.counts.size());
  for (const auto& [word, count] : table.counts) {
    ranked.push_back({word, count, 0.0});
  }
  std::sort(ranked.begin(), ranked.end(),
            [](const RankedWord& a, const RankedWord& b) {
              if (a.count != b.count) return a.count > b.count;
              return a.word < b.word;
            });
  if (ranked.size() > n) ranked.resize(n);
  for (auto& rw : ranked) {
    rw.relative_frequency =
        static_cast<double>(rw.count) / static_cast<double>(table.total_tokens);
  }
  return ranked;
}

namespace serial {

TokenCountTable count_corpus(const Corpus& corpus) {
  if (corpus.empty()) throw DataError("empty corpus");
  TokenCountTable table;
  table.n_documents = corpus.size();
  for (const auto& song : corpus.songs) accumulate_tokens(song.lyrics, table);
  return table;
}

}  // namespace serial

}  // namespace mirkit
