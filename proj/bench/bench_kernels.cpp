// Compares the parallel kernels against their serial reference
// implementations on a synthetic corpus.
//
//   mirkit_bench [n_songs]   (default 20000)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mirkit/cooc.h"
#include "mirkit/corpus.h"
#include "mirkit/lexicon.h"
#include "mirkit/stats.h"

using namespace mirkit;
using Clock = std::chrono::steady_clock;

namespace {

Corpus synthetic_corpus(size_t n_songs) {
  static const std::vector<std::string> kVocabulary = {
      "love",  "night", "dance", "heart", "fire",  "gold",  "rain",  "city",
      "dream", "light", "sound", "wild",  "young", "road",  "star",  "blue",
      "time",  "home",  "ghost", "queen", "king",  "storm", "river", "sun",
      "moon",  "sky",   "ocean", "stone", "ash",   "echo",  "velvet", "neon"};
  static const std::vector<std::string> kGenres = {"Pop", "Rock", "Hip-Hop",
                                                   "R&B", "Indie", "Electro"};
  std::mt19937 rng(1729);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> year(2000, 2023);
  std::uniform_int_distribution<size_t> genre(0, kGenres.size() - 1);
  std::uniform_int_distribution<size_t> word(0, kVocabulary.size() - 1);
  std::uniform_int_distribution<size_t> words_per_song(20, 80);

  Corpus corpus;
  corpus.songs.reserve(n_songs);
  for (size_t i = 0; i < n_songs; ++i) {
    SongRecord song;
    song.id = static_cast<int>(i);
    song.title = "Song " + std::to_string(i);
    song.artist = "Artist " + std::to_string(i % 100);
    song.genre = kGenres[genre(rng)];
    song.year = year(rng);
    for (const auto f : kAllFeatures) {
      if (unit(rng) < 0.05) continue;  // sprinkle missing cells
      const auto range = feature_range(f);
      song.features[f] = range.lo + unit(rng) * (range.hi - range.lo);
    }
    std::string lyrics;
    const size_t n_words = words_per_song(rng);
    for (size_t w = 0; w < n_words; ++w) {
      if (w != 0) lyrics += ' ';
      lyrics += kVocabulary[word(rng)];
    }
    song.lyrics = std::move(lyrics);
    corpus.songs.push_back(std::move(song));
  }
  return corpus;
}

// Best-of-three wall time in milliseconds.
template <typename Fn>
double time_best_ms(Fn&& fn) {
  double best = 1e300;
  for (int rep = 0; rep < 3; ++rep) {
    const auto start = Clock::now();
    fn();
    const auto stop = Clock::now();
    const double ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    if (ms < best) best = ms;
  }
  return best;
}

void print_row(const char* kernel, double serial_ms, double parallel_ms) {
  fmt::print("{:<22} {:>12.2f} {:>14.2f} {:>9.2f}x\n", kernel, serial_ms,
             parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main(int argc, char** argv) {
  size_t n_songs = 20000;
  if (argc > 1) {
    const long parsed = std::strtol(argv[1], nullptr, 10);
    if (parsed <= 0) {
      std::fprintf(stderr, "usage: %s [n_songs]\n", argv[0]);
      return 1;
    }
    n_songs = static_cast<size_t>(parsed);
  }

#ifdef _OPENMP
  fmt::print("OpenMP enabled, max threads: {}\n", omp_get_max_threads());
#else
  fmt::print("OpenMP disabled (serial build)\n");
#endif
  fmt::print("Building synthetic corpus of {} songs...\n", n_songs);
  const auto corpus = synthetic_corpus(n_songs);

  const auto table = serial::count_corpus(corpus);
  const auto ranked = top_n(table, 32);
  std::vector<std::string> words;
  for (const auto& entry : ranked) words.push_back(entry.word);

  fmt::print("\n{:<22} {:>12} {:>14} {:>10}\n", "kernel", "serial (ms)",
             "parallel (ms)", "speedup");

  print_row("count_corpus",
            time_best_ms([&] { serial::count_corpus(corpus); }),
            time_best_ms([&] { count_corpus(corpus); }));
  print_row("correlation_matrix",
            time_best_ms([&] { serial::correlation_matrix(corpus); }),
            time_best_ms([&] { correlation_matrix(corpus); }));
  print_row("build_network",
            time_best_ms([&] { serial::build_network(corpus, words); }),
            time_best_ms([&] { build_network(corpus, words); }));

  // Guard against the results diverging silently.
  const auto a = count_corpus(corpus);
  const auto b = serial::count_corpus(corpus);
  if (a.counts != b.counts) {
    std::fprintf(stderr, "serial/parallel count mismatch\n");
    return 1;
  }
  const auto net_a = build_network(corpus, words);
  const auto net_b = serial::build_network(corpus, words);
  if (net_a.adjacency != net_b.adjacency) {
    std::fprintf(stderr, "serial/parallel network mismatch\n");
    return 1;
  }
  fmt::print("\nserial and parallel results agree.\n");
  return 0;
}
