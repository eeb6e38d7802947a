#include "mirkit/mood.h"

#include <algorithm>
#include <map>

#include <fmt/format.h>

#include "mirkit/errors.h"

namespace mirkit {

std::vector<GenreProfile> genre_means(const Corpus& corpus, Feature feature) {
  // An empty corpus has no valid values for any feature.
  if (corpus.empty()) throw NoValidValues("empty corpus");

  // Genre labels are trimmed at ingestion; group by the exact label.
  std::map<std::string, std::pair<double, size_t>> groups;  // (sum, n)
  for (const auto& song : corpus.songs) {
    if (const auto& v = song.features[feature]) {
      auto& [sum, n] = groups[song.genre];
      sum += *v;
      ++n;
    }
  }
  if (groups.empty()) {
    throw NoValidValues(
        fmt::format("no valid values for feature '{}'", feature_name(feature)));
  }

  std::vector<GenreProfile> profiles;
  profiles.reserve(groups.size());
  for (const auto& [genre, agg] : groups) {
    profiles.push_back(
        {genre, feature, agg.first / static_cast<double>(agg.second),
         agg.second});
  }
  std::sort(profiles.begin(), profiles.end(),
            [](const GenreProfile& a, const GenreProfile& b) {
              if (a.mean != b.mean) return a.mean > b.mean;
              return a.genre < b.genre;
            });
  return profiles;
}

}  // namespace mirkit
