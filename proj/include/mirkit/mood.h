#pragma once

#include <string>
#include <vector>

#include "mirkit/corpus.h"

namespace mirkit {

// Mean of one feature over the songs of one genre (valid values only).
struct GenreProfile {
  std::string genre;
  Feature feature = Feature::kValence;
  double mean = 0.0;
  size_t n = 0;
};

// Groups songs by exact trimmed genre label, computes the per-group mean
// over valid values, drops groups with no valid values, and sorts by mean
// descending with ties broken by genre name ascending. Throws
// NoValidValues when the feature is entirely missing.
std::vector<GenreProfile> genre_means(const Corpus& corpus, Feature feature);

}  // namespace mirkit
