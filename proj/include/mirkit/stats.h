#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mirkit/corpus.h"

namespace mirkit {

// Descriptive statistics over the valid (non-missing) values of one
// feature. std_dev uses the sample (n-1) denominator.
struct FeatureSummary {
  Feature feature = Feature::kEnergy;
  double mean = 0.0;
  double std_dev = 0.0;
  double min = 0.0;
  double max = 0.0;
  size_t n_valid = 0;
  size_t n_missing = 0;
  bool degenerate = false;  // single-value sample, std reported as 0
};

struct AnnualPoint {
  int year = 0;
  double mean = 0.0;
  size_t n = 0;
};

// Annual means for one feature; years with no valid values are omitted.
struct AnnualSeries {
  Feature feature = Feature::kEnergy;
  std::vector<AnnualPoint> points;  // strictly increasing by year
};

// Pairwise Pearson coefficients over the eight features. An entry is
// absent exactly when the pairwise-complete sample has n < 2 or either
// series is constant over it.
struct CorrelationMatrix {
  std::array<Feature, kFeatureCount> features = kAllFeatures;
  std::array<std::array<std::optional<double>, kFeatureCount>, kFeatureCount>
      r{};
  std::array<std::array<size_t, kFeatureCount>, kFeatureCount> n_pairs{};
};

// Ordinary least squares fit y = slope * x + intercept.
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r = 0.0;
  size_t n = 0;
};

// Paired values after pairwise-complete deletion (index i kept iff both
// values present).
struct PairedSample {
  std::vector<double> x;
  std::vector<double> y;
};
PairedSample pairwise_complete(std::span<const std::optional<double>> x,
                               std::span<const std::optional<double>> y);

// Sample statistics helpers (n-1 denominator for the deviation).
double mean_of(std::span<const double> values);
double sample_std(std::span<const double> values, double mean);

// Throws NoValidValues when every value of the feature is missing.
FeatureSummary summarize(const Corpus& corpus, Feature feature);

// Throws NoValidValues when the feature is entirely missing.
AnnualSeries annual_means(const Corpus& corpus, Feature feature);

// Pearson correlation of two equal-length, already pairwise-complete
// sequences: sum((x-mx)(y-my)) / ((n-1) * sx * sy). Throws
// InsufficientData for n < 2 and UndefinedCorrelation for a constant
// series. Clamped to [-1, 1] only against floating-point overshoot.
double pearson(std::span<const double> x, std::span<const double> y);

// OLS fit over the same sample; slope = r * sy / sx. Same errors as
// pearson.
LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

// All 28 unordered pairs with pairwise-complete deletion; parallelized
// over pairs when OpenMP is enabled. Undefined entries are absent rather
// than errors.
CorrelationMatrix correlation_matrix(const Corpus& corpus);

// Column of one feature in corpus order (missing values preserved).
std::vector<std::optional<double>> feature_column(const Corpus& corpus,
                                                  Feature feature);

namespace serial {
// Plain-loop reference implementation, kept for testing and the benchmark.
CorrelationMatrix correlation_matrix(const Corpus& corpus);
}  // namespace serial

}  // namespace mirkit
