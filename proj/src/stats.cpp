#include "mirkit/stats.h"

#include <algorithm>
#include <cmath>
#include <map>

#include <fmt/format.h>

#include "mirkit/errors.h"

namespace mirkit {

namespace {

void require_nonempty(const Corpus& corpus) {
  // An empty corpus has no valid values for any feature.
  if (corpus.empty()) throw NoValidValues("empty corpus");
}

// Correlation of one pairwise-complete sample, or nullopt when undefined
// (n < 2 or a constant series). Shared by both matrix drivers.
std::optional<double> pair_correlation(const PairedSample& sample) {
  if (sample.x.size() < 2) return std::nullopt;
  const double mx = mean_of(sample.x);
  const double my = mean_of(sample.y);
  const double sx = sample_std(sample.x, mx);
  const double sy = sample_std(sample.y, my);
  if (sx == 0.0 || sy == 0.0) return std::nullopt;
  double acc = 0.0;
  for (size_t i = 0; i < sample.x.size(); ++i) {
    acc += (sample.x[i] - mx) * (sample.y[i] - my);
  }
  double r = acc / (static_cast<double>(sample.x.size() - 1) * sx * sy);
  if (r > 1.0 && r - 1.0 <= 1e-12) r = 1.0;
  if (r < -1.0 && -1.0 - r <= 1e-12) r = -1.0;
  return r;
}

// Diagonal entry: 1 when the feature has non-zero variance over its valid
// values, absent otherwise.
void fill_diagonal(const Corpus& corpus, CorrelationMatrix& matrix) {
  for (size_t i = 0; i < kFeatureCount; ++i) {
    std::vector<double> valid;
    for (const auto& song : corpus.songs) {
      if (const auto& v = song.features[kAllFeatures[i]]) valid.push_back(*v);
    }
    matrix.n_pairs[i][i] = valid.size();
    if (valid.size() >= 2) {
      const double m = mean_of(valid);
      if (sample_std(valid, m) > 0.0) matrix.r[i][i] = 1.0;
    }
  }
}

void fill_pair(const Corpus& corpus, CorrelationMatrix& matrix, size_t i,
               size_t j) {
  const auto xs = feature_column(corpus, kAllFeatures[i]);
  const auto ys = feature_column(corpus, kAllFeatures[j]);
  const auto sample = pairwise_complete(xs, ys);
  matrix.n_pairs[i][j] = matrix.n_pairs[j][i] = sample.x.size();
  const auto r = pair_correlation(sample);
  matrix.r[i][j] = matrix.r[j][i] = r;
}

}  // namespace

PairedSample pairwise_complete(std::span<const std::optional<double>> x,
                               std::span<const std::optional<double>> y) {
  if (x.size() != y.size())
    throw UsageError(fmt::format("sequence lengths differ ({} vs {})",
                                 x.size(), y.size()));
  PairedSample sample;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] && y[i]) {
      sample.x.push_back(*x[i]);
      sample.y.push_back(*y[i]);
    }
  }
  return sample;
}

double mean_of(std::span<const double> values) {
  double acc = 0.0;
  for (const double v : values) acc += v;
  return acc / static_cast<double>(values.size());
}

double sample_std(std::span<const double> values, double mean) {
  if (values.size() < 2) return 0.0;
  double acc = 0.0;
  for (const double v : values) acc += (v - mean) * (v - mean);
  return std::sqrt(acc / static_cast<double>(values.size() - 1));
}

FeatureSummary summarize(const Corpus& corpus, Feature feature) {
  require_nonempty(corpus);
  FeatureSummary summary;
  summary.feature = feature;

  std::vector<double> valid;
  valid.reserve(corpus.size());
  for (const auto& song : corpus.songs) {
    if (const auto& v = song.features[feature]) valid.push_back(*v);
  }
  summary.n_valid = valid.size();
  summary.n_missing = corpus.size() - valid.size();

  if (valid.empty()) {
    throw NoValidValues(
        fmt::format("no valid values for feature '{}'", feature_name(feature)));
  }
  summary.mean = mean_of(valid);
  summary.min = *std::min_element(valid.begin(), valid.end());
  summary.max = *std::max_element(valid.begin(), valid.end());
  if (valid.size() == 1) {
    summary.std_dev = 0.0;
    summary.degenerate = true;
  } else {
    summary.std_dev = sample_std(valid, summary.mean);
  }
  return summary;
}

AnnualSeries annual_means(const Corpus& corpus, Feature feature) {
  require_nonempty(corpus);
  AnnualSeries series;
  series.feature = feature;

  std::map<int, std::pair<double, size_t>> by_year;  // year -> (sum, n)
  for (const auto& song : corpus.songs) {
    if (const auto& v = song.features[feature]) {
      auto& [sum, n] = by_year[song.year];
      sum += *v;
      ++n;
    }
  }
  if (by_year.empty()) {
    throw NoValidValues(
        fmt::format("no valid values for feature '{}'", feature_name(feature)));
  }
  series.points.reserve(by_year.size());
  for (const auto& [year, agg] : by_year) {
    series.points.push_back(
        {year, agg.first / static_cast<double>(agg.second), agg.second});
  }
  return series;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw UsageError(fmt::format("sequence lengths differ ({} vs {})",
                                 x.size(), y.size()));
  if (x.size() < 2)
    throw InsufficientData(
        fmt::format("insufficient data: n = {} (need >= 2)", x.size()));

  const double mx = mean_of(x);
  const double my = mean_of(y);
  const double sx = sample_std(x, mx);
  const double sy = sample_std(y, my);
  if (sx == 0.0 || sy == 0.0)
    throw UndefinedCorrelation("undefined correlation: constant series");

  double acc = 0.0;
  for (size_t i = 0; i < x.size(); ++i) acc += (x[i] - mx) * (y[i] - my);
  double r = acc / (static_cast<double>(x.size() - 1) * sx * sy);
  if (r > 1.0 && r - 1.0 <= 1e-12) r = 1.0;
  if (r < -1.0 && -1.0 - r <= 1e-12) r = -1.0;
  return r;
}

LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
  LinearFit fit;
  fit.r = pearson(x, y);  // validates the sample
  const double mx = mean_of(x);
  const double my = mean_of(y);
  const double sx = sample_std(x, mx);
  const double sy = sample_std(y, my);
  fit.slope = fit.r * sy / sx;
  fit.intercept = my - fit.slope * mx;
  fit.n = x.size();
  return fit;
}

std::vector<std::optional<double>> feature_column(const Corpus& corpus,
                                                  Feature feature) {
  std::vector<std::optional<double>> column;
  column.reserve(corpus.size());
  for (const auto& song : corpus.songs) column.push_back(song.features[feature]);
  return column;
}

CorrelationMatrix correlation_matrix(const Corpus& corpus) {
  require_nonempty(corpus);
  CorrelationMatrix matrix;
  fill_diagonal(corpus, matrix);

  // The 28 unordered pairs are independent; each iteration writes only its
  // own (i, j) and (j, i) slots.
  std::vector<std::pair<size_t, size_t>> pairs;
  pairs.reserve(kFeatureCount * (kFeatureCount - 1) / 2);
  for (size_t i = 0; i < kFeatureCount; ++i)
    for (size_t j = i + 1; j < kFeatureCount; ++j) pairs.emplace_back(i, j);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (ptrdiff_t k = 0; k < static_cast<ptrdiff_t>(pairs.size()); ++k) {
    fill_pair(corpus, matrix, pairs[k].first, pairs[k].second);
  }
  return matrix;
}

namespace serial {

CorrelationMatrix correlation_matrix(const Corpus& corpus) {
  require_nonempty(corpus);
  CorrelationMatrix matrix;
  fill_diagonal(corpus, matrix);
  for (size_t i = 0; i < kFeatureCount; ++i) {
    for (size_t j = i + 1; j < kFeatureCount; ++j) {
      fill_pair(corpus, matrix, i, j);
    }
  }
  return matrix;
}

}  // namespace serial

}  // namespace mirkit
