#include <cmath>
#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "mirkit/errors.h"
#include "mirkit/stats.h"
#include "support/oracles.h"

using namespace mirkit;
using Catch::Matchers::WithinAbs;

TEST_CASE("stats: frozen pearson fixture") {
  const std::vector<double> x = {1, 2, 3, 4};
  const std::vector<double> y = {1, 3, 2, 5};
  CHECK_THAT(pearson(x, y), WithinAbs(0.8315218406202999, 1e-15));
}

TEST_CASE("stats: second frozen pearson fixture") {
  const std::vector<double> x = {10, 20, 30, 40, 55};
  const std::vector<double> y = {5, 4, 9, 2, 8};
  CHECK_THAT(pearson(x, y), WithinAbs(0.2583773183412612, 1e-14));
}

TEST_CASE("stats: frozen linear fit fixture") {
  const std::vector<double> x = {1, 2, 3, 4};
  const std::vector<double> y = {1, 3, 2, 5};
  const auto fit = linear_fit(x, y);
  CHECK_THAT(fit.slope, WithinAbs(1.1, 1e-12));
  CHECK_THAT(fit.intercept, WithinAbs(0.0, 1e-12));
  CHECK_THAT(fit.r, WithinAbs(0.8315218406202999, 1e-15));
  CHECK(fit.n == 4);
}

TEST_CASE("stats: pearson matches the independent oracle on random data") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> value(-50.0, 50.0);
  std::uniform_int_distribution<size_t> length(2, 200);
  for (int trial = 0; trial < 300; ++trial) {
    const size_t n = length(rng);
    std::vector<double> x(n), y(n);
    for (size_t i = 0; i < n; ++i) {
      x[i] = value(rng);
      y[i] = value(rng);
    }
    const double got = pearson(x, y);
    const double want = testsupport::oracle_pearson(x, y);
    REQUIRE_THAT(got, WithinAbs(want, 1e-9));
    REQUIRE(got >= -1.0);
    REQUIRE(got <= 1.0);
  }
}

TEST_CASE("stats: pearson properties") {
  const std::vector<double> x = {3, 1, 4, 1, 5, 9, 2, 6};
  const std::vector<double> y = {2, 7, 1, 8, 2, 8, 1, 8};

  SECTION("symmetry") {
    CHECK_THAT(pearson(x, y), WithinAbs(pearson(y, x), 1e-15));
  }
  SECTION("perfect positive and negative linearity") {
    std::vector<double> pos(x.size()), neg(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
      pos[i] = 3.0 * x[i] + 7.0;
      neg[i] = -2.0 * x[i] + 1.0;
    }
    CHECK_THAT(pearson(x, pos), WithinAbs(1.0, 1e-12));
    CHECK_THAT(pearson(x, neg), WithinAbs(-1.0, 1e-12));
  }
  SECTION("invariance under affine transforms with positive scale") {
    std::vector<double> sx(x.size()), sy(y.size());
    for (size_t i = 0; i < x.size(); ++i) {
      sx[i] = 0.25 * x[i] - 11.0;
      sy[i] = 40.0 * y[i] + 3.0;
    }
    CHECK_THAT(pearson(sx, sy), WithinAbs(pearson(x, y), 1e-12));
  }
}

TEST_CASE("stats: pearson error conditions") {
  CHECK_THROWS_AS(pearson(std::vector<double>{1.0, 2.0},
                          std::vector<double>{1.0}),
                  UsageError);
  CHECK_THROWS_AS(pearson(std::vector<double>{1.0},
                          std::vector<double>{2.0}),
                  InsufficientData);
  CHECK_THROWS_AS(pearson(std::vector<double>{}, std::vector<double>{}),
                  InsufficientData);
  CHECK_THROWS_AS(pearson(std::vector<double>{5.0, 5.0, 5.0},
                          std::vector<double>{1.0, 2.0, 3.0}),
                  UndefinedCorrelation);
  CHECK_THROWS_AS(pearson(std::vector<double>{1.0, 2.0, 3.0},
                          std::vector<double>{4.0, 4.0, 4.0}),
                  UndefinedCorrelation);
}

TEST_CASE("stats: summarize basic values") {
  Corpus corpus;
  for (double v : {2.0, 4.0, 6.0}) {
    auto song = testsupport::make_song("t", "Pop", 2015);
    song.features[Feature::kEnergy] = v;
    corpus.songs.push_back(song);
  }
  auto missing = testsupport::make_song("m", "Pop", 2015);
  missing.features[Feature::kEnergy] = std::nullopt;
  corpus.songs.push_back(missing);

  const auto summary = summarize(corpus, Feature::kEnergy);
  CHECK_THAT(summary.mean, WithinAbs(4.0, 1e-15));
  CHECK_THAT(summary.std_dev, WithinAbs(2.0, 1e-15));
  CHECK(summary.min == 2.0);
  CHECK(summary.max == 6.0);
  CHECK(summary.n_valid == 3);
  CHECK(summary.n_missing == 1);
  CHECK_FALSE(summary.degenerate);
}

TEST_CASE("stats: summarize degenerate and empty cases") {
  Corpus corpus;
  auto song = testsupport::make_song("one", "Pop", 2015);
  song.features[Feature::kValence] = 42.0;
  song.features[Feature::kEnergy] = std::nullopt;
  corpus.songs.push_back(song);

  const auto single = summarize(corpus, Feature::kValence);
  CHECK(single.n_valid == 1);
  CHECK(single.degenerate);
  CHECK(single.std_dev == 0.0);
  CHECK(single.mean == 42.0);

  CHECK_THROWS_AS(summarize(corpus, Feature::kEnergy), NoValidValues);
  CHECK_THROWS_AS(summarize(Corpus{}, Feature::kEnergy), NoValidValues);
}

TEST_CASE("stats: annual means ordering and values") {
  Corpus corpus;
  const auto add = [&](int year, double energy) {
    auto song = testsupport::make_song("t", "Pop", year);
    song.features[Feature::kEnergy] = energy;
    corpus.songs.push_back(song);
  };
  add(2019, 80.0);
  add(2017, 60.0);
  add(2019, 90.0);
  add(2018, 70.0);
  auto gap = testsupport::make_song("gap", "Pop", 2016);
  gap.features[Feature::kEnergy] = std::nullopt;
  corpus.songs.push_back(gap);  // 2016 has no valid value -> omitted

  const auto series = annual_means(corpus, Feature::kEnergy);
  REQUIRE(series.points.size() == 3);
  CHECK(series.points[0].year == 2017);
  CHECK(series.points[1].year == 2018);
  CHECK(series.points[2].year == 2019);
  CHECK_THAT(series.points[2].mean, WithinAbs(85.0, 1e-15));
  CHECK(series.points[2].n == 2);
  CHECK(series.points[0].n == 1);
}

TEST_CASE("stats: pairwise-complete deletion") {
  const std::vector<std::optional<double>> x = {1.0, std::nullopt, 3.0, 4.0,
                                                std::nullopt};
  const std::vector<std::optional<double>> y = {10.0, 20.0, std::nullopt, 40.0,
                                                std::nullopt};
  const auto paired = pairwise_complete(x, y);
  CHECK(paired.x == std::vector<double>{1.0, 4.0});
  CHECK(paired.y == std::vector<double>{10.0, 40.0});
}

TEST_CASE("stats: correlation matrix structure on random corpora") {
  std::mt19937 rng(2024);
  const auto corpus = testsupport::random_corpus(rng, 120);
  const auto matrix = correlation_matrix(corpus);

  for (size_t i = 0; i < kFeatureCount; ++i) {
    for (size_t j = 0; j < kFeatureCount; ++j) {
      // Symmetry of both the estimate and the sample size.
      CHECK(matrix.n_pairs[i][j] == matrix.n_pairs[j][i]);
      REQUIRE(matrix.r[i][j].has_value() == matrix.r[j][i].has_value());
      if (matrix.r[i][j]) {
        CHECK_THAT(*matrix.r[i][j], WithinAbs(*matrix.r[j][i], 1e-15));
        CHECK(*matrix.r[i][j] >= -1.0);
        CHECK(*matrix.r[i][j] <= 1.0);
      }
      if (i == j && matrix.r[i][i]) CHECK(*matrix.r[i][i] == 1.0);
    }
  }

  // Each defined off-diagonal entry equals the oracle over the
  // pairwise-complete sample.
  for (size_t i = 0; i < kFeatureCount; ++i) {
    for (size_t j = i + 1; j < kFeatureCount; ++j) {
      const auto paired =
          pairwise_complete(feature_column(corpus, kAllFeatures[i]),
                            feature_column(corpus, kAllFeatures[j]));
      CHECK(matrix.n_pairs[i][j] == paired.x.size());
      if (!matrix.r[i][j]) continue;
      const double want = testsupport::oracle_pearson(paired.x, paired.y);
      CHECK_THAT(*matrix.r[i][j], WithinAbs(want, 1e-9));
    }
  }
}

TEST_CASE("stats: parallel and serial correlation matrices agree exactly") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 5; ++trial) {
    const auto corpus = testsupport::random_corpus(rng, 80, 0.3);
    const auto parallel = correlation_matrix(corpus);
    const auto serial = serial::correlation_matrix(corpus);
    for (size_t i = 0; i < kFeatureCount; ++i) {
      for (size_t j = 0; j < kFeatureCount; ++j) {
        REQUIRE(parallel.n_pairs[i][j] == serial.n_pairs[i][j]);
        REQUIRE(parallel.r[i][j].has_value() == serial.r[i][j].has_value());
        if (parallel.r[i][j]) {
          // Identical arithmetic order -> bitwise equality.
          REQUIRE(*parallel.r[i][j] == *serial.r[i][j]);
        }
      }
    }
  }
}

TEST_CASE("stats: matrix entries undefined exactly when degenerate") {
  Corpus corpus;
  // Two songs: valence constant, energy varying, loudness present once.
  auto a = testsupport::make_song("a", "Pop", 2015);
  a.features[Feature::kEnergy] = 10.0;
  a.features[Feature::kValence] = 50.0;
  a.features[Feature::kLoudness] = std::nullopt;
  auto b = testsupport::make_song("b", "Pop", 2016);
  b.features[Feature::kEnergy] = 90.0;
  b.features[Feature::kValence] = 50.0;
  b.features[Feature::kLoudness] = -3.0;
  corpus.songs = {a, b};

  const auto matrix = correlation_matrix(corpus);
  const auto at = [&](Feature p, Feature q) {
    return matrix.r[static_cast<size_t>(p)][static_cast<size_t>(q)];
  };
  CHECK_FALSE(at(Feature::kEnergy, Feature::kValence).has_value());  // constant
  CHECK_FALSE(at(Feature::kEnergy, Feature::kLoudness).has_value());  // n=1
  CHECK(at(Feature::kEnergy, Feature::kEnergy).value() == 1.0);
  // Valence is constant, so even its diagonal is undefined.
  CHECK_FALSE(at(Feature::kValence, Feature::kValence).has_value());
}

TEST_CASE("stats: linear fit recovers a noiseless line") {
  std::vector<double> x, y;
  for (int i = 0; i < 50; ++i) {
    x.push_back(static_cast<double>(i));
    y.push_back(-3.5 * i + 20.0);
  }
  const auto fit = linear_fit(x, y);
  CHECK_THAT(fit.slope, WithinAbs(-3.5, 1e-12));
  CHECK_THAT(fit.intercept, WithinAbs(20.0, 1e-10));
  CHECK_THAT(fit.r, WithinAbs(-1.0, 1e-12));
}

TEST_CASE("stats: linear fit residuals are orthogonal to x") {
  std::mt19937 rng(31415);
  std::uniform_real_distribution<double> value(0.0, 100.0);
  std::vector<double> x(60), y(60);
  for (size_t i = 0; i < x.size(); ++i) {
    x[i] = value(rng);
    y[i] = value(rng);
  }
  const auto fit = linear_fit(x, y);
  double dot = 0.0, sum = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double residual = y[i] - (fit.slope * x[i] + fit.intercept);
    dot += residual * x[i];
    sum += residual;
  }
  CHECK_THAT(sum, WithinAbs(0.0, 1e-7));
  CHECK_THAT(dot, WithinAbs(0.0, 1e-5));
}
