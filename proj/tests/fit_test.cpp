#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <sstream>

#include "monkey/error.hpp"
#include "monkey/fit.hpp"
#include "monkey/simulate.hpp"

namespace monkey {
namespace {

RankFrequency exact_line(double intercept, double slope, std::uint64_t n) {
  RankFrequency rf;
  for (std::uint64_t r = 1; r <= n; ++r)
    rf.points.push_back({r, std::pow(10.0, intercept + slope * std::log10(static_cast<double>(r)))});
  return rf;
}

TEST(Ols, RecoversExactLine) {
  const FitResult f = ols_loglog(exact_line(-1.0, -1.0, 100), 1, 100);
  EXPECT_NEAR(f.intercept, -1.0, 1e-12);
  EXPECT_NEAR(f.slope, -1.0, 1e-12);
  EXPECT_NEAR(f.r_squared, 1.0, 1e-12);
  EXPECT_EQ(f.n_points, 100u);
}

TEST(Ols, FlatData) {
  RankFrequency rf;
  for (std::uint64_t r = 1; r <= 20; ++r) rf.points.push_back({r, 0.01});
  const FitResult f = ols_loglog(rf, 1, 20);
  EXPECT_NEAR(f.slope, 0.0, 1e-15);
  EXPECT_NEAR(f.intercept, -2.0, 1e-15);
  EXPECT_EQ(f.r_squared, 1.0);
}

TEST(Ols, WindowAndErrors) {
  const RankFrequency rf = exact_line(-0.5, -1.3, 50);
  const FitResult f = ols_loglog(rf, 10, 20);
  EXPECT_EQ(f.n_points, 11u);
  EXPECT_NEAR(f.slope, -1.3, 1e-12);
  EXPECT_THROW(ols_loglog(rf, 49, 60), ValidationError);
  EXPECT_THROW(ols_loglog(rf, 20, 10), ValidationError);
  EXPECT_THROW(ols_loglog(rf, 0, 10), ValidationError);
}

TEST(Ols, ResidualOrthogonality) {
  const FrequencyTable t = generate_words(make_gusein_zade(5, 0.18), 50'000, 4);
  const RankFrequency rf = empirical_rank_freq(t);
  for (auto [lo, hi] : {std::pair<std::uint64_t, std::uint64_t>{1, 50}, {10, 300}, {5, 2000}}) {
    const FitResult f = ols_loglog(rf, lo, hi);
    const auto res = fit_residuals(rf, f);
    double s = 0.0, sx = 0.0;
    std::size_t i = 0;
    for (const auto& p : rf.points) {
      if (p.rank < lo || p.rank > hi) continue;
      s += res[i];
      sx += res[i] * std::log10(static_cast<double>(p.rank));
      ++i;
    }
    EXPECT_NEAR(s, 0.0, 1e-9);
    EXPECT_NEAR(sx, 0.0, 1e-9);
    EXPECT_GE(f.r_squared, 0.0);
    EXPECT_LE(f.r_squared, 1.0);
    // Refitting is deterministic.
    const FitResult g = ols_loglog(rf, lo, hi);
    EXPECT_EQ(f.slope, g.slope);
    EXPECT_EQ(f.intercept, g.intercept);
  }
}

TEST(Ols, UniformLevelTableMatchesTheory) {
  // One point per level leaves only ranks 28 and 704 in [10, 10^4]; the step
  // corners give four points and track the staircase.
  const Alphabet a = make_uniform(26, 1.0 / 27);
  const LevelTable t = enumerate_levels(a, LevelLimit{Count(100000), {}});
  EXPECT_THROW(ols_loglog(level_points(t.levels, LevelSampling::kRankLo, 10000), 10, 10000),
               ValidationError);
  const FitResult f = ols_loglog(level_points(t.levels, LevelSampling::kSpanEnds, 10000), 10, 10000);
  const double predicted = -std::log(27.0) / std::log(26.0);
  EXPECT_NEAR(f.slope, predicted, 0.02);
  EXPECT_LE(compare(f, a).gap, 0.02);
}

TEST(LevelPoints, Sampling) {
  const LevelTable t = enumerate_levels(make_uniform(2, 1.0 / 3), LevelLimit{Count(15), {}});
  const auto lo = level_points(t.levels, LevelSampling::kRankLo, 100);
  ASSERT_EQ(lo.points.size(), 4u);
  EXPECT_EQ(lo.points[2].rank, 4u);
  const auto ends = level_points(t.levels, LevelSampling::kSpanEnds, 100);
  ASSERT_EQ(ends.points.size(), 7u);  // level 0 has one rank
  const auto all = level_points(t.levels, LevelSampling::kPerRank, 10);
  ASSERT_EQ(all.points.size(), 10u);
  EXPECT_NEAR(all.points[4].freq, 1.0 / 27, 1e-15);
  validate(all);
}

TEST(Exponent, Predicted) {
  EXPECT_NEAR(predicted_exponent(make_uniform(26, 1.0 / 27)), std::log(27.0) / std::log(26.0), 1e-12);
  EXPECT_EQ(predicted_exponent(make_uniform(4, 0.0)), 1.0);
  EXPECT_NEAR(predicted_exponent(make_explicit({0.6, 0.2}, 0.2)), 1.0 / 0.72716015141242592, 1e-12);
}

TEST(Exponent, CompareArithmetic) {
  FitResult f;
  f.slope = -1.02;
  f.r_min = 10;
  f.r_max = 300;
  const Comparison c = compare(f, make_uniform(26, 1.0 / 27));
  EXPECT_NEAR(c.predicted_slope, -std::log(27.0) / std::log(26.0), 1e-12);
  EXPECT_NEAR(c.gap, 1.02 - std::log(27.0) / std::log(26.0), 1e-12);
  EXPECT_EQ(c.r_min, 10u);
  EXPECT_EQ(c.r_max, 300u);
}

TEST(RankFrequencyTsv, RoundTripAndWordCounts) {
  const RankFrequency rf = exact_line(-1.0, -1.1, 40);
  std::stringstream buf;
  write_rank_frequency(buf, rf);
  const RankFrequency back = read_rank_frequency(buf);
  ASSERT_EQ(back.points.size(), rf.points.size());
  for (std::size_t i = 0; i < rf.points.size(); ++i) {
    EXPECT_EQ(back.points[i].rank, rf.points[i].rank);
    EXPECT_EQ(back.points[i].freq, rf.points[i].freq);
  }

  std::istringstream counts("# format: v1\nthe\t6\nof\t3\n<EPS>\t1\n");
  const RankFrequency wc = read_rank_frequency(counts);
  ASSERT_EQ(wc.points.size(), 3u);
  EXPECT_EQ(wc.points[0].freq, 0.6);
  EXPECT_EQ(wc.points[2].rank, 3u);

  std::istringstream bad("1\t0.5\n1\t0.4\n");
  EXPECT_THROW(read_rank_frequency(bad), IoError);
  std::istringstream empty("# nothing\n");
  EXPECT_THROW(read_rank_frequency(empty), IoError);
}

TEST(DefaultWindow, CapsAtTenThousand) {
  EXPECT_EQ(default_window(exact_line(-1, -1, 50)).r_max, 50u);
  EXPECT_EQ(default_window(exact_line(-1, -1, 20000)).r_max, 10000u);
  EXPECT_EQ(default_window(exact_line(-1, -1, 50)).r_min, 10u);
}

}  // namespace
}  // namespace monkey
