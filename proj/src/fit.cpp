#include "monkey/fit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "monkey/error.hpp"
#include "monkey/gamma.hpp"

namespace monkey {
namespace {

template <class Fn>
void for_each_in_window(const RankFrequency& points, std::uint64_t r_min, std::uint64_t r_max,
                        Fn&& fn) {
  for (const auto& p : points.points) {
    if (p.rank < r_min || p.rank > r_max) continue;
    if (!(p.freq > 0.0)) throw ValidationError("log-log fit needs positive frequencies");
    fn(std::log10(static_cast<double>(p.rank)), std::log10(p.freq));
  }
}

}  // namespace

FitResult ols_loglog(const RankFrequency& points, std::uint64_t r_min, std::uint64_t r_max) {
  if (r_min < 1 || r_max < r_min) throw ValidationError("rank window must satisfy 1 <= r_min <= r_max");

  // Two passes: means first, then centered sums, which keeps the normal
  // equations well conditioned for long windows.
  std::size_t n = 0;
  double sx = 0.0, sy = 0.0;
  for_each_in_window(points, r_min, r_max, [&](double x, double y) {
    ++n;
    sx += x;
    sy += y;
  });
  if (n < 3)
    throw ValidationError("need at least 3 points with rank in [" + std::to_string(r_min) + ", " +
                          std::to_string(r_max) + "], got " + std::to_string(n));
  const double mx = sx / static_cast<double>(n);
  const double my = sy / static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for_each_in_window(points, r_min, r_max, [&](double x, double y) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
    syy += (y - my) * (y - my);
  });

  FitResult fit;
  fit.n_points = n;
  fit.r_min = r_min;
  fit.r_max = r_max;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for_each_in_window(points, r_min, r_max, [&](double x, double y) {
    const double e = y - (fit.intercept + fit.slope * x);
    ss_res += e * e;
  });
  // Flat data is fitted perfectly by a flat line.
  fit.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
  return fit;
}

std::vector<double> fit_residuals(const RankFrequency& points, const FitResult& fit) {
  std::vector<double> out;
  for_each_in_window(points, fit.r_min, fit.r_max, [&](double x, double y) {
    out.push_back(y - (fit.intercept + fit.slope * x));
  });
  return out;
}

RankWindow default_window(const RankFrequency& points) {
  const std::uint64_t largest = points.points.empty() ? 0 : points.points.back().rank;
  return {10, std::min<std::uint64_t>(largest, 10'000)};
}

RankFrequency level_points(std::span<const Level> levels, LevelSampling sampling,
                           std::uint64_t max_rank) {
  RankFrequency rf;
  auto push = [&](const Count& rank, double log_prob) {
    const auto r = static_cast<std::uint64_t>(rank);
    if (rf.points.empty() || rf.points.back().rank < r) rf.points.push_back({r, std::exp(log_prob)});
  };
  for (const Level& level : levels) {
    if (level.rank_lo > max_rank) break;
    switch (sampling) {
      case LevelSampling::kRankLo:
        push(level.rank_lo, level.log_prob);
        break;
      case LevelSampling::kSpanEnds:
        push(level.rank_lo, level.log_prob);
        if (level.rank_hi <= max_rank) push(level.rank_hi, level.log_prob);
        break;
      case LevelSampling::kPerRank: {
        const Count last = std::min<Count>(level.rank_hi, max_rank);
        for (Count r = level.rank_lo; r <= last; ++r) push(r, level.log_prob);
        break;
      }
    }
  }
  return rf;
}

double predicted_exponent(const Alphabet& alphabet) { return 1.0 / solve_gamma(alphabet).gamma; }

Comparison compare(const FitResult& fit, const Alphabet& alphabet) {
  Comparison c;
  c.fitted_slope = fit.slope;
  c.predicted_slope = -predicted_exponent(alphabet);
  c.gap = std::abs(c.fitted_slope - c.predicted_slope);
  c.r_min = fit.r_min;
  c.r_max = fit.r_max;
  c.n_points = fit.n_points;
  return c;
}

}  // namespace monkey
