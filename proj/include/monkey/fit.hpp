#ifndef MONKEY_FIT_HPP
#define MONKEY_FIT_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "monkey/alphabet.hpp"
#include "monkey/pyramid.hpp"
#include "monkey/rank_frequency.hpp"

namespace monkey {

/// lg f = intercept + slope * lg r over the points with rank in [r_min, r_max].
struct FitResult {
  double intercept = 0.0;  // decimal log of the fitted frequency at rank 1
  double slope = 0.0;
  double r_squared = 0.0;
  std::size_t n_points = 0;
  std::uint64_t r_min = 0;
  std::uint64_t r_max = 0;
};

/// Ordinary least squares in log-log space. Throws ValidationError with fewer than
/// three points in the window.
FitResult ols_loglog(const RankFrequency& points, std::uint64_t r_min, std::uint64_t r_max);

/// lg f_i - (intercept + slope lg r_i) for the windowed points, in rank order.
std::vector<double> fit_residuals(const RankFrequency& points, const FitResult& fit);

/// r_min = 10, r_max = min(largest observed rank, 10^4).
struct RankWindow {
  std::uint64_t r_min;
  std::uint64_t r_max;
};
RankWindow default_window(const RankFrequency& points);

/// How a step-function level table turns into fit points.
enum class LevelSampling {
  kRankLo,    // one point per level at its first rank
  kSpanEnds,  // the two corners of each step: rank_lo and rank_hi
  kPerRank,   // every rank (only sensible for small tables)
};

/// Level probabilities as fit points, up to `max_rank`.
RankFrequency level_points(std::span<const Level> levels, LevelSampling sampling,
                           std::uint64_t max_rank);

/// 1/gamma, the theoretical exponent of p(r) ~ r^(-1/gamma).
double predicted_exponent(const Alphabet& alphabet);

struct Comparison {
  double fitted_slope = 0.0;
  double predicted_slope = 0.0;  // -1/gamma
  double gap = 0.0;              // |fitted - predicted|
  std::uint64_t r_min = 0;
  std::uint64_t r_max = 0;
  std::size_t n_points = 0;
};

Comparison compare(const FitResult& fit, const Alphabet& alphabet);

}  // namespace monkey

#endif  // MONKEY_FIT_HPP
