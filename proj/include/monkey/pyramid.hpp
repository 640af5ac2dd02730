#ifndef MONKEY_PYRAMID_HPP
#define MONKEY_PYRAMID_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "monkey/alphabet.hpp"
#include "monkey/count.hpp"
#include "monkey/gamma.hpp"

namespace monkey {

/// Weights closer than this (nats) are one probability class.
inline constexpr double kTieEps = 1e-9;

/// Default cap on compositions visited (or live in the best-first queue).
inline constexpr std::size_t kDefaultNodeBudget = 10'000'000;

/// (sum k)! / prod k_i!, as a product of exact binomials so nothing overflows.
Count multinomial(std::span<const std::uint32_t> k);

/// Letter multiplicities of a word class; every word with this composition has
/// probability p0 * prod p_i^{k_i}.
struct Composition {
  std::vector<std::uint32_t> k;
  double weight = 0.0;  // sum k_i L_i
  Count count;          // multinomial(k)
};

Composition make_composition(std::vector<std::uint32_t> k, const WeightVector& weights);

/// One probability class of the ranked word list.
struct Level {
  double weight = 0.0;
  Count word_count;
  Count rank_lo;  // inclusive
  Count rank_hi;  // inclusive
  double log_prob = 0.0;  // ln p0 - weight
};

struct LevelLimit {
  std::optional<Count> max_rank;     // stop after the level containing this rank
  std::optional<double> max_weight;  // stop after the last level with weight <= this
  std::size_t node_budget = kDefaultNodeBudget;
};

struct LevelTable {
  std::vector<Level> levels;
  bool truncated = false;  // node budget hit; `levels` is the complete prefix
};

/// Q~(x): number of words (empty word included) with weight <= x. Zero for x < 0.
/// Bounded nested iteration over the lattice region, summing multinomials.
/// Throws ResourceError once more than `node_budget` compositions are visited.
Count q_tilde_direct(const WeightVector& weights, double x,
                     std::size_t node_budget = kDefaultNodeBudget);

/// Same value, from Q~(x) = sum_i Q~(x - L_i) + H(x) memoized on the reachable
/// weight sums (event points) below x.
Count q_tilde_recursive(const WeightVector& weights, double x,
                        std::size_t node_budget = kDefaultNodeBudget);

/// Distinct weight sums <= x in increasing order (ties merged within kTieEps).
std::vector<double> event_points(const WeightVector& weights, double x,
                                 std::size_t node_budget = kDefaultNodeBudget);

/// Q(f): rank of the last word with probability >= f. Requires 0 < f <= p0.
Count rank_of_probability(const Alphabet& alphabet, double f,
                          std::size_t node_budget = kDefaultNodeBudget);

/// Probability classes in increasing weight order with cumulative rank spans,
/// enumerated best-first from the empty word. At least one limit must be set.
LevelTable enumerate_levels(const Alphabet& alphabet, const LevelLimit& limit);
LevelTable enumerate_levels(const WeightVector& weights, double log_p0, const LevelLimit& limit);

/// ln p(r) for the level whose rank span contains r.
double p_of_rank(std::span<const Level> levels, const Count& r);

/// Q~(x) - sum_i Q~(x - L_i) - H(x); identically zero.
Count functional_equation_residual(const WeightVector& weights, double x,
                                   std::size_t node_budget = kDefaultNodeBudget);

/// Witness constants for c1 < (Q~(x) + 1/(n-1)) e^{-x} < c2.
struct BoundCertificate {
  double c1 = 0.0;
  double c2 = 0.0;
  double base_inf = 0.0;  // exact infimum of q over [0, L_max]
  double base_sup = 0.0;  // exact supremum of q over [0, L_max]
  double base_interval_end = 0.0;
  double verified_up_to = 0.0;
  std::size_t event_count = 0;
  bool holds = false;
  std::optional<double> first_violation;
  double min_q = 0.0;  // infimum of q over the whole verified range
  double max_q = 0.0;  // supremum of q over the whole verified range
};

/// Relative slack put between the exact base extrema and c1/c2. The extrema are
/// attained (q(0) is the supremum, q(L_max) can be the infimum), so strict bounds
/// need some room; it also absorbs rounding in e^{-x}.
inline constexpr double kCertificateMargin = 1e-9;

/// Computes c1, c2 exactly over the base interval [0, L_max] from the piecewise
/// constant structure of Q~, then checks every constant piece up to x_max.
/// `weights` must be normalized. Throws ValidationError on bad input and
/// ResourceError when the event list exceeds the node budget.
BoundCertificate verify_bounds(const WeightVector& weights, double x_max,
                               std::size_t node_budget = kDefaultNodeBudget);

/// (event point, Q~ at that point) for every jump of Q~ up to x.
std::vector<std::pair<double, Count>> q_tilde_steps(const WeightVector& weights, double x,
                                                    std::size_t node_budget = kDefaultNodeBudget);

}  // namespace monkey

#endif  // MONKEY_PYRAMID_HPP
