#include "monkey/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "monkey/error.hpp"

namespace monkey {

double power_sum(std::span<const double> probs, double gamma) {
  double sum = 0.0;
  for (double p : probs) sum += std::pow(p, gamma);
  return sum;
}

GammaSolution solve_gamma(const Alphabet& alphabet, double tol) {
  if (!(tol > 0.0)) throw ValidationError("gamma tolerance must be positive");
  const auto probs = alphabet.letter_probs();

  GammaSolution sol;
  if (alphabet.space_prob() == 0.0) {
    sol.gamma = 1.0;
    sol.residual = power_sum(probs, 1.0) - 1.0;
    return sol;
  }

  // g is strictly decreasing; find lo with g(lo) > 1 by halving.
  double hi = 1.0;
  double lo = 0.5;
  while (power_sum(probs, lo) <= 1.0) {
    hi = lo;
    lo *= 0.5;
    ++sol.iterations;
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (power_sum(probs, mid) > 1.0)
      lo = mid;
    else
      hi = mid;
    ++sol.iterations;
  }
  sol.gamma = 0.5 * (lo + hi);
  sol.residual = power_sum(probs, sol.gamma) - 1.0;
  return sol;
}

WeightVector::WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw ValidationError("weight vector is empty");
  for (double w : weights_) {
    if (!(w > 0.0) || !std::isfinite(w))
      throw ValidationError("weights must be positive and finite, got " + std::to_string(w));
  }
  for (double w : weights_) exp_sum_ += std::exp(-w);
  const auto [lo, hi] = std::minmax_element(weights_.begin(), weights_.end());
  min_ = *lo;
  max_ = *hi;
  normalized_ = std::abs(exp_sum_ - 1.0) <= kNormalizedTolerance;
  uniform_ = min_ == max_;
}

WeightVector WeightVector::from_alphabet(const Alphabet& alphabet) {
  std::vector<double> weights;
  weights.reserve(alphabet.size());
  for (double p : alphabet.letter_probs()) weights.push_back(-std::log(p));
  return WeightVector(std::move(weights));
}

WeightVector rescale_weights(const Alphabet& alphabet, const GammaSolution& gamma) {
  if (!(gamma.gamma > 0.0)) throw ValidationError("gamma must be positive");
  std::vector<double> weights;
  weights.reserve(alphabet.size());
  for (double p : alphabet.letter_probs()) weights.push_back(-gamma.gamma * std::log(p));
  WeightVector out(std::move(weights));
  if (!out.normalized()) {
    throw ValidationError("gamma " + std::to_string(gamma.gamma) +
                          " does not solve the exponent equation for this alphabet (sum e^-L' = " +
                          std::to_string(out.exp_sum()) + ")");
  }
  return out;
}

}  // namespace monkey
