#ifndef MONKEY_GAMMA_HPP
#define MONKEY_GAMMA_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "monkey/alphabet.hpp"

namespace monkey {

/// Root of sum_i p_i^gamma = 1. The rank exponent of p(r) is 1/gamma.
struct GammaSolution {
  double gamma = 1.0;
  double residual = 0.0;  // sum_i p_i^gamma - 1 at the returned root
  int iterations = 0;
};

/// g(gamma) = sum_i p_i^gamma.
double power_sum(std::span<const double> probs, double gamma);

/// Bisection on the monotone bracket (lo, 1]; g(1) = 1 - p0 <= 1 and g -> n as gamma -> 0+.
/// Stops when the bracket is narrower than `tol`.
GammaSolution solve_gamma(const Alphabet& alphabet, double tol = 1e-14);

/// Log-weights L_i (nats) of the lattice geometry.
class WeightVector {
 public:
  static constexpr double kNormalizedTolerance = 1e-12;

  /// Throws ValidationError unless every weight is positive and finite.
  explicit WeightVector(std::vector<double> weights);

  /// L_i = -ln p_i. Normalized only when p0 == 0.
  static WeightVector from_alphabet(const Alphabet& alphabet);

  std::size_t size() const { return weights_.size(); }
  std::span<const double> weights() const { return weights_; }
  double operator[](std::size_t i) const { return weights_[i]; }

  /// sum_i e^{-L_i} == 1 within kNormalizedTolerance.
  bool normalized() const { return normalized_; }
  double exp_sum() const { return exp_sum_; }
  double max() const { return max_; }
  double min() const { return min_; }
  /// All weights bitwise equal; enables exact integer level indexing.
  bool uniform() const { return uniform_; }

 private:
  std::vector<double> weights_;
  double exp_sum_ = 0.0;
  double max_ = 0.0;
  double min_ = 0.0;
  bool normalized_ = false;
  bool uniform_ = false;
};

/// L'_i = gamma * (-ln p_i), so that sum_i e^{-L'_i} = 1. Throws ValidationError if
/// `gamma` does not solve the exponent equation for this alphabet.
WeightVector rescale_weights(const Alphabet& alphabet, const GammaSolution& gamma);

}  // namespace monkey

#endif  // MONKEY_GAMMA_HPP
