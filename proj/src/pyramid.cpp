#include "monkey/pyramid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "monkey/error.hpp"

namespace monkey {

Count multinomial(std::span<const std::uint32_t> k) {
  // M(k) = prod_i C(k_1 + ... + k_i, k_i); each binomial built by exact
  // incremental products C(s+j+1, j+1) = C(s+j, j) (s+j+1) / (j+1).
  Count result = 1;
  std::uint64_t prefix = 0;
  for (std::uint32_t ki : k) {
    Count binom = 1;
    for (std::uint64_t j = 0; j < ki; ++j) {
      binom *= prefix + j + 1;
      binom /= j + 1;
    }
    result *= binom;
    prefix += ki;
  }
  return result;
}

Composition make_composition(std::vector<std::uint32_t> k, const WeightVector& weights) {
  if (k.size() != weights.size())
    throw ValidationError("composition has " + std::to_string(k.size()) + " entries for " +
                          std::to_string(weights.size()) + " letters");
  Composition c;
  for (std::size_t i = 0; i < k.size(); ++i) c.weight += k[i] * weights[i];
  c.count = multinomial(k);
  c.k = std::move(k);
  return c;
}

namespace {

void check_weights(const WeightVector& weights) {
  if (weights.min() <= kTieEps)
    throw ValidationError("letter weights must exceed the tie tolerance");
}

[[noreturn]] void budget_exceeded(std::size_t budget) {
  throw ResourceError("lattice region exceeds the node budget of " + std::to_string(budget) +
                      " compositions");
}

// Nested iteration k_i = 0..floor((x - sum_{j<i} k_j L_j) / L_i). `Visit` receives
// (weight, depth-first multinomial factor) for every admissible composition.
class LatticeWalk {
 public:
  LatticeWalk(const WeightVector& weights, double limit, std::size_t budget, bool with_counts)
      : weights_(weights), limit_(limit), budget_(budget), with_counts_(with_counts) {}

  template <class Visit>
  void run(Visit&& visit) {
    walk(0, 0.0, 0, Count(1), visit);
  }

 private:
  template <class Visit>
  void walk(std::size_t i, double weight, std::uint64_t prefix, const Count& factor,
            Visit& visit) {
    const double step = weights_[i];
    const bool last = i + 1 == weights_.size();
    Count binom = 1;  // C(prefix + k, k)
    for (std::uint64_t k = 0;; ++k) {
      const double w = weight + static_cast<double>(k) * step;
      if (w > limit_) break;
      if (last) {
        if (++visited_ > budget_) budget_exceeded(budget_);
        if (with_counts_)
          visit(w, factor * binom);
        else
          visit(w, binom);
      } else if (with_counts_) {
        walk(i + 1, w, prefix + k, factor * binom, visit);
      } else {
        walk(i + 1, w, prefix + k, factor, visit);
      }
      if (with_counts_) {
        binom *= prefix + k + 1;
        binom /= k + 1;
      }
    }
  }

  const WeightVector& weights_;
  double limit_;
  std::size_t budget_;
  bool with_counts_;
  std::size_t visited_ = 0;
};

// Sorted weights with each run of near-equal values collapsed onto its first member.
std::vector<double> merge_ties(std::vector<double> ws) {
  std::sort(ws.begin(), ws.end());
  std::vector<double> out;
  double cluster_start = -std::numeric_limits<double>::infinity();
  for (double w : ws) {
    if (w - cluster_start > kTieEps) {
      out.push_back(w);
      cluster_start = w;
    }
  }
  return out;
}

}  // namespace

Count q_tilde_direct(const WeightVector& weights, double x, std::size_t node_budget) {
  check_weights(weights);
  if (x < -kTieEps) return 0;
  Count total = 0;
  LatticeWalk walk(weights, x + kTieEps, node_budget, /*with_counts=*/true);
  walk.run([&](double, const Count& m) { total += m; });
  return total;
}

std::vector<double> event_points(const WeightVector& weights, double x, std::size_t node_budget) {
  check_weights(weights);
  if (x < -kTieEps) return {};
  std::vector<double> raw;
  LatticeWalk walk(weights, x + kTieEps, node_budget, /*with_counts=*/false);
  walk.run([&](double w, const Count&) { raw.push_back(w); });
  return merge_ties(std::move(raw));
}

Count q_tilde_recursive(const WeightVector& weights, double x, std::size_t node_budget) {
  const std::vector<double> events = event_points(weights, x, node_budget);
  if (events.empty()) return 0;

  // Memo indexed by event point. Q~ is constant between events, and every argument
  // e_j - L_i lies strictly below e_j, so filling the memo in increasing order
  // evaluates the recursion without deep call stacks.
  std::vector<Count> memo(events.size());
  for (std::size_t j = 0; j < events.size(); ++j) {
    Count value = 1;  // Heaviside term, e_j >= 0
    for (double step : weights.weights()) {
      const double y = events[j] - step;
      if (y < -kTieEps) continue;
      const auto it = std::upper_bound(events.begin(), events.end(), y + kTieEps);
      const auto idx = static_cast<std::size_t>(it - events.begin()) - 1;
      if (idx >= j) throw ValidationError("event lattice is not strictly increasing");
      value += memo[idx];
    }
    memo[j] = std::move(value);
  }
  return memo.back();
}

Count rank_of_probability(const Alphabet& alphabet, double f, std::size_t node_budget) {
  const double p0 = alphabet.space_prob();
  if (!(p0 > 0.0)) throw ValidationError("rank_of_probability requires p0 > 0");
  if (!(f > 0.0)) throw ValidationError("probability threshold must be positive");
  const double x = std::log(p0) - std::log(f);
  if (x < -kTieEps)
    throw ValidationError("no word is more probable than the empty word (f > p0)");
  return q_tilde_direct(WeightVector::from_alphabet(alphabet), x, node_budget);
}

namespace {

struct Node {
  double weight;
  Count count;
  std::vector<std::uint32_t> k;
  std::uint32_t total;
  std::uint32_t first_nonzero;  // children use letters 0..first_nonzero
};

struct HeavierFirst {
  bool operator()(const Node& a, const Node& b) const { return a.weight > b.weight; }
};

class LevelBuilder {
 public:
  LevelBuilder(double log_p0, std::vector<Level>& out) : log_p0_(log_p0), out_(out) {}

  // Returns rank_hi of the appended level.
  const Count& append(double weight, Count word_count) {
    Level level;
    level.weight = weight;
    level.rank_lo = out_.empty() ? Count(1) : Count(out_.back().rank_hi + 1);
    level.rank_hi = level.rank_lo + word_count - 1;
    level.word_count = std::move(word_count);
    level.log_prob = log_p0_ - weight;
    out_.push_back(std::move(level));
    return out_.back().rank_hi;
  }

 private:
  double log_p0_;
  std::vector<Level>& out_;
};

LevelTable uniform_levels(const WeightVector& weights, double log_p0, const LevelLimit& limit) {
  // All letters share one weight, so level m is exactly the words of length m.
  LevelTable table;
  LevelBuilder builder(log_p0, table.levels);
  const double step = weights[0];
  const Count n = weights.size();
  Count count = 1;
  for (std::uint64_t m = 0;; ++m) {
    const double weight = static_cast<double>(m) * step;
    if (limit.max_weight && weight > *limit.max_weight + kTieEps) break;
    if (table.levels.size() >= limit.node_budget) {
      table.truncated = true;
      break;
    }
    const Count& hi = builder.append(weight, count);
    if (limit.max_rank && hi >= *limit.max_rank) break;
    count *= n;
  }
  return table;
}

}  // namespace

LevelTable enumerate_levels(const WeightVector& weights, double log_p0, const LevelLimit& limit) {
  check_weights(weights);
  if (!limit.max_rank && !limit.max_weight)
    throw ValidationError("enumerate_levels needs a rank or weight budget");
  if (limit.max_rank && *limit.max_rank < 1) throw ValidationError("rank budget must be positive");
  if (limit.max_weight && *limit.max_weight < 0.0)
    throw ValidationError("weight budget must be nonnegative");
  if (limit.node_budget == 0) throw ValidationError("node budget must be positive");

  if (weights.uniform()) return uniform_levels(weights, log_p0, limit);

  const auto n = static_cast<std::uint32_t>(weights.size());
  LevelTable table;
  LevelBuilder builder(log_p0, table.levels);

  std::vector<Node> heap;
  heap.push_back(Node{0.0, Count(1), std::vector<std::uint32_t>(n, 0), 0, n - 1});

  bool open = false;
  double level_weight = 0.0;
  Count level_count = 0;

  while (!heap.empty()) {
    const double next = heap.front().weight;
    if (open && next - level_weight > kTieEps) {
      const Count& hi = builder.append(level_weight, std::move(level_count));
      open = false;
      level_count = 0;
      if (limit.max_rank && hi >= *limit.max_rank) break;
    }
    if (!open && limit.max_weight && next > *limit.max_weight + kTieEps) break;
    if (heap.size() > limit.node_budget) {
      table.truncated = true;
      open = false;  // the partial level is dropped
      break;
    }

    std::pop_heap(heap.begin(), heap.end(), HeavierFirst{});
    Node node = std::move(heap.back());
    heap.pop_back();

    if (!open) {
      open = true;
      level_weight = node.weight;
    }
    level_count += node.count;

    for (std::uint32_t i = 0; i <= node.first_nonzero; ++i) {
      Node child{node.weight + weights[i], node.count * (node.total + 1), node.k, node.total + 1, i};
      child.count /= node.k[i] + 1;
      ++child.k[i];
      heap.push_back(std::move(child));
      std::push_heap(heap.begin(), heap.end(), HeavierFirst{});
    }
  }
  if (open) builder.append(level_weight, std::move(level_count));
  return table;
}

LevelTable enumerate_levels(const Alphabet& alphabet, const LevelLimit& limit) {
  if (!(alphabet.space_prob() > 0.0))
    throw ValidationError("level log-probabilities need p0 > 0");
  return enumerate_levels(WeightVector::from_alphabet(alphabet), std::log(alphabet.space_prob()),
                          limit);
}

double p_of_rank(std::span<const Level> levels, const Count& r) {
  if (levels.empty() || r < 1 || r > levels.back().rank_hi)
    throw ValidationError("rank " + to_decimal(r) + " is outside the enumerated range");
  const auto it = std::lower_bound(levels.begin(), levels.end(), r,
                                   [](const Level& l, const Count& rank) { return l.rank_hi < rank; });
  return it->log_prob;
}

Count functional_equation_residual(const WeightVector& weights, double x, std::size_t node_budget) {
  Count residual = q_tilde_direct(weights, x, node_budget);
  for (double step : weights.weights()) residual -= q_tilde_direct(weights, x - step, node_budget);
  if (x >= -kTieEps) residual -= 1;
  return residual;
}

std::vector<std::pair<double, Count>> q_tilde_steps(const WeightVector& weights, double x,
                                                    std::size_t node_budget) {
  if (x < -kTieEps) return {};
  LevelLimit limit;
  limit.max_weight = x;
  limit.node_budget = node_budget;
  LevelTable table = enumerate_levels(weights, 0.0, limit);
  if (table.truncated) budget_exceeded(node_budget);
  std::vector<std::pair<double, Count>> steps;
  steps.reserve(table.levels.size());
  for (Level& level : table.levels) steps.emplace_back(level.weight, std::move(level.rank_hi));
  return steps;
}

BoundCertificate verify_bounds(const WeightVector& weights, double x_max, std::size_t node_budget) {
  const std::size_t n = weights.size();
  if (n < 2) throw ValidationError("bound certificate needs n >= 2 (the 1/(n-1) shift)");
  if (!weights.normalized())
    throw ValidationError("bound certificate needs normalized weights (sum e^-L = 1), got sum " +
                          std::to_string(weights.exp_sum()));
  if (!(x_max > weights.max()))
    throw ValidationError("x_max must exceed L_max = " + std::to_string(weights.max()));

  const auto steps = q_tilde_steps(weights, x_max, node_budget);
  const double shift = 1.0 / static_cast<double>(n - 1);
  const double base_end = weights.max();

  // ln q(x) on the constant piece holding `count`.
  auto log_q = [&](const Count& count, double x) {
    const double log_shifted = count < (Count(1) << 52)
                                   ? std::log(to_double(count) + shift)
                                   : log_count(count);
    return log_shifted - x;
  };

  struct Piece {
    double log_sup;
    double log_inf;
    double start;
  };
  std::vector<Piece> pieces;
  pieces.reserve(steps.size());

  double log_base_sup = -std::numeric_limits<double>::infinity();
  double log_base_inf = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < steps.size(); ++j) {
    const auto& [start, count] = steps[j];
    const double end = j + 1 < steps.size() ? steps[j + 1].first : x_max;
    pieces.push_back({log_q(count, start), log_q(count, end), start});
    if (start <= base_end + kTieEps) {
      const double base_piece_end = std::clamp(end, start, std::max(start, base_end));
      log_base_sup = std::max(log_base_sup, pieces.back().log_sup);
      log_base_inf = std::min(log_base_inf, log_q(count, base_piece_end));
    }
  }

  BoundCertificate cert;
  cert.base_sup = std::exp(log_base_sup);
  cert.base_inf = std::exp(log_base_inf);
  cert.c1 = cert.base_inf * (1.0 - kCertificateMargin);
  cert.c2 = cert.base_sup * (1.0 + kCertificateMargin);
  cert.base_interval_end = base_end;
  cert.verified_up_to = x_max;
  cert.event_count = steps.size();

  const double log_c1 = std::log(cert.c1);
  const double log_c2 = std::log(cert.c2);
  double log_min = std::numeric_limits<double>::infinity();
  double log_max = -std::numeric_limits<double>::infinity();
  for (const Piece& piece : pieces) {
    log_min = std::min(log_min, piece.log_inf);
    log_max = std::max(log_max, piece.log_sup);
    if (!cert.first_violation && !(piece.log_inf > log_c1 && piece.log_sup < log_c2))
      cert.first_violation = piece.start;
  }
  cert.min_q = std::exp(log_min);
  cert.max_q = std::exp(log_max);
  cert.holds = !cert.first_violation.has_value();
  return cert;
}

}  // namespace monkey
