// End-to-end acceptance criteria. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. Tolerances, sample sizes and time limits are fixed here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "monkey/alphabet.hpp"
#include "monkey/error.hpp"
#include "monkey/fit.hpp"
#include "monkey/gamma.hpp"
#include "monkey/oracle.hpp"
#include "monkey/pyramid.hpp"
#include "monkey/simulate.hpp"
#include "test_support.hpp"

namespace {

using namespace monkey;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double time_limit_s;
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// 1. Uniform alphabets: gamma = ln n / (ln n - ln(1 - p0)) within 1e-10.
Outcome exponent_closed_form() {
  Outcome o;
  double worst = 0.0;
  for (int n = 2; n <= 40; ++n) {
    for (double p0 : {0.0, 0.01, 1.0 / 27, 0.3}) {
      const double expected = std::log(n) / (std::log(n) - std::log1p(-p0));
      const double err = std::abs(solve_gamma(make_uniform(n, p0)).gamma - expected);
      worst = std::max(worst, err);
      o.require(err <= 1e-10, fmt("n=%.0f p0=%.4f error %.3g", n, p0, err));
    }
  }
  const double inv = predicted_exponent(make_uniform(26, 1.0 / 27));
  const double ln_ratio = std::log(27.0) / std::log(26.0);
  o.require(std::abs(inv - ln_ratio) <= 1e-10, fmt("1/gamma=%.12f vs ln27/ln26=%.12f", inv, ln_ratio));
  if (o.pass) o.detail = fmt("max |error| %.2e; n=26,p0=1/27: 1/gamma=%.9f = ln27/ln26", worst, inv);
  return o;
}

// 2. q_tilde_direct == q_tilde_recursive exactly on >= 500 instances with Q~ <= 1e7.
Outcome evaluator_equivalence() {
  Outcome o;
  std::mt19937_64 rng(20240502);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Count cap = 10'000'000;
  int instances = 0, rejected = 0;
  Count largest = 0;
  while (instances < 500) {
    const std::size_t n = 2 + static_cast<std::size_t>(instances % 3);
    Alphabet a = testing::random_alphabet(rng, n);
    if (instances % 50 == 0) a = make_explicit({0.5, 0.25}, 0.25);  // exact ties
    if (instances % 50 == 25) a = make_uniform(static_cast<int>(n), 0.2);
    const WeightVector w = WeightVector::from_alphabet(a);
    const double gamma = solve_gamma(a).gamma;
    const double x = u(rng) * std::log(1e7) / gamma;
    const Count direct = q_tilde_direct(w, x);
    if (direct > cap) {
      ++rejected;
      continue;
    }
    const Count recursive = q_tilde_recursive(w, x);
    o.require(direct == recursive, "mismatch at x=" + std::to_string(x) + ": " +
                                       to_decimal(direct) + " vs " + to_decimal(recursive));
    largest = std::max(largest, direct);
    ++instances;
  }
  if (o.pass)
    o.detail = std::to_string(instances) + " instances equal (largest Q~ " + to_decimal(largest) +
               ", " + std::to_string(rejected) + " over-cap draws redrawn)";
  return o;
}

// 3. Lattice machinery vs brute-force oracle for n <= 3, max_len <= 8.
Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Alphabet> alphabets{make_uniform(2, 1.0 / 3), make_explicit({0.6, 0.2}, 0.2),
                                  make_explicit({0.5, 0.25}, 0.25), make_gusein_zade(3, 0.2)};
  for (int i = 0; i < 4; ++i) alphabets.push_back(testing::random_alphabet(rng, 2 + i % 2));

  std::size_t levels_checked = 0, queries = 0;
  for (const Alphabet& a : alphabets) {
    const auto list = oracle::enumerate_all(a, 8);
    const auto expected = oracle::oracle_levels(list);
    const LevelTable got = enumerate_levels(a, LevelLimit{Count(expected.back().rank_hi), {}});
    o.require(got.levels.size() >= expected.size(), "pyramid produced too few levels");
    for (std::size_t i = 0; i < expected.size() && i < got.levels.size(); ++i) {
      const Level& l = got.levels[i];
      const auto& e = expected[i];
      o.require(l.word_count == e.word_count && l.rank_lo == e.rank_lo && l.rank_hi == e.rank_hi &&
                    std::abs(l.log_prob - e.log_prob) <= 1e-10,
                "level " + std::to_string(i) + " differs");
      ++levels_checked;
    }

    // Paper anchors.
    o.require(rank_of_probability(a, a.space_prob()) == 1, "Q(p0) != 1");
    o.require(oracle::oracle_rank_of_probability(list, a.space_prob()) == 1, "oracle Q(p0) != 1");
    if (a.letter_prob(0) > a.letter_prob(1)) {
      const double f = a.space_prob() * a.max_letter_prob();
      o.require(rank_of_probability(a, f) == 2, "Q(p'p0) != 2");
      o.require(oracle::oracle_rank_of_probability(list, f) == 2, "oracle Q(p'p0) != 2");
    }

    const double log_lo = list.log_unlisted_bound + 1e-9;
    const double log_hi = std::log(a.space_prob());
    for (int k = 0; k < 100; ++k) {
      const double f = std::exp(log_lo + (log_hi - log_lo) * u(rng));
      o.require(rank_of_probability(a, f) == oracle::oracle_rank_of_probability(list, f),
                "Q(f) differs at f=" + std::to_string(f));
      ++queries;
    }
    const std::uint64_t reliable = oracle::reliable_prefix(list);
    std::uniform_int_distribution<std::uint64_t> pick(1, reliable);
    for (int k = 0; k < 100; ++k) {
      const std::uint64_t r = pick(rng);
      o.require(std::abs(p_of_rank(got.levels, r) - oracle::oracle_log_p_of_rank(list, r)) <= 1e-10,
                "p(r) differs at r=" + std::to_string(r));
      ++queries;
    }
  }
  if (o.pass)
    o.detail = std::to_string(alphabets.size()) + " alphabets, " + std::to_string(levels_checked) +
               " levels and " + std::to_string(queries) + " Q(f)/p(r) queries match";
  return o;
}

// 4. Functional-equation residual is exactly zero.
Outcome functional_equation() {
  Outcome o;
  std::mt19937_64 rng(4);
  std::size_t points = 0;
  for (int t = 0; t < 6; ++t) {
    const Alphabet a = testing::random_alphabet(rng, 2 + t % 3);
    const WeightVector w = WeightVector::from_alphabet(a);
    std::uniform_real_distribution<double> u(-2.0, std::log(2e5) / solve_gamma(a).gamma);
    for (int i = 0; i < 200; ++i) {
      const double x = u(rng);
      o.require(functional_equation_residual(w, x) == 0, "nonzero residual at x=" + std::to_string(x));
      ++points;
    }
  }
  if (o.pass) o.detail = std::to_string(points) + " points over 6 alphabets, residual 0";
  return o;
}

// 5. Bound certificate to x_max = 25 for >= 20 random normalized weight vectors,
// plus ln Q~(x) / x within gamma +- 0.02 at the largest feasible x.
Outcome boundedness_certificate() {
  Outcome o;
  std::mt19937_64 rng(555);
  constexpr double kCompositionTarget = 4e5;
  constexpr double kXCap = 250.0;
  double worst_slope_gap = 0.0, smallest_x = kXCap;
  for (int t = 0; t < 24; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 4);
    const WeightVector w = testing::random_normalized_weights(rng, n);
    const BoundCertificate cert = verify_bounds(w, 25.0);
    o.require(cert.holds && cert.c1 > 0 && cert.c1 < cert.c2,
              "certificate fails for vector " + std::to_string(t));

    // Largest feasible x: lattice simplex volume x^n / (n! prod L_i) near the target.
    double volume_scale = 1.0;
    for (std::size_t i = 0; i < n; ++i) volume_scale *= w[i] * static_cast<double>(i + 1);
    const double x = std::min(kXCap, std::pow(kCompositionTarget * volume_scale, 1.0 / n));
    const double slope = log_count(q_tilde_direct(w, x)) / x;
    const double gap = std::abs(slope - 1.0);
    worst_slope_gap = std::max(worst_slope_gap, gap);
    smallest_x = std::min(smallest_x, x);
    o.require(gap <= 0.02, fmt("vector %.0f: ln Q~(x)/x = %.5f at x = %.1f", t, slope, x));
  }
  if (o.pass)
    o.detail = fmt("24 vectors certified to x=25; max |ln Q~(x)/x - 1| = %.4f (x >= %.1f)",
                   worst_slope_gap, smallest_x);
  return o;
}

// 6. Simulation -> OLS over ranks 10..300 within 0.1 of -1/gamma.
Outcome monte_carlo_end_to_end() {
  Outcome o;
  const Alphabet a = make_gusein_zade(5, 0.18);
  const FrequencyTable t = generate_words(a, 1'000'000, 20240601, 4, 4);
  const FitResult fit = ols_loglog(empirical_rank_freq(t), 10, 300);
  const Comparison c = compare(fit, a);
  o.require(c.gap <= 0.1, fmt("slope %.4f vs predicted %.4f (gap %.4f)", c.fitted_slope,
                              c.predicted_slope, c.gap));
  if (o.pass)
    o.detail = fmt("slope %.4f vs predicted %.4f, gap %.4f", c.fitted_slope, c.predicted_slope, c.gap);
  return o;
}

// 7. OLS recovers exact synthetic lines.
Outcome ols_exactness() {
  Outcome o;
  double worst = 0.0;
  for (auto [b0, b1] : {std::pair{-1.0, -1.0}, {-1.05182, -1.00026}, {0.3, -1.7}, {-2.0, -0.5}}) {
    RankFrequency rf;
    for (std::uint64_t r = 1; r <= 1000; ++r)
      rf.points.push_back({r, std::pow(10.0, b0 + b1 * std::log10(static_cast<double>(r)))});
    const FitResult f = ols_loglog(rf, 1, 1000);
    const double err = std::max(std::abs(f.intercept - b0), std::abs(f.slope - b1));
    worst = std::max(worst, err);
    o.require(err <= 1e-12 && std::abs(f.r_squared - 1.0) <= 1e-12,
              fmt("line (%.5f, %.5f): error %.3g", b0, b1, err));
  }
  if (o.pass) o.detail = fmt("max coefficient error %.2e, R^2 = 1", worst);
  return o;
}

// 8. Empty-word and single-letter frequencies within 4 standard errors.
Outcome simulation_consistency() {
  Outcome o;
  constexpr std::uint64_t kWords = 1'000'000;
  double worst_z = 0.0;
  for (const Alphabet& a : {make_gusein_zade(5, 0.18), make_explicit({0.6, 0.2}, 0.2)}) {
    const FrequencyTable t = generate_words(a, kWords, 8080, 4, 4);
    auto check = [&](const WordKey& word, double p, const std::string& name) {
      const double freq = static_cast<double>(t.count(word)) / kWords;
      const double z = std::abs(freq - p) / std::sqrt(p * (1 - p) / kWords);
      worst_z = std::max(worst_z, z);
      o.require(z <= 4.0, fmt("z = %.2f for ", z) + name);
    };
    check("", a.space_prob(), "<EPS>");
    for (std::size_t i = 0; i < a.size(); ++i)
      check(WordKey(1, static_cast<char>(i)), a.letter_prob(i) * a.space_prob(), a.label(i));
  }
  if (o.pass) o.detail = fmt("max |z| = %.2f over 9 words", worst_z);
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "exponent closed form", 1.0, exponent_closed_form},
      {"AC2", "evaluator equivalence", 60.0, evaluator_equivalence},
      {"AC3", "oracle equivalence", 60.0, oracle_equivalence},
      {"AC4", "functional-equation identity", 60.0, functional_equation},
      {"AC5", "boundedness certificate", 300.0, boundedness_certificate},
      {"AC6", "Monte Carlo end-to-end", 120.0, monte_carlo_end_to_end},
      {"AC7", "OLS exactness", 1.0, ols_exactness},
      {"AC8", "simulation model consistency", 120.0, simulation_consistency},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.time_limit_s) {
      o.pass = false;
      o.detail += fmt(" [over time limit %.0f s]", c.time_limit_s);
    }
    std::printf("[%s] %s %-30s %7.2f s  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs,
                o.detail.c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
