#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "monkey/alphabet.hpp"
#include "monkey/error.hpp"
#include "monkey/fit.hpp"
#include "monkey/gamma.hpp"
#include "monkey/pyramid.hpp"
#include "monkey/rank_frequency.hpp"
#include "monkey/simulate.hpp"

namespace monkey::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::uint64_t kDefaultWordCap = 100'000'000;
// Fixed so output does not depend on the thread count.
constexpr unsigned kSimulationStreams = 16;
constexpr const char* kHeader = "# format: v1\n";

std::string num(double v, int digits = 17) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::uint64_t env_limit(const char* name, std::uint64_t fallback) {
  const char* value = std::getenv(name);
  if (value == nullptr || *value == '\0') return fallback;
  std::uint64_t parsed = 0;
  const char* end = value + std::strlen(value);
  auto [ptr, ec] = std::from_chars(value, end, parsed);
  if (ec != std::errc() || ptr != end || parsed == 0)
    throw ValidationError(std::string(name) + " must be a positive integer, got '" + value + "'");
  return parsed;
}

std::size_t node_budget() { return env_limit("MONKEY_NODE_BUDGET", kDefaultNodeBudget); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write '" + path + "'");
  f << text;
  f.flush();
  if (!f) throw IoError("error writing '" + path + "'");
}

struct CorpusFlags {
  bool no_fold_case = false;
  bool keep_digits = false;
  bool keep_punctuation = false;
  bool ascii_only = false;
  std::string extra_letters;

  void attach(CLI::App& app) {
    app.add_flag("--no-fold-case", no_fold_case, "Keep upper and lower case letters distinct");
    app.add_flag("--keep-digits", keep_digits, "Treat 0-9 as letters");
    app.add_flag("--keep-punct", keep_punctuation, "Treat ASCII punctuation as letters");
    app.add_flag("--ascii-only", ascii_only, "Drop non-ASCII characters instead of keeping them");
    app.add_option("--extra-letters", extra_letters, "Additional ASCII characters to keep");
  }

  CorpusOptions options() const {
    CorpusOptions o;
    o.fold_case = !no_fold_case;
    o.keep_digits = keep_digits;
    o.keep_punctuation = keep_punctuation;
    o.non_ascii_letters = !ascii_only;
    o.extra_letters = extra_letters;
    return o;
  }
};

struct AlphabetSource {
  std::string file;
  int uniform = 0;
  int gusein_zade = 0;
  std::string corpus;
  double p0 = 0.0;
  CorpusFlags corpus_flags;
  CLI::Option* file_opt = nullptr;
  CLI::Option* uniform_opt = nullptr;
  CLI::Option* gz_opt = nullptr;
  CLI::Option* corpus_opt = nullptr;
  CLI::Option* p0_opt = nullptr;

  void attach(CLI::App& app) {
    file_opt = app.add_option("--alphabet,--alphabet-file", file,
                              "Alphabet file (TSV `space <p0>` / `<id> <prob>`, or JSON)");
    uniform_opt = app.add_option("--uniform", uniform, "N equiprobable letters (needs --p0)");
    gz_opt = app.add_option("--gusein-zade", gusein_zade,
                            "N letters with exponential order-statistic weights (needs --p0)");
    corpus_opt = app.add_option("--corpus", corpus, "Estimate the alphabet from a UTF-8 text file");
    p0_opt = app.add_option("--p0", p0, "Space probability for --uniform / --gusein-zade");
    corpus_flags.attach(app);
  }

  Alphabet load() const {
    const int sources = (file_opt->count() > 0) + (uniform_opt->count() > 0) +
                        (gz_opt->count() > 0) + (corpus_opt->count() > 0);
    if (sources != 1)
      throw UsageError(
          "exactly one alphabet source is required: --alphabet, --uniform, --gusein-zade or --corpus");
    const bool parametric = uniform_opt->count() > 0 || gz_opt->count() > 0;
    if (parametric && p0_opt->count() == 0)
      throw UsageError("--p0 is required with --uniform and --gusein-zade");
    if (!parametric && p0_opt->count() > 0)
      throw UsageError("--p0 only applies to --uniform and --gusein-zade");
    if (file_opt->count() > 0) return load_alphabet_file(file);
    if (uniform_opt->count() > 0) return make_uniform(uniform, p0);
    if (gz_opt->count() > 0) return make_gusein_zade(gusein_zade, p0);
    return estimate_from_corpus(read_file(corpus), corpus_flags.options());
  }
};

struct Output {
  std::string path;

  void attach(CLI::App& app) {
    app.add_option("-o,--out", path, "Write results to this file instead of standard output");
  }
  bool to_file() const { return !path.empty(); }
  void emit(std::ostream& out, const std::string& text) const {
    if (to_file())
      write_file(path, text);
    else
      out << text << std::flush;
  }
};

std::string describe(const Alphabet& a) {
  return "n=" + std::to_string(a.size()) + " letters, p0=" + num(a.space_prob(), 12);
}

// ---------------------------------------------------------------------------

struct GammaCmd {
  AlphabetSource source;
  Output output;

  void attach(CLI::App& app) {
    source.attach(app);
    output.attach(app);
  }

  std::string run() const {
    const Alphabet a = source.load();
    const GammaSolution s = solve_gamma(a);
    std::ostringstream os;
    os << kHeader;
    os << "# gamma = " << num(s.gamma, 12) << ", 1/gamma = " << num(1.0 / s.gamma, 12) << " ("
       << describe(a) << ")\n";
    os << "n=" << a.size() << "\n";
    os << "p0=" << num(a.space_prob()) << "\n";
    os << "gamma=" << num(s.gamma) << "\n";
    os << "inv_gamma=" << num(1.0 / s.gamma) << "\n";
    os << "residual=" << num(s.residual) << "\n";
    os << "iterations=" << s.iterations << "\n";
    return os.str();
  }
};

struct LevelsCmd {
  AlphabetSource source;
  Output output;
  std::uint64_t max_rank = 10'000;
  double max_weight = 0.0;
  bool no_empty_word = false;
  CLI::Option* max_weight_opt = nullptr;

  void attach(CLI::App& app) {
    source.attach(app);
    output.attach(app);
    app.add_option("--max-rank", max_rank, "Stop after the level containing this rank")
        ->capture_default_str();
    max_weight_opt = app.add_option("--max-weight", max_weight,
                                    "Stop after the last level with weight <= this (nats)");
    app.add_flag("--no-empty-word", no_empty_word,
                 "Omit the empty word and shift reported ranks down by one");
  }

  std::string run() const {
    if (max_rank == 0) throw ValidationError("--max-rank must be >= 1");
    const Alphabet a = source.load();
    LevelLimit limit;
    limit.max_rank = Count(max_rank) + (no_empty_word ? 1 : 0);
    if (max_weight_opt->count() > 0) limit.max_weight = max_weight;
    limit.node_budget = node_budget();
    const LevelTable table = enumerate_levels(a, limit);

    const Count shift = no_empty_word ? 1 : 0;
    std::ostringstream os;
    os << kHeader;
    const std::size_t shown = table.levels.size() - (no_empty_word && !table.levels.empty() ? 1 : 0);
    os << "# " << shown << " levels, " << describe(a)
       << (no_empty_word ? ", empty word omitted" : "")
       << (table.truncated ? ", TRUNCATED by node budget" : "") << "\n";
    os << "# rank_lo\trank_hi\tlog10_prob\tweight\tcount\n";
    for (const Level& l : table.levels) {
      if (no_empty_word && l.rank_lo == 1) continue;
      os << to_decimal(l.rank_lo - shift) << '\t' << to_decimal(l.rank_hi - shift) << '\t'
         << num(l.log_prob / std::log(10.0), 15) << '\t' << num(l.weight) << '\t'
         << to_decimal(l.word_count) << '\n';
    }
    return os.str();
  }
};

struct QfunCmd {
  AlphabetSource source;
  Output output;
  double x = 0.0;
  bool rescaled = false;

  void attach(CLI::App& app) {
    source.attach(app);
    output.attach(app);
    app.add_option("--x", x, "Upper end of the argument range (nats)")->required();
    app.add_flag("--rescaled", rescaled, "Use the weights gamma * L_i (sum e^-L = 1)");
  }

  std::string run() const {
    const Alphabet a = source.load();
    const GammaSolution gamma = solve_gamma(a);
    const WeightVector w = rescaled ? rescale_weights(a, gamma) : WeightVector::from_alphabet(a);
    const auto steps = q_tilde_steps(w, x, node_budget());
    std::ostringstream os;
    os << kHeader;
    os << "# Q~ at its " << steps.size() << " jump points up to x=" << num(x, 12) << ", "
       << describe(a) << (rescaled ? ", rescaled weights" : "") << "\n";
    os << "# x\tQ~(x)\n";
    for (const auto& [point, count] : steps) os << num(point) << '\t' << to_decimal(count) << '\n';
    return os.str();
  }
};

struct CertifyCmd {
  AlphabetSource source;
  Output output;
  double x_max = 25.0;

  void attach(CLI::App& app) {
    source.attach(app);
    output.attach(app);
    app.add_option("--x-max", x_max, "Verify the bounds on [0, x_max] (rescaled nats)")
        ->capture_default_str();
  }

  std::string run() const {
    const Alphabet a = source.load();
    const GammaSolution gamma = solve_gamma(a);
    const WeightVector w = rescale_weights(a, gamma);
    const BoundCertificate c = verify_bounds(w, x_max, node_budget());
    std::ostringstream os;
    os << kHeader;
    os << "# c1 = " << num(c.c1, 10) << " < (Q~(x) + 1/(n-1)) e^-x < c2 = " << num(c.c2, 10)
       << " on [0, " << num(c.verified_up_to, 10) << "]: " << (c.holds ? "PASS" : "FAIL") << "\n";
    os << "gamma=" << num(gamma.gamma) << "\n";
    os << "c1=" << num(c.c1) << "\n";
    os << "c2=" << num(c.c2) << "\n";
    os << "base_inf=" << num(c.base_inf) << "\n";
    os << "base_sup=" << num(c.base_sup) << "\n";
    os << "base_interval_end=" << num(c.base_interval_end) << "\n";
    os << "verified_up_to=" << num(c.verified_up_to) << "\n";
    os << "event_count=" << c.event_count << "\n";
    os << "min_q=" << num(c.min_q) << "\n";
    os << "max_q=" << num(c.max_q) << "\n";
    if (c.first_violation) os << "first_violation=" << num(*c.first_violation) << "\n";
    os << "result=" << (c.holds ? "PASS" : "FAIL") << "\n";
    return os.str();
  }
};

struct SimulateCmd {
  AlphabetSource source;
  Output output;
  std::uint64_t n_words = 0;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  bool skip_empty = false;
  CLI::Option* seed_opt = nullptr;

  void attach(CLI::App& app) {
    source.attach(app);
    output.attach(app);
    app.add_option("--n-words", n_words, "Number of words to draw")->required();
    seed_opt = app.add_option("--seed", seed, "RNG seed (required with --out)");
    app.add_option("--threads", threads, "Worker threads (default: hardware concurrency)");
    app.add_flag("--skip-empty", skip_empty, "Drop empty words from the output");
  }

  std::string run(std::ostream& err) const {
    if (output.to_file() && seed_opt->count() == 0)
      throw UsageError("--seed is required when --out is set");
    const std::uint64_t cap = env_limit("MONKEY_WORD_CAP", kDefaultWordCap);
    if (n_words > cap)
      throw ResourceError("--n-words " + std::to_string(n_words) + " exceeds the word cap of " +
                          std::to_string(cap) + " (MONKEY_WORD_CAP)");
    const Alphabet a = source.load();
    std::uint64_t s = seed;
    if (seed_opt->count() == 0) {
      s = (static_cast<std::uint64_t>(std::random_device{}()) << 32) | std::random_device{}();
      err << "# seed=" << s << "\n";
    }
    const unsigned workers = threads > 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
    const FrequencyTable table = generate_words(a, n_words, s, kSimulationStreams, workers);
    std::ostringstream os;
    write_frequency_table(os, table, a, skip_empty);
    return os.str();
  }
};

struct FitCmd {
  Output output;
  std::string in;
  std::vector<std::uint64_t> window;
  std::string plot_csv;

  void attach(CLI::App& app) {
    output.attach(app);
    app.add_option("--in", in, "TSV of `rank<TAB>freq` or `word<TAB>count`")->required();
    app.add_option("--window", window, "Rank window R_MIN R_MAX (default 10 .. min(max rank, 10^4))")
        ->expected(2);
    app.add_option("--plot-csv", plot_csv, "Write lg_r,lg_f,lg_f_fit for the windowed points");
  }

  std::string run() const {
    std::istringstream data(read_file(in));
    const RankFrequency rf = read_rank_frequency(data);
    if (rf.points.empty()) throw ValidationError("no data rows in '" + in + "'");
    const RankWindow w = window.empty() ? default_window(rf) : RankWindow{window[0], window[1]};
    const FitResult f = ols_loglog(rf, w.r_min, w.r_max);

    if (!plot_csv.empty()) {
      std::ostringstream csv;
      csv << "lg_r,lg_f,lg_f_fit\n";
      for (const auto& p : rf.points) {
        if (p.rank < f.r_min || p.rank > f.r_max) continue;
        const double lg_r = std::log10(static_cast<double>(p.rank));
        csv << num(lg_r) << ',' << num(std::log10(p.freq)) << ','
            << num(f.intercept + f.slope * lg_r) << '\n';
      }
      write_file(plot_csv, csv.str());
    }

    std::ostringstream os;
    os << kHeader;
    os << "# lg f = " << num(f.intercept, 8) << " + (" << num(f.slope, 8) << ") lg r over ranks "
       << f.r_min << ".." << f.r_max << ", " << f.n_points << " points, R^2 = "
       << num(f.r_squared, 8) << "\n";
    os << "intercept=" << num(f.intercept) << "\n";
    os << "slope=" << num(f.slope) << "\n";
    os << "exponent=" << num(-f.slope) << "\n";
    os << "r_squared=" << num(f.r_squared) << "\n";
    os << "n_points=" << f.n_points << "\n";
    os << "r_min=" << f.r_min << "\n";
    os << "r_max=" << f.r_max << "\n";
    return os.str();
  }
};

// key=value lines written by `fit`.
FitResult read_fit_report(const std::string& path) {
  std::istringstream in(read_file(path));
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw IoError("'" + path + "': expected key=value, got '" + line + "'");
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  auto get = [&](const char* key) -> const std::string& {
    auto it = kv.find(key);
    if (it == kv.end()) throw IoError("'" + path + "': missing '" + key + "'");
    return it->second;
  };
  FitResult f;
  try {
    f.slope = std::stod(get("slope"));
    f.intercept = std::stod(get("intercept"));
    f.r_squared = std::stod(get("r_squared"));
    f.n_points = std::stoull(get("n_points"));
    f.r_min = std::stoull(get("r_min"));
    f.r_max = std::stoull(get("r_max"));
  } catch (const std::logic_error&) {
    throw IoError("'" + path + "': malformed numeric value");
  }
  return f;
}

struct CompareCmd {
  AlphabetSource source;
  Output output;
  std::string fit_report;
  std::string in;
  std::vector<std::uint64_t> window;

  void attach(CLI::App& app) {
    source.attach(app);
    output.attach(app);
    auto* fit = app.add_option("--fit", fit_report, "Report written by `fit`");
    auto* data = app.add_option("--in", in, "Rank-frequency or word-count TSV to fit here");
    fit->excludes(data);
    app.add_option("--window", window, "Rank window for --in or the model fit")->expected(2);
  }

  std::string run() const {
    const Alphabet a = source.load();
    FitResult f;
    std::string origin;
    if (!fit_report.empty()) {
      if (!window.empty()) throw UsageError("--window does not apply to --fit");
      f = read_fit_report(fit_report);
      origin = "fit-report";
    } else if (!in.empty()) {
      std::istringstream data(read_file(in));
      const RankFrequency rf = read_rank_frequency(data);
      if (rf.points.empty()) throw ValidationError("no data rows in '" + in + "'");
      const RankWindow w = window.empty() ? default_window(rf) : RankWindow{window[0], window[1]};
      f = ols_loglog(rf, w.r_min, w.r_max);
      origin = "rank-frequency";
    } else {
      // The exact model staircase, sampled at both ends of every step.
      const RankWindow w = window.empty() ? RankWindow{10, 10'000} : RankWindow{window[0], window[1]};
      LevelLimit limit;
      limit.max_rank = Count(w.r_max);
      limit.node_budget = node_budget();
      const LevelTable table = enumerate_levels(a, limit);
      if (table.truncated) throw ResourceError("node budget reached before rank " + std::to_string(w.r_max));
      f = ols_loglog(level_points(table.levels, LevelSampling::kSpanEnds, w.r_max), w.r_min, w.r_max);
      origin = "model";
    }
    const Comparison c = compare(f, a);
    const double gamma = solve_gamma(a).gamma;
    std::ostringstream os;
    os << kHeader;
    os << "# fitted slope " << num(c.fitted_slope, 8) << " vs predicted -1/gamma = "
       << num(c.predicted_slope, 8) << " (gap " << num(c.gap, 4) << ", " << origin << ", "
       << describe(a) << ")\n";
    os << "source=" << origin << "\n";
    os << "gamma=" << num(gamma) << "\n";
    os << "inv_gamma=" << num(1.0 / gamma) << "\n";
    os << "predicted_slope=" << num(c.predicted_slope) << "\n";
    os << "fitted_slope=" << num(c.fitted_slope) << "\n";
    os << "gap=" << num(c.gap) << "\n";
    os << "r_min=" << c.r_min << "\n";
    os << "r_max=" << c.r_max << "\n";
    os << "n_points=" << c.n_points << "\n";
    return os.str();
  }
};

struct IngestCmd {
  Output output;
  std::string corpus;
  std::string counts;
  bool rank_freq = false;
  std::string alphabet_out;
  CorpusFlags flags;

  void attach(CLI::App& app) {
    output.attach(app);
    auto* c = app.add_option("--corpus", corpus, "UTF-8 text file");
    auto* k = app.add_option("--counts", counts, "Existing `word<TAB>count` list");
    c->excludes(k);
    app.add_flag("--rank-freq", rank_freq, "Emit `rank<TAB>freq` instead of `word<TAB>count`");
    app.add_option("--alphabet-out", alphabet_out,
                   "Write the estimated alphabet here (JSON if the name ends in .json)");
    flags.attach(app);
  }

  std::string run() const {
    if (corpus.empty() == counts.empty()) throw UsageError("exactly one of --corpus or --counts is required");
    const CorpusOptions options = flags.options();
    CorpusStats stats;
    if (!corpus.empty()) {
      stats = scan_corpus(read_file(corpus), options);
    } else {
      // Each listed occurrence is one word followed by one space.
      std::istringstream in(read_file(counts));
      std::string line;
      std::size_t line_no = 0;
      while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto tab = line.rfind('\t');
        std::uint64_t n = 0;
        const char* first = tab == std::string::npos ? nullptr : line.data() + tab + 1;
        const char* last = line.data() + line.size();
        if (first == nullptr || std::from_chars(first, last, n).ptr != last)
          throw IoError("'" + counts + "' line " + std::to_string(line_no) + ": expected word<TAB>count");
        const std::string word = line.substr(0, tab);
        stats.space_count += n;
        if (word == "<EPS>") {
          stats.word_counts[word] += n;
          continue;
        }
        const CorpusStats one = scan_corpus(word, options);
        for (const auto& [letter, k] : one.letter_counts) stats.letter_counts[letter] += k * n;
        for (const auto& [w, k] : one.word_counts) stats.word_counts[w] += k * n;
      }
    }
    if (stats.word_counts.empty()) throw ValidationError("no words found in the input");

    if (!alphabet_out.empty()) {
      const Alphabet a = alphabet_from_counts(stats.letter_counts, stats.space_count);
      const bool json = alphabet_out.size() >= 5 &&
                        alphabet_out.compare(alphabet_out.size() - 5, 5, ".json") == 0;
      std::ostringstream as;
      if (json)
        as << alphabet_to_json(a) << '\n';
      else
        write_alphabet(as, a);
      write_file(alphabet_out, as.str());
    }

    std::vector<std::pair<std::string, std::uint64_t>> ranked(stats.word_counts.begin(),
                                                              stats.word_counts.end());
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& x, const auto& y) { return x.second > y.second; });
    std::ostringstream os;
    if (rank_freq) {
      std::uint64_t total = 0;
      for (const auto& e : ranked) total += e.second;
      RankFrequency rf;
      rf.points.reserve(ranked.size());
      for (std::size_t i = 0; i < ranked.size(); ++i)
        rf.points.push_back({i + 1, static_cast<double>(ranked[i].second) / static_cast<double>(total)});
      write_rank_frequency(os, rf);
    } else {
      os << kHeader;
      for (const auto& [word, n] : ranked) os << word << '\t' << n << '\n';
    }
    return os.str();
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random-typing word model: exponents, rank structure, bounds, simulation and fits",
               "monkeyzipf"};
  app.require_subcommand(1);

  GammaCmd gamma;
  LevelsCmd levels;
  QfunCmd qfun;
  CertifyCmd certify;
  SimulateCmd simulate;
  FitCmd fit;
  CompareCmd compare_cmd;
  IngestCmd ingest;

  auto* gamma_app = app.add_subcommand("gamma", "Solve sum p_i^gamma = 1");
  auto* levels_app = app.add_subcommand("levels", "Probability classes with rank spans (TSV)");
  auto* qfun_app = app.add_subcommand("qfun", "Q~(x) at its jump points (TSV)");
  auto* certify_app = app.add_subcommand("certify", "Certify c1 < (Q~(x) + 1/(n-1)) e^-x < c2");
  auto* simulate_app = app.add_subcommand("simulate", "Draw words from the typing model (TSV)");
  auto* fit_app = app.add_subcommand("fit", "Log-log OLS fit of a rank-frequency list");
  auto* compare_app = app.add_subcommand("compare", "Fitted slope against -1/gamma");
  auto* ingest_app = app.add_subcommand("ingest", "Corpus or word counts to a ranked list and alphabet");
  gamma.attach(*gamma_app);
  levels.attach(*levels_app);
  qfun.attach(*qfun_app);
  certify.attach(*certify_app);
  simulate.attach(*simulate_app);
  fit.attach(*fit_app);
  compare_cmd.attach(*compare_app);
  ingest.attach(*ingest_app);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  auto emit = [&](const Output& o, const std::string& text) {
    o.emit(out, text);
    return kOk;
  };
  try {
    if (gamma_app->parsed()) return emit(gamma.output, gamma.run());
    if (levels_app->parsed()) return emit(levels.output, levels.run());
    if (qfun_app->parsed()) return emit(qfun.output, qfun.run());
    if (certify_app->parsed()) return emit(certify.output, certify.run());
    if (simulate_app->parsed()) return emit(simulate.output, simulate.run(err));
    if (fit_app->parsed()) return emit(fit.output, fit.run());
    if (compare_app->parsed()) return emit(compare_cmd.output, compare_cmd.run());
    if (ingest_app->parsed()) return emit(ingest.output, ingest.run());
    err << "no subcommand given\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nRun with --help for the flag list.\n";
    return kUsage;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kValidation;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const std::bad_alloc&) {
    err << "resource limit: out of memory\n";
    return kResource;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kIo;
  }
}

}  // namespace monkey::cli
