#ifndef MONKEY_ALPHABET_HPP
#define MONKEY_ALPHABET_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace monkey {

/// Letter probabilities p_1..p_n and the space probability p_0 of the typing model.
///
/// Construction validates and canonicalizes: letters are sorted by nonincreasing
/// probability (labels travel with them), and inputs within the normalization
/// tolerance are rescaled so that sum(p_i) + p_0 == 1 up to rounding.
class Alphabet {
 public:
  static constexpr double kNormalizationTolerance = 1e-12;

  /// Throws ValidationError. Empty `labels` means default labels in canonical order.
  Alphabet(std::vector<double> letter_probs, double space_prob,
           std::vector<std::string> labels = {});

  std::size_t size() const { return probs_.size(); }
  std::span<const double> letter_probs() const { return probs_; }
  double letter_prob(std::size_t i) const { return probs_[i]; }
  double space_prob() const { return space_prob_; }
  double max_letter_prob() const { return probs_.front(); }
  std::span<const std::string> labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }

  /// Index of the letter with this label, or size() if absent.
  std::size_t find_label(std::string_view label) const;

 private:
  std::vector<double> probs_;
  double space_prob_;
  std::vector<std::string> labels_;
};

/// a..z, A..Z, 0..9, then "[62]", "[63]", ... Prefix-free, so words render unambiguously.
std::vector<std::string> default_labels(std::size_t n);

Alphabet make_uniform(int n, double p0);

/// p_i = (1 - p0) (H_n - H_{i-1}) / n: the mean of the i-th largest of n unit
/// exponentials, normalized.
Alphabet make_gusein_zade(int n, double p0);

Alphabet make_explicit(std::vector<double> probs, double p0,
                       std::vector<std::string> labels = {});

/// Which characters of a corpus count as letters. Whitespace is always the space
/// symbol; everything else that is not a letter is dropped.
struct CorpusOptions {
  bool fold_case = true;          // ASCII only
  bool keep_digits = false;       // treat 0-9 as letters
  bool keep_punctuation = false;  // treat ASCII punctuation as letters
  bool non_ascii_letters = true;  // any non-ASCII code point is a letter
  std::string extra_letters;      // additional ASCII characters to keep
};

struct CorpusStats {
  std::map<std::string, std::uint64_t> letter_counts;
  std::uint64_t space_count = 0;
  std::map<std::string, std::uint64_t> word_counts;
};

/// Splits UTF-8 text into letter/space events. A maximal whitespace run is one space.
CorpusStats scan_corpus(std::string_view text, const CorpusOptions& options = {});

/// Maximum-likelihood alphabet from raw counts.
Alphabet alphabet_from_counts(const std::map<std::string, std::uint64_t>& letter_counts,
                              std::uint64_t space_count);

Alphabet estimate_from_corpus(std::string_view text, const CorpusOptions& options = {});
Alphabet estimate_from_corpus(std::istream& in, const CorpusOptions& options = {});

/// Plain-text form: `space <p0>` then one `<label> <prob>` line per letter.
/// Lines starting with '#' are comments. Parse errors throw IoError.
void write_alphabet(std::ostream& out, const Alphabet& alphabet);
Alphabet read_alphabet(std::istream& in);

/// {"space": p0, "letters": [{"id": "a", "prob": 0.5}, ...]}
std::string alphabet_to_json(const Alphabet& alphabet);
Alphabet alphabet_from_json(std::string_view text);

/// Loads either format, chosen by content (a leading '{' means JSON).
Alphabet load_alphabet_file(const std::string& path);

}  // namespace monkey

#endif  // MONKEY_ALPHABET_HPP
