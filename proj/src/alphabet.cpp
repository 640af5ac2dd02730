#include "monkey/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <optional>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "monkey/error.hpp"

namespace monkey {
namespace {

bool is_reserved_label(std::string_view label) {
  return label == "space" || label == "<EPS>";
}

void check_label(std::string_view label) {
  if (label.empty()) throw ValidationError("letter label must be nonempty");
  for (char c : label) {
    if (std::isspace(static_cast<unsigned char>(c)))
      throw ValidationError("letter label '" + std::string(label) + "' contains whitespace");
  }
  if (is_reserved_label(label))
    throw ValidationError("letter label '" + std::string(label) + "' is reserved");
}

std::string format_double(double v, int digits = 17) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

std::string describe(double v) { return format_double(v, 12); }

}  // namespace

Alphabet::Alphabet(std::vector<double> letter_probs, double space_prob,
                   std::vector<std::string> labels)
    : space_prob_(space_prob) {
  const std::size_t n = letter_probs.size();
  if (n < 2) throw ValidationError("alphabet needs at least 2 letters, got " + std::to_string(n));
  if (!(space_prob >= 0.0 && space_prob < 1.0))
    throw ValidationError("space probability must lie in [0,1), got " + describe(space_prob));
  for (double p : letter_probs) {
    if (!(p > 0.0) || !std::isfinite(p))
      throw ValidationError("letter probabilities must be positive, got " + describe(p));
  }
  if (!labels.empty() && labels.size() != n)
    throw ValidationError("got " + std::to_string(labels.size()) + " labels for " +
                          std::to_string(n) + " letters");

  const double total = std::accumulate(letter_probs.begin(), letter_probs.end(), space_prob);
  if (std::abs(total - 1.0) > kNormalizationTolerance) {
    throw ValidationError("probabilities sum to " + describe(total) + " (deficit " +
                          describe(1.0 - total) + "), expected 1");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return letter_probs[a] > letter_probs[b]; });

  const double scale = total == 1.0 ? 1.0 : 1.0 / total;
  probs_.reserve(n);
  for (std::size_t i : order) probs_.push_back(letter_probs[i] * scale);
  space_prob_ = space_prob * scale;

  if (labels.empty()) {
    labels_ = default_labels(n);
  } else {
    std::unordered_set<std::string> seen;
    labels_.reserve(n);
    for (std::size_t i : order) {
      check_label(labels[i]);
      if (!seen.insert(labels[i]).second)
        throw ValidationError("duplicate letter label '" + labels[i] + "'");
      labels_.push_back(std::move(labels[i]));
    }
  }
}

std::size_t Alphabet::find_label(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::string> default_labels(std::size_t n) {
  static constexpr std::string_view kChars =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < kChars.size())
      out.emplace_back(1, kChars[i]);
    else
      out.push_back("[" + std::to_string(i) + "]");
  }
  return out;
}

namespace {

void check_model_args(int n, double p0) {
  if (n < 2) throw ValidationError("alphabet needs n >= 2, got " + std::to_string(n));
  if (!(p0 >= 0.0 && p0 < 1.0))
    throw ValidationError("p0 must lie in [0,1), got " + describe(p0));
}

}  // namespace

Alphabet make_uniform(int n, double p0) {
  check_model_args(n, p0);
  return Alphabet(std::vector<double>(static_cast<std::size_t>(n), (1.0 - p0) / n), p0);
}

Alphabet make_gusein_zade(int n, double p0) {
  check_model_args(n, p0);
  // Tail sums H_n - H_{i-1} = sum_{j=i..n} 1/j, accumulated smallest first.
  std::vector<double> probs(static_cast<std::size_t>(n));
  double tail = 0.0;
  for (int i = n; i >= 1; --i) {
    tail += 1.0 / i;
    probs[static_cast<std::size_t>(i - 1)] = (1.0 - p0) * tail / n;
  }
  return Alphabet(std::move(probs), p0);
}

Alphabet make_explicit(std::vector<double> probs, double p0, std::vector<std::string> labels) {
  return Alphabet(std::move(probs), p0, std::move(labels));
}

namespace {

// Decodes one UTF-8 code point starting at text[pos]; returns its byte length
// (0 for a malformed sequence, which the caller skips one byte at a time).
std::size_t utf8_length(std::string_view text, std::size_t pos, char32_t& cp) {
  const auto lead = static_cast<unsigned char>(text[pos]);
  std::size_t len;
  if (lead < 0x80) {
    cp = lead;
    return 1;
  } else if ((lead & 0xE0) == 0xC0) {
    len = 2;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    len = 3;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    len = 4;
    cp = lead & 0x07;
  } else {
    return 0;
  }
  if (pos + len > text.size()) return 0;
  for (std::size_t k = 1; k < len; ++k) {
    const auto b = static_cast<unsigned char>(text[pos + k]);
    if ((b & 0xC0) != 0x80) return 0;
    cp = (cp << 6) | (b & 0x3F);
  }
  return len;
}

bool is_space(char32_t cp) {
  switch (cp) {
    case U' ': case U'\t': case U'\n': case U'\r': case U'\v': case U'\f':
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool is_letter(char32_t cp, const CorpusOptions& options) {
  if (cp >= 0x80) return options.non_ascii_letters;
  const auto c = static_cast<unsigned char>(cp);
  if (std::isalpha(c)) return true;
  if (std::isdigit(c)) return options.keep_digits;
  if (std::ispunct(c) && options.keep_punctuation) return true;
  return options.extra_letters.find(static_cast<char>(c)) != std::string::npos;
}

}  // namespace

CorpusStats scan_corpus(std::string_view text, const CorpusOptions& options) {
  CorpusStats stats;
  std::string word;
  bool pending_space = false;
  bool any_letter = false;

  auto flush_word = [&] {
    if (!word.empty()) {
      ++stats.word_counts[word];
      word.clear();
    }
  };

  for (std::size_t pos = 0; pos < text.size();) {
    char32_t cp = 0;
    const std::size_t len = utf8_length(text, pos, cp);
    if (len == 0) {
      ++pos;
      continue;
    }
    const std::string_view raw = text.substr(pos, len);
    pos += len;

    if (is_space(cp)) {
      pending_space = true;
      continue;
    }
    if (!is_letter(cp, options)) continue;

    if (pending_space) {
      ++stats.space_count;
      flush_word();
      pending_space = false;
    }
    std::string letter(raw);
    if (options.fold_case && cp < 0x80)
      letter[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(letter[0])));
    ++stats.letter_counts[letter];
    word += letter;
    any_letter = true;
  }
  if (pending_space && any_letter) ++stats.space_count;
  flush_word();
  return stats;
}

Alphabet alphabet_from_counts(const std::map<std::string, std::uint64_t>& letter_counts,
                              std::uint64_t space_count) {
  std::uint64_t total = space_count;
  std::vector<double> counts;
  std::vector<std::string> labels;
  for (const auto& [label, count] : letter_counts) {
    if (count == 0) continue;
    total += count;
    counts.push_back(static_cast<double>(count));
    labels.push_back(label);
  }
  if (total == 0) throw ValidationError("corpus is empty after filtering");
  if (counts.size() < 2)
    throw ValidationError("corpus has only " + std::to_string(counts.size()) +
                          " distinct letter(s); need at least 2");
  const double denom = static_cast<double>(total);
  for (double& c : counts) c /= denom;
  return Alphabet(std::move(counts), static_cast<double>(space_count) / denom, std::move(labels));
}

Alphabet estimate_from_corpus(std::string_view text, const CorpusOptions& options) {
  const CorpusStats stats = scan_corpus(text, options);
  return alphabet_from_counts(stats.letter_counts, stats.space_count);
}

Alphabet estimate_from_corpus(std::istream& in, const CorpusOptions& options) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return estimate_from_corpus(buf.str(), options);
}

void write_alphabet(std::ostream& out, const Alphabet& alphabet) {
  out << "# format: v1\n";
  out << "space\t" << format_double(alphabet.space_prob()) << '\n';
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    out << alphabet.label(i) << '\t' << format_double(alphabet.letter_prob(i)) << '\n';
}

namespace {

double parse_prob(const std::string& token, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw IoError("line " + std::to_string(line_no) + ": cannot parse probability '" + token + "'");
  }
}

}  // namespace

Alphabet read_alphabet(std::istream& in) {
  std::optional<double> space;
  std::vector<double> probs;
  std::vector<std::string> labels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string key;
    if (!(fields >> key) || key.front() == '#') continue;
    std::string value, extra;
    if (!(fields >> value) || (fields >> extra))
      throw IoError("line " + std::to_string(line_no) + ": expected '<id> <prob>'");
    const double p = parse_prob(value, line_no);
    if (key == "space") {
      if (space) throw IoError("line " + std::to_string(line_no) + ": duplicate space line");
      space = p;
    } else {
      labels.push_back(key);
      probs.push_back(p);
    }
  }
  if (!space) throw IoError("alphabet file has no 'space' line");
  return Alphabet(std::move(probs), *space, std::move(labels));
}

std::string alphabet_to_json(const Alphabet& alphabet) {
  nlohmann::json doc;
  doc["format"] = "v1";
  doc["space"] = alphabet.space_prob();
  auto& letters = doc["letters"] = nlohmann::json::array();
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    letters.push_back({{"id", alphabet.label(i)}, {"prob", alphabet.letter_prob(i)}});
  return doc.dump(2);
}

Alphabet alphabet_from_json(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    std::vector<double> probs;
    std::vector<std::string> labels;
    for (const auto& letter : doc.at("letters")) {
      labels.push_back(letter.at("id").get<std::string>());
      probs.push_back(letter.at("prob").get<double>());
    }
    return Alphabet(std::move(probs), doc.at("space").get<double>(), std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed alphabet JSON: ") + e.what());
  }
}

Alphabet load_alphabet_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open alphabet file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return alphabet_from_json(text);
  std::istringstream lines(text);
  return read_alphabet(lines);
}

}  // namespace monkey
