#include "monkey/simulate.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <random>
#include <thread>

#include "monkey/error.hpp"

namespace monkey {

std::uint64_t FrequencyTable::count(const WordKey& word) const {
  const auto it = entries.find(word);
  return it == entries.end() ? 0 : it->second;
}

void FrequencyTable::add(const WordKey& word, std::uint64_t n) {
  entries[word] += n;
  total_words += n;
}

void FrequencyTable::merge(const FrequencyTable& other) {
  for (const auto& [word, n] : other.entries) entries[word] += n;
  total_words += other.total_words;
}

namespace {

FrequencyTable run_stream(const std::vector<double>& outcome_probs, std::uint64_t words,
                          std::uint64_t seed, unsigned stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  std::mt19937_64 rng(seq);
  // Outcome 0 is the space; outcome i >= 1 is letter i - 1.
  std::discrete_distribution<int> draw(outcome_probs.begin(), outcome_probs.end());

  FrequencyTable table;
  WordKey word;
  for (std::uint64_t w = 0; w < words; ++w) {
    word.clear();
    for (int c = draw(rng); c != 0; c = draw(rng)) word.push_back(static_cast<char>(c - 1));
    table.add(word);
  }
  return table;
}

}  // namespace

FrequencyTable generate_words(const Alphabet& alphabet, std::uint64_t word_count,
                              std::uint64_t seed, unsigned streams, unsigned threads) {
  if (!(alphabet.space_prob() > 0.0))
    throw ValidationError("simulation needs p0 > 0, otherwise words never end");
  if (word_count < 1) throw ValidationError("word_count must be at least 1");
  if (alphabet.size() > kMaxSimulatedLetters)
    throw ValidationError("simulation supports at most 255 letters");
  if (streams < 1) throw ValidationError("need at least one generator stream");
  threads = std::clamp(threads, 1u, streams);

  std::vector<double> outcome_probs{alphabet.space_prob()};
  outcome_probs.insert(outcome_probs.end(), alphabet.letter_probs().begin(),
                       alphabet.letter_probs().end());

  std::vector<std::uint64_t> share(streams, word_count / streams);
  for (std::uint64_t s = 0; s < word_count % streams; ++s) ++share[s];

  std::vector<FrequencyTable> parts(streams);
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        for (unsigned s = t; s < streams; s += threads)
          parts[s] = run_stream(outcome_probs, share[s], seed, s);
      });
    }
  }
  FrequencyTable table = std::move(parts[0]);
  for (unsigned s = 1; s < streams; ++s) table.merge(parts[s]);
  return table;
}

std::vector<std::pair<WordKey, std::uint64_t>> ranked_words(const FrequencyTable& table) {
  std::vector<std::pair<WordKey, std::uint64_t>> out(table.entries.begin(), table.entries.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    // Letter indices compare as unsigned bytes.
    return std::lexicographical_compare(
        a.first.begin(), a.first.end(), b.first.begin(), b.first.end(),
        [](char x, char y) { return static_cast<unsigned char>(x) < static_cast<unsigned char>(y); });
  });
  return out;
}

RankFrequency empirical_rank_freq(const FrequencyTable& table, bool skip_empty) {
  std::uint64_t total = table.total_words;
  if (skip_empty) total -= table.count(WordKey{});
  if (total == 0) throw ValidationError("frequency table is empty");
  RankFrequency rf;
  std::uint64_t rank = 0;
  for (const auto& [word, n] : ranked_words(table)) {
    if (n == 0 || (skip_empty && word.empty())) continue;
    rf.points.push_back({++rank, static_cast<double>(n) / static_cast<double>(total)});
  }
  return rf;
}

std::string render_word(const WordKey& word, const Alphabet& alphabet) {
  if (word.empty()) return "<EPS>";
  std::string out;
  for (char c : word) out += alphabet.label(static_cast<unsigned char>(c));
  return out;
}

WordKey parse_word(std::string_view text, const Alphabet& alphabet) {
  if (text == "<EPS>") return {};
  WordKey word;
  while (!text.empty()) {
    std::size_t match = alphabet.size();
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      if (text.starts_with(alphabet.label(i))) {
        match = i;
        break;
      }
    }
    if (match == alphabet.size())
      throw ValidationError("'" + std::string(text) + "' does not start with a known letter");
    word.push_back(static_cast<char>(match));
    text.remove_prefix(alphabet.label(match).size());
  }
  return word;
}

void write_frequency_table(std::ostream& out, const FrequencyTable& table,
                           const Alphabet& alphabet, bool skip_empty) {
  out << "# format: v1\n# word\tcount\n";
  for (const auto& [word, n] : ranked_words(table)) {
    if (skip_empty && word.empty()) continue;
    out << render_word(word, alphabet) << '\t' << n << '\n';
  }
}

FrequencyTable read_frequency_table(std::istream& in, const Alphabet& alphabet) {
  FrequencyTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw IoError("line " + std::to_string(line_no) + ": missing tab");
    std::uint64_t n = 0;
    const char* first = line.data() + tab + 1;
    const char* last = line.data() + line.size();
    const auto [end, ec] = std::from_chars(first, last, n);
    if (ec != std::errc() || end != last)
      throw IoError("line " + std::to_string(line_no) + ": bad count");
    try {
      table.add(parse_word(std::string_view(line).substr(0, tab), alphabet), n);
    } catch (const ValidationError& e) {
      throw IoError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return table;
}

}  // namespace monkey
