#ifndef MONKEY_SIMULATE_HPP
#define MONKEY_SIMULATE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "monkey/alphabet.hpp"
#include "monkey/rank_frequency.hpp"

namespace monkey {

/// A word as letter indices, one byte per letter (alphabets up to 255 letters).
/// The empty string is the empty word.
using WordKey = std::string;

struct FrequencyTable {
  std::unordered_map<WordKey, std::uint64_t> entries;
  std::uint64_t total_words = 0;

  std::uint64_t count(const WordKey& word) const;
  void add(const WordKey& word, std::uint64_t n = 1);
  /// Associative and commutative.
  void merge(const FrequencyTable& other);
};

inline constexpr std::size_t kMaxSimulatedLetters = 255;

/// Draws `word_count` words from the typing model: characters are i.i.d., letter i
/// with probability p_i and space with p0; a word is the run before the next space
/// (possibly empty). The count is split across `streams` generators (std::mt19937_64
/// seeded from (seed, stream)), run on up to `threads` threads. Output depends on
/// (alphabet, word_count, seed, streams) only. Requires p0 > 0.
FrequencyTable generate_words(const Alphabet& alphabet, std::uint64_t word_count,
                              std::uint64_t seed, unsigned streams = 1, unsigned threads = 1);

/// Words by descending count, ties in lexicographic letter order.
std::vector<std::pair<WordKey, std::uint64_t>> ranked_words(const FrequencyTable& table);

/// freq = count / total_words. With `skip_empty` the empty word is dropped and the
/// rest renormalized.
RankFrequency empirical_rank_freq(const FrequencyTable& table, bool skip_empty = false);

/// Concatenated labels; "<EPS>" for the empty word.
std::string render_word(const WordKey& word, const Alphabet& alphabet);

/// Inverse of render_word (labels are prefix-free). Throws ValidationError.
WordKey parse_word(std::string_view text, const Alphabet& alphabet);

/// `word<TAB>count` lines in rank order under a `# format: v1` header.
void write_frequency_table(std::ostream& out, const FrequencyTable& table,
                           const Alphabet& alphabet, bool skip_empty = false);

/// Reads the output of write_frequency_table back. Throws IoError.
FrequencyTable read_frequency_table(std::istream& in, const Alphabet& alphabet);

}  // namespace monkey

#endif  // MONKEY_SIMULATE_HPP
