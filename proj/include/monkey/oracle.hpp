#ifndef MONKEY_ORACLE_HPP
#define MONKEY_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "monkey/alphabet.hpp"

// Brute-force ground truth: list every word up to a length cap, sort, count.
// Shares no code with the lattice machinery in pyramid.hpp.
namespace monkey::oracle {

inline constexpr std::size_t kMaxWords = 1'000'000;
inline constexpr double kLogTolerance = 1e-12;

struct WordRecord {
  std::vector<std::uint32_t> letters;
  double log_prob = 0.0;  // ln p0 + sum ln p_letter
};

struct WordList {
  std::vector<WordRecord> words;  // descending probability, ties lexicographic
  std::size_t max_len = 0;
  /// Every word not listed has ln p <= this (the most probable word of length max_len + 1).
  double log_unlisted_bound = 0.0;
};

/// All words of length 0..max_len. Requires p0 > 0 and at most kMaxWords words.
WordList enumerate_all(const Alphabet& alphabet, std::size_t max_len);

/// Number of words with probability >= f. Throws ValidationError when f is so small
/// that unlisted words could qualify.
std::uint64_t oracle_rank_of_probability(const WordList& list, double f);

struct OracleLevel {
  double log_prob;
  std::uint64_t word_count;
  std::uint64_t rank_lo;
  std::uint64_t rank_hi;
};

/// Tie classes of the listed words, restricted to those the cap cannot cut short.
std::vector<OracleLevel> oracle_levels(const WordList& list);

/// ln p(r) straight from the sorted list; r must be in the reliable prefix.
double oracle_log_p_of_rank(const WordList& list, std::uint64_t r);

/// Number of listed words strictly more probable than anything unlisted.
std::uint64_t reliable_prefix(const WordList& list);

}  // namespace monkey::oracle

#endif  // MONKEY_ORACLE_HPP
