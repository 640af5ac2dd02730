#include "monkey/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "monkey/error.hpp"

namespace monkey::oracle {

WordList enumerate_all(const Alphabet& alphabet, std::size_t max_len) {
  if (!(alphabet.space_prob() > 0.0)) throw ValidationError("oracle requires p0 > 0");
  const std::size_t n = alphabet.size();

  std::size_t total = 0;
  std::size_t layer = 1;
  for (std::size_t m = 0; m <= max_len; ++m) {
    total += layer;
    if (total > kMaxWords)
      throw ResourceError("oracle would list more than " + std::to_string(kMaxWords) + " words");
    layer *= n;
  }

  std::vector<double> log_p(n);
  for (std::size_t i = 0; i < n; ++i) log_p[i] = std::log(alphabet.letter_prob(i));

  WordList list;
  list.max_len = max_len;
  list.words.reserve(total);
  list.words.push_back({{}, std::log(alphabet.space_prob())});
  // Breadth-first: extend every word of length m by each letter.
  std::size_t begin = 0;
  for (std::size_t m = 1; m <= max_len; ++m) {
    const std::size_t end = list.words.size();
    for (std::size_t w = begin; w < end; ++w) {
      for (std::uint32_t c = 0; c < n; ++c) {
        WordRecord next = list.words[w];
        next.letters.push_back(c);
        next.log_prob += log_p[c];
        list.words.push_back(std::move(next));
      }
    }
    begin = end;
  }

  std::sort(list.words.begin(), list.words.end(),
            [](const WordRecord& a, const WordRecord& b) { return a.log_prob > b.log_prob; });
  // Re-sort each run of tolerance-equal probabilities lexicographically.
  for (std::size_t i = 0; i < list.words.size();) {
    std::size_t j = i + 1;
    while (j < list.words.size() &&
           list.words[j - 1].log_prob - list.words[j].log_prob <= kLogTolerance)
      ++j;
    std::sort(list.words.begin() + static_cast<std::ptrdiff_t>(i),
              list.words.begin() + static_cast<std::ptrdiff_t>(j),
              [](const WordRecord& a, const WordRecord& b) { return a.letters < b.letters; });
    i = j;
  }

  list.log_unlisted_bound = std::log(alphabet.space_prob()) +
                            static_cast<double>(max_len + 1) * std::log(alphabet.max_letter_prob());
  return list;
}

std::uint64_t reliable_prefix(const WordList& list) {
  std::uint64_t count = 0;
  for (const auto& w : list.words) {
    if (w.log_prob <= list.log_unlisted_bound + kLogTolerance) break;
    ++count;
  }
  return count;
}

std::uint64_t oracle_rank_of_probability(const WordList& list, double f) {
  if (!(f > 0.0)) throw ValidationError("probability threshold must be positive");
  const double log_f = std::log(f);
  if (log_f <= list.log_unlisted_bound + kLogTolerance)
    throw ValidationError("threshold is below the range the length cap can answer");
  std::uint64_t count = 0;
  for (const auto& w : list.words) {
    if (w.log_prob >= log_f - kLogTolerance) ++count;
  }
  return count;
}

std::vector<OracleLevel> oracle_levels(const WordList& list) {
  const std::uint64_t reliable = reliable_prefix(list);
  std::vector<OracleLevel> levels;
  for (std::uint64_t i = 0; i < reliable;) {
    std::uint64_t j = i + 1;
    while (j < reliable && list.words[j - 1].log_prob - list.words[j].log_prob <= kLogTolerance) ++j;
    levels.push_back({list.words[i].log_prob, j - i, i + 1, j});
    i = j;
  }
  return levels;
}

double oracle_log_p_of_rank(const WordList& list, std::uint64_t r) {
  if (r < 1 || r > reliable_prefix(list))
    throw ValidationError("rank " + std::to_string(r) + " is outside the oracle's reliable range");
  return list.words[r - 1].log_prob;
}

}  // namespace monkey::oracle
