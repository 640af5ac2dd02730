#ifndef MONKEY_RANK_FREQUENCY_HPP
#define MONKEY_RANK_FREQUENCY_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace monkey {

struct RankFrequencyPoint {
  std::uint64_t rank = 0;  // >= 1
  double freq = 0.0;       // (0, 1]
};

/// Ranks strictly increasing, frequencies nonincreasing.
struct RankFrequency {
  std::vector<RankFrequencyPoint> points;
};

/// Throws ValidationError if the ordering invariants do not hold.
void validate(const RankFrequency& rf);

/// `rank<TAB>freq` lines under a `# format: v1` header; 17 significant digits.
void write_rank_frequency(std::ostream& out, const RankFrequency& rf);

/// Accepts `rank<TAB>freq` or `word<TAB>count` (a frequency list; ranks follow count
/// order, ties broken by word). '#' lines are comments. Throws IoError on bad input.
RankFrequency read_rank_frequency(std::istream& in);

}  // namespace monkey

#endif  // MONKEY_RANK_FREQUENCY_HPP
