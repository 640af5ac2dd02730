#include "monkey/rank_frequency.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "monkey/error.hpp"

namespace monkey {

void validate(const RankFrequency& rf) {
  for (std::size_t i = 0; i < rf.points.size(); ++i) {
    const auto& p = rf.points[i];
    if (p.rank < 1) throw ValidationError("ranks start at 1");
    if (!(p.freq > 0.0 && p.freq <= 1.0))
      throw ValidationError("frequency at rank " + std::to_string(p.rank) + " is outside (0,1]");
    if (i > 0) {
      const auto& prev = rf.points[i - 1];
      if (p.rank <= prev.rank) throw ValidationError("ranks must be strictly increasing");
      if (p.freq > prev.freq) throw ValidationError("frequencies must be nonincreasing in rank");
    }
  }
}

void write_rank_frequency(std::ostream& out, const RankFrequency& rf) {
  out << "# format: v1\n# rank\tfreq\n";
  const auto old = out.precision(17);
  for (const auto& p : rf.points) out << p.rank << '\t' << p.freq << '\n';
  out.precision(old);
}

namespace {

std::optional<std::uint64_t> parse_uint(const std::string& s) {
  std::uint64_t v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<double> parse_real(const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

RankFrequency read_rank_frequency(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos)
      throw IoError("line " + std::to_string(line_no) + ": expected two tab-separated columns");
    rows.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  if (rows.empty()) throw IoError("no data rows");

  // rank/freq when every first column is an integer and every second column is a
  // real in (0,1] that is not a bare integer count.
  const bool rank_freq = std::all_of(rows.begin(), rows.end(), [](const auto& row) {
    const auto f = parse_real(row.second);
    return parse_uint(row.first).has_value() && f && *f <= 1.0 &&
           (!parse_uint(row.second) || *f == 1.0);
  });

  RankFrequency rf;
  if (rank_freq) {
    for (const auto& [rank, freq] : rows) rf.points.push_back({*parse_uint(rank), *parse_real(freq)});
  } else {
    std::vector<std::pair<std::string, std::uint64_t>> counts;
    std::uint64_t total = 0;
    for (const auto& [word, count] : rows) {
      const auto c = parse_uint(count);
      if (!c) throw IoError("word '" + word + "': count '" + count + "' is not a nonnegative integer");
      if (*c == 0) continue;
      counts.emplace_back(word, *c);
      total += *c;
    }
    if (counts.empty()) throw IoError("all counts are zero");
    std::sort(counts.begin(), counts.end(), [](const auto& a, const auto& b) {
      return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    std::uint64_t rank = 0;
    for (const auto& [word, c] : counts)
      rf.points.push_back({++rank, static_cast<double>(c) / static_cast<double>(total)});
  }
  try {
    validate(rf);
  } catch (const ValidationError& e) {
    throw IoError(std::string("rank-frequency input: ") + e.what());
  }
  return rf;
}

}  // namespace monkey
