#ifndef MONKEY_COUNT_HPP
#define MONKEY_COUNT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <limits>
#include <string>

namespace monkey {

/// Exact word counts and ranks. Q~(x) grows like e^(gamma x), so 64 bits run out quickly.
using Count = boost::multiprecision::cpp_int;

/// Full decimal rendering, never scientific notation.
inline std::string to_decimal(const Count& c) { return c.str(); }

inline double to_double(const Count& c) { return c.convert_to<double>(); }

/// Natural log of a count, valid beyond the double range. -inf for c <= 0.
inline double log_count(const Count& c) {
  if (c <= 0) return -std::numeric_limits<double>::infinity();
  const auto bits = boost::multiprecision::msb(c);
  if (bits < 1000) return std::log(c.convert_to<double>());
  const auto shift = static_cast<unsigned>(bits - 62);
  return std::log(static_cast<Count>(c >> shift).convert_to<double>()) + shift * std::log(2.0);
}

}  // namespace monkey

#endif  // MONKEY_COUNT_HPP
