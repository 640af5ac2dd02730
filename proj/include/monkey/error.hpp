#ifndef MONKEY_ERROR_HPP
#define MONKEY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace monkey {

/// Input violates a precondition (bad probabilities, out-of-range argument, ...).
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured resource guard (node budget, word cap) would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Reading or writing a file failed, or its contents could not be parsed.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace monkey

#endif  // MONKEY_ERROR_HPP
