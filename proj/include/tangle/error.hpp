#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tangle {

/// Operand shapes do not fit the operation (matrix product, array action, ...).
class dimension_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A positional parameter (k, n, an interval index) is outside its legal range.
class range_error : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A word is malformed: bad syntax, broken arity chain, or condition C failure.
/// `position()` is the 1-based token or symbol index where the problem was found.
class word_error : public std::invalid_argument {
 public:
  word_error(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A check that can only fail if the implementation is wrong: the normalization
/// watchdog, disagreement between the two invariant methods, an operator output
/// that does not validate.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tangle
