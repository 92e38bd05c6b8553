#pragma once

// Independent reference implementations shared by the suites. None of them
// calls into the library's algorithms.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tangle/boolmat.hpp"

namespace tangle::testing {

inline BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, double density = 0.3) {
  std::bernoulli_distribution bit(density);
  BitMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, bit(rng));
  return m;
}

inline BitMatrix naive_product(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      bool s = false;
      for (std::size_t k = 0; k < a.cols(); ++k) s = s || (a(i, k) && b(k, j));
      c.set(i, j, s);
    }
  return c;
}

/// Reachability by paths of length >= 1.
inline BitMatrix warshall(const BitMatrix& a) {
  BitMatrix c = a;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (c(i, k) && c(k, j)) c.set(i, j);
  return c;
}

inline std::uint64_t trial_division_nth_prime(std::uint64_t n) {
  std::uint64_t found = 0;
  for (std::uint64_t p = 2;; ++p) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) {
        prime = false;
        break;
      }
    if (prime && ++found == n) return p;
  }
}

}  // namespace tangle::testing
