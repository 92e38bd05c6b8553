#pragma once

#include <cmath>
#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

#include "tangle/error.hpp"

namespace tangle {

/// Largest supported prime index. p(10^7) = 179424673; the sieve behind it
/// needs about 22 MB and is only built if an index that large is requested.
inline constexpr std::uint64_t kMaxPrimeIndex = 10'000'000;

namespace detail {

class PrimeTable {
 public:
  std::uint64_t nth(std::uint64_t n) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (n > primes_.size()) grow(n);
    return primes_[n - 1];
  }

 private:
  static std::uint64_t upper_bound_for(std::uint64_t n) {
    if (n < 6) return 15;
    const double x = static_cast<double>(n);
    return static_cast<std::uint64_t>(x * (std::log(x) + std::log(std::log(x)))) + 1;
  }

  void grow(std::uint64_t n) {
    // Grow geometrically so that walking up the index range re-sieves O(log) times.
    std::uint64_t want = n;
    if (want < 2 * primes_.size()) want = 2 * primes_.size();
    if (want > kMaxPrimeIndex) want = kMaxPrimeIndex;
    const std::uint64_t limit = upper_bound_for(want);
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint32_t> found;
    found.reserve(static_cast<std::size_t>(want));
    for (std::uint64_t i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      found.push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    primes_ = std::move(found);
  }

  std::mutex mutex_;
  std::vector<std::uint32_t> primes_;
};

inline PrimeTable& prime_table() {
  static PrimeTable table;
  return table;
}

}  // namespace detail

/// The n-th prime, counting from nth_prime(1) = 2. Safe to call concurrently.
inline std::uint64_t nth_prime(std::uint64_t n) {
  if (n < 1 || n > kMaxPrimeIndex) {
    throw range_error("nth_prime: index " + std::to_string(n) + " outside [1, " +
                      std::to_string(kMaxPrimeIndex) + "]");
  }
  return detail::prime_table().nth(n);
}

}  // namespace tangle
