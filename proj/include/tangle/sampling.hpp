#pragma once

// Seeded generators for property tests, the acceptance run and selftest.

#include <cstddef>
#include <random>
#include <vector>

#include "tangle/error.hpp"
#include "tangle/lomonoid.hpp"
#include "tangle/operators.hpp"
#include "tangle/state.hpp"
#include "tangle/words.hpp"

namespace tangle {

namespace detail {

inline int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace detail

/// A value small enough that a few nested phi applications stay in range.
template <LatticeMonoid M>
value_t<M> small_value(const M& m, std::mt19937_64& rng) {
  return m.sample(rng);
}

inline PrimeMonoid::value_type small_value(const PrimeMonoid&, std::mt19937_64& rng) {
  static constexpr int primes[] = {2, 3, 5, 7};
  PrimeMonoid::value_type v = 1;
  for (int i = detail::uniform(rng, 0, 2); i > 0; --i) v *= primes[detail::uniform(rng, 0, 3)];
  return v;
}

inline CountMonoid::value_type small_value(const CountMonoid&, std::mt19937_64& rng) {
  return static_cast<CountMonoid::value_type>(detail::uniform(rng, 0, 20));
}

/// A random valid state of the given width, reached by operator application.
/// Odd widths start from trivial() or from two vertical strands, even widths
/// from one vertical strand; separated intervals carry small values. The walk mixes caps,
/// cups, marks and mirrors, then steers to `width`. Walks whose phi values
/// leave the supported range are discarded.
template <LatticeMonoid M>
State<M> random_state(const Representation<M>& rep, std::size_t width, std::mt19937_64& rng) {
  if (width == 0) throw dimension_error("random_state: width must be positive");
  const auto& m = rep.monoid();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    try {
      const std::size_t base = width % 2 == 0 ? 2 : (width >= 3 && detail::uniform(rng, 0, 1) ? 3 : 1);
      std::vector<value_t<M>> values;
      for (std::size_t i = 0; i < base; ++i) values.push_back(small_value(m, rng));
      State<M> s = base == 1 ? rep.trivial() : separated<M>(std::move(values));

      const int walk = detail::uniform(rng, 0, static_cast<int>(2 * width + 4));
      for (int step = 0; step < walk; ++step) {
        const int w = static_cast<int>(s.width());
        switch (detail::uniform(rng, 0, 5)) {
          case 0:
          case 1:
            if (w <= static_cast<int>(width) + 2) s = rep.t_hat(s, detail::uniform(rng, 2, w + 1));
            break;
          case 2:
          case 3:
            if (w >= 3) s = rep.t_check(s, detail::uniform(rng, 2, w - 1));
            break;
          case 4:
            s = rep.psi(s, small_value(m, rng));
            break;
          default:
            s = rep.mirror(s);
            break;
        }
      }
      while (s.width() < width) s = rep.t_hat(s, detail::uniform(rng, 2, static_cast<int>(s.width()) + 1));
      while (s.width() > width) s = rep.t_check(s, detail::uniform(rng, 2, static_cast<int>(s.width()) - 1));
      return s;
    } catch (const range_error&) {
    }
  }
  throw internal_error("random_state: no valid walk found");
}

/// A random closed generator word with `pairs` caps and as many cups, built
/// from the top down.
inline GenWord random_closed_word(std::mt19937_64& rng, std::size_t pairs) {
  GenWord top_down;
  int points = 0;
  std::size_t caps = 0;
  std::size_t cups = 0;
  while (cups < pairs) {
    const bool cap = caps < pairs && (points == 0 || detail::uniform(rng, 0, 1) == 0);
    if (cap) {
      const int n = points + 1;
      top_down.push_back({GenKind::hat, n, detail::uniform(rng, 2, n + 1)});
      points += 2;
      ++caps;
    } else {
      const int n = points - 1;
      top_down.push_back({GenKind::check, n, detail::uniform(rng, 2, n + 1)});
      points -= 2;
      ++cups;
    }
  }
  return {top_down.rbegin(), top_down.rend()};
}

/// A random closed word with between 0 and `max_pairs` circles' worth of
/// generator pairs.
inline GenWord random_closed_word_upto(std::mt19937_64& rng, std::size_t max_pairs) {
  return random_closed_word(rng, static_cast<std::size_t>(detail::uniform(rng, 0, static_cast<int>(max_pairs))));
}

/// Every closed generator word with at most `max_generators` factors.
inline std::vector<GenWord> enumerate_closed_words(std::size_t max_generators) {
  std::vector<GenWord> out;
  GenWord top_down;
  const auto grow = [&](auto&& self, int points) -> void {
    if (points == 0) out.emplace_back(top_down.rbegin(), top_down.rend());
    const auto remaining = static_cast<int>(max_generators - top_down.size());
    if (remaining == 0) return;
    if ((points + 2) / 2 <= remaining - 1) {
      const int n = points + 1;
      for (int k = 2; k <= n + 1; ++k) {
        top_down.push_back({GenKind::hat, n, k});
        self(self, points + 2);
        top_down.pop_back();
      }
    }
    if (points >= 2) {
      const int n = points - 1;
      for (int k = 2; k <= n + 1; ++k) {
        top_down.push_back({GenKind::check, n, k});
        self(self, points - 2);
        top_down.pop_back();
      }
    }
  };
  grow(grow, 0);
  return out;
}

}  // namespace tangle
