#pragma once

// Rewriting a condition-C symbol word into (2,0)/(-2,0) symbols, and the
// correspondence between such words, Dyck words and nesting forests.
//
//   step 1  move every (-2,.) left of every (2,.): the leftmost (2,a)(-2,b)
//           goes by R3.2 when a <= b and by R3.1 backward otherwise
//   step 2  sort each sign block into non-increasing d with R2 / R4,
//           always fixing the leftmost out-of-order pair
//   step 3  leftmost (-2,k)(2,k+2): delete by R1, back to step 1
//   step 4  leftmost (-2,k)(2,l) with k <= l-4: R3.1, back to step 3
//   step 5  output

#include <algorithm>
#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tangle/error.hpp"
#include "tangle/forest.hpp"
#include "tangle/words.hpp"

namespace tangle {

/// Ordered lexicographically.
struct Potential {
  long first;
  long second;

  friend auto operator<=>(const Potential&, const Potential&) = default;
};

inline std::string to_string(const Potential& p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

/// E = (sum of 1-based indices of the +2 symbols, sum of d over -2 symbols
/// minus sum of d over +2 symbols).
inline Potential potential_E(const SymWord& w) {
  Potential e{0, 0};
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].c() == 2) {
      e.first += static_cast<long>(i + 1);
      e.second -= w[i].d();
    } else {
      e.second += w[i].d();
    }
  }
  return e;
}

/// Value of potential_E2 when neither sign occurs twice.
inline constexpr long kNoGap = std::numeric_limits<long>::min();

/// Largest d_next - d_prev - 2 * (number of symbols between them) over
/// consecutive same-sign symbols.
inline long potential_E2(const SymWord& w) {
  long best = kNoGap;
  for (int sign : {2, -2}) {
    std::optional<std::size_t> prev;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i].c() != sign) continue;
      if (prev) {
        const long gap = static_cast<long>(w[i].d()) - w[*prev].d() - 2 * static_cast<long>(i - *prev - 1);
        best = std::max(best, gap);
      }
      prev = i;
    }
  }
  return best;
}

struct TraceEntry {
  int step;
  Relation rule;
  Direction direction;
  std::size_t position;  // 1-based, as passed to apply_relation
  SymWord word;          // after the rewrite
  Potential energy;      // potential_E(word)
};

/// One trace line: "step 3 R1 forward 2 (-2,0)(2,0) E=(2,0)".
inline std::string to_string(const TraceEntry& t) {
  return "step " + std::to_string(t.step) + " " + relation_name(t.rule) + " " + direction_name(t.direction) + " " +
         std::to_string(t.position) + " " + format(t.word) + " E=" + to_string(t.energy);
}

struct NormalizeOptions {
  std::size_t max_rewrites = 1'000'000;
};

struct NormalizeResult {
  SymWord word;
  std::vector<TraceEntry> trace;
};

inline bool is_normal(const SymWord& w) {
  for (const auto& s : w)
    if (s.d() != 0) return false;
  return static_cast<bool>(check_condition_c(w));
}

namespace detail {

class Normalizer {
 public:
  Normalizer(SymWord w, NormalizeOptions opts) : word_(std::move(w)), opts_(opts) {}

  NormalizeResult run() {
    for (;;) {
      step1();
      step2();
      bool restart = false;
      while (!(restart = step3()) && step4()) {
      }
      if (!restart) break;
    }
    if (!is_normal(word_)) throw internal_error("normalize: output " + format(word_) + " is not a (2,0)/(-2,0) word");
    return {std::move(word_), std::move(trace_)};
  }

 private:
  void rewrite(int step, Relation rule, Direction dir, std::size_t pos) {
    if (trace_.size() >= opts_.max_rewrites) {
      throw internal_error("normalize: rewrite cap of " + std::to_string(opts_.max_rewrites) + " reached at " +
                           format(word_));
    }
    word_ = apply_relation(std::move(word_), rule, pos, dir);
    const Potential e = potential_E(word_);
    if ((step == 2 || step == 4) && last_ && !(e < *last_)) {
      throw internal_error("normalize: potential did not decrease at step " + std::to_string(step) + ": " +
                           to_string(*last_) + " -> " + to_string(e) + " on " + format(word_));
    }
    last_ = e;
    trace_.push_back({step, rule, dir, pos, word_, e});
  }

  void step1() {
    last_.reset();
    for (;;) {
      std::size_t i = 0;
      while (i + 1 < word_.size() && !(word_[i].c() == 2 && word_[i + 1].c() == -2)) ++i;
      if (i + 1 >= word_.size()) return;
      if (word_[i].d() <= word_[i + 1].d()) {
        rewrite(1, Relation::R3_2, Direction::forward, i + 1);
      } else {
        rewrite(1, Relation::R3_1, Direction::backward, i + 1);
      }
    }
  }

  void step2() {
    for (;;) {
      std::size_t i = 0;
      while (i + 1 < word_.size() && !(word_[i].c() == word_[i + 1].c() && word_[i].d() < word_[i + 1].d())) ++i;
      if (i + 1 >= word_.size()) break;
      rewrite(2, word_[i].c() == 2 ? Relation::R2 : Relation::R4, Direction::forward, i + 1);
    }
    check_e2("step 2");
  }

  // True when a deletion happened; the caller then restarts at step 1.
  bool step3() {
    for (std::size_t i = 0; i + 1 < word_.size(); ++i) {
      if (word_[i].c() == -2 && word_[i + 1].c() == 2 && word_[i + 1].d() == word_[i].d() + 2) {
        rewrite(3, Relation::R1, Direction::forward, i + 1);
        return true;
      }
    }
    return false;
  }

  bool step4() {
    for (std::size_t i = 0; i + 1 < word_.size(); ++i) {
      if (word_[i].c() == -2 && word_[i + 1].c() == 2 && word_[i].d() <= word_[i + 1].d() - 4) {
        rewrite(4, Relation::R3_1, Direction::forward, i + 1);
        check_e2("step 4");
        return true;
      }
    }
    return false;
  }

  void check_e2(const char* where) const {
    const long e2 = potential_E2(word_);
    if (e2 != kNoGap && e2 > 0) {
      throw internal_error(std::string("normalize: E2 = ") + std::to_string(e2) + " after " + where + " on " +
                           format(word_));
    }
  }

  SymWord word_;
  NormalizeOptions opts_;
  std::vector<TraceEntry> trace_;
  std::optional<Potential> last_;
};

}  // namespace detail

/// Rewrites `w` into (2,0)/(-2,0) symbols, recording every rewrite. Throws
/// word_error when `w` fails condition C and internal_error when a
/// termination check trips.
inline NormalizeResult normalize(const SymWord& w, NormalizeOptions opts = {}) {
  require_condition_c(w);
  return detail::Normalizer(w, opts).run();
}

/// Splits a normal word wherever the running sum of c returns to zero.
inline std::vector<SymWord> factorize(const SymWord& w) {
  if (!is_normal(w)) throw std::invalid_argument("factorize: " + format(w) + " is not a normal word");
  std::vector<SymWord> out;
  SymWord current;
  long sum = 0;
  for (const auto& s : w) {
    current.push_back(s);
    sum += s.c();
    if (sum == 0) out.push_back(std::exchange(current, {}));
  }
  return out;
}

/// Surrounds the system by one more circle.
inline SymWord encircle(const SymWord& w) {
  SymWord out;
  out.reserve(w.size() + 2);
  out.emplace_back(-2, 0);
  out.insert(out.end(), w.begin(), w.end());
  out.emplace_back(2, 0);
  return out;
}

/// (-2,0) opens a circle, (2,0) closes it.
inline Forest to_forest(const SymWord& w) {
  if (!is_normal(w)) throw std::invalid_argument("to_forest: " + format(w) + " is not a normal word");
  std::string parens;
  parens.reserve(w.size());
  for (const auto& s : w) parens += s.c() == -2 ? '(' : ')';
  return parse_forest(parens);
}

/// Normal word of the forest, children in canonical order.
inline SymWord from_forest(const Forest& f) {
  SymWord out;
  for (char ch : canonical(f)) out.emplace_back(ch == '(' ? -2 : 2, 0);
  return out;
}

}  // namespace tangle
