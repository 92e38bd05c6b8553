#pragma once

// The elementary operators of the representation and word evaluation.
//
// A cap (local maximum) at position k maps a width-n state to width n+2: the
// intervals below k keep their index, those from k on move up by two, and a
// fresh empty region appears at k. A cup (local minimum) at position k maps
// width n+2 back to width n, fusing intervals k-1 and k+1 and closing off
// interval k.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tangle/boolmat.hpp"
#include "tangle/error.hpp"
#include "tangle/lomonoid.hpp"
#include "tangle/state.hpp"

namespace tangle {

enum class GenKind { hat, check };

/// A generator of the planar tangle category. `n` counts intervals on the
/// narrow side: a cap(n, k) has n-1 points on top and n+1 below, a cup(n, k)
/// the reverse. Legal positions are 2 <= k <= n+1.
struct Generator {
  GenKind kind;
  int n;
  int k;

  friend bool operator==(const Generator&, const Generator&) = default;
};

using OperatorRef = Generator;

inline bool is_legal(const Generator& g) { return g.n >= 1 && g.k >= 2 && g.k <= g.n + 1; }

/// Points on the upper edge of the generator.
inline int top_points(const Generator& g) { return g.kind == GenKind::hat ? g.n - 1 : g.n + 1; }

/// Points on the lower edge of the generator.
inline int bottom_points(const Generator& g) { return g.kind == GenKind::hat ? g.n + 1 : g.n - 1; }

/// The index-shift functor: same generator drawn one nesting level deeper.
inline Generator shift(const Generator& g) { return {g.kind, g.n + 2, g.k + 1}; }

inline std::string to_string(const Generator& g) {
  return std::string(g.kind == GenKind::hat ? "H" : "U") + "(" + std::to_string(g.n) + "," +
         std::to_string(g.k) + ")";
}

template <LatticeMonoid M>
class Representation {
 public:
  using value_type = value_t<M>;
  using StateT = State<M>;

  explicit Representation(M monoid = M{}) : monoid_(std::move(monoid)) {}

  const M& monoid() const noexcept { return monoid_; }

  StateT trivial() const { return tangle::trivial(monoid_); }

  /// R' = B R B^t + D_k, v' = B * v with B = cap_lift(n, k).
  StateT t_hat(const StateT& s, int k) const {
    const long n = static_cast<long>(s.width());
    if (k < 2 || k > n + 1) throw range_error("t_hat: position " + std::to_string(k) + " illegal on width " + std::to_string(n));
    const BitMatrix lift = mat::cap_lift(n, k);
    BitMatrix r = lift * s.relation() * transpose(lift) + mat::diagonal_unit(n + 2, k);
    return checked(StateT(std::move(r), act(monoid_, lift, s.values())));
  }

  /// The value injected at a cup at position k on a width-(n+2) state:
  /// phi(v_k) when k-1 and k+1 already share a region, else v_{k-1} meet v_{k+1}.
  value_type x_value(const StateT& s, int k) const {
    require_cup_position(s, k);
    const auto uk = static_cast<std::size_t>(k);
    if (s.related(uk - 1, uk + 1)) return monoid_.phi(s.value(uk));
    return monoid_.meet(s.value(uk - 1), s.value(uk + 1));
  }

  /// R' = (B^t R B)^2, v' = R' * [(B^t * v) + e_{k-1} * x] with x = x_value(s, k).
  StateT t_check(const StateT& s, int k) const {
    require_cup_position(s, k);
    const long n = static_cast<long>(s.width()) - 2;
    const BitMatrix lift = mat::cap_lift(n, k);
    const BitMatrix lift_t = transpose(lift);
    const BitMatrix folded = lift_t * s.relation() * lift;
    BitMatrix r = folded * folded;
    auto pulled = act(monoid_, lift_t, s.values());
    pulled[static_cast<std::size_t>(k - 2)] = monoid_.oplus(pulled[static_cast<std::size_t>(k - 2)], x_value(s, k));
    auto v = act(monoid_, r, pulled);
    return checked(StateT(std::move(r), std::move(v)));
  }

  /// Left-right reflection: (S R S, S * v).
  StateT mirror(const StateT& s) const {
    const BitMatrix flip = mat::reversal(static_cast<long>(s.width()));
    return checked(StateT(flip * s.relation() * flip, act(monoid_, flip, s.values())));
  }

  /// Adds `m` to the region of the first interval: (R, R * (e_1 * m + v)).
  StateT psi(const StateT& s, const value_type& m) const {
    auto seeded = oplus(monoid_, unit_array(monoid_, s.width(), 1, m), s.values());
    return checked(StateT(s.relation(), act(monoid_, s.relation(), seeded)));
  }

  /// Surrounds the state by a new outer region: (E R E^t + F, E * v). Requires
  /// outer_connected(s).
  StateT epsilon(const StateT& s) const {
    if (!outer_connected(s)) throw std::invalid_argument("epsilon: first and last intervals are not in one region");
    const long n = static_cast<long>(s.width());
    const BitMatrix embed = mat::frame_embed(n);
    BitMatrix r = embed * s.relation() * transpose(embed) + mat::frame_corners(n + 2);
    return checked(StateT(std::move(r), act(monoid_, embed, s.values())));
  }

  StateT apply(const StateT& s, const Generator& g) const {
    if (!is_legal(g)) throw range_error("apply: illegal generator " + to_string(g));
    const auto expected = static_cast<std::size_t>(g.kind == GenKind::hat ? g.n : g.n + 2);
    if (s.width() != expected) {
      throw dimension_error("apply: " + to_string(g) + " expects width " + std::to_string(expected) +
                            ", state has width " + std::to_string(s.width()));
    }
    return g.kind == GenKind::hat ? t_hat(s, g.k) : t_check(s, g.k);
  }

  /// Evaluates a word in composition order: the last generator is the topmost
  /// piece of the diagram and is applied first.
  StateT eval_word(std::span<const Generator> word, StateT start) const {
    StateT s = std::move(start);
    for (std::size_t i = word.size(); i-- > 0;) {
      const Generator& g = word[i];
      const auto expected = static_cast<std::size_t>(g.kind == GenKind::hat ? g.n : g.n + 2);
      if (!is_legal(g)) throw word_error("illegal generator " + to_string(g), i + 1);
      if (s.width() != expected) {
        throw word_error("arity mismatch: " + to_string(g) + " needs width " + std::to_string(expected) +
                             " but receives width " + std::to_string(s.width()),
                         i + 1);
      }
      s = apply(s, g);
    }
    return s;
  }

  /// Evaluation with every intermediate state, first entry = start.
  std::vector<StateT> eval_steps(std::span<const Generator> word, StateT start) const {
    std::vector<StateT> out{start};
    for (std::size_t i = word.size(); i-- > 0;) {
      out.push_back(eval_word(word.subspan(i, 1), out.back()));
    }
    return out;
  }

 private:
  void require_cup_position(const StateT& s, int k) const {
    const long w = static_cast<long>(s.width());
    if (w < 3) throw range_error("t_check: state width " + std::to_string(w) + " is below 3");
    if (k < 2 || k > w - 1) throw range_error("t_check: position " + std::to_string(k) + " illegal on width " + std::to_string(w));
  }

  StateT checked(StateT s) const {
#if TANGLE_CHECKED
    auto violations = check_state(monoid_, s);
    if (!violations.empty()) throw internal_error(std::string("operator produced an invalid state: ") + invalid_state(violations).what());
#endif
    return s;
  }

  M monoid_;
};

}  // namespace tangle
