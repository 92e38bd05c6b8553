#pragma once

// The invariant of a closed system, two ways: by running the representation on
// the trivial state, and by the recursion v(t1 t2) = v(t1) + v(t2),
// v(<t>) = phi(v(t)) over the nesting forest of the normal form.

#include <string>
#include <utility>

#include "tangle/error.hpp"
#include "tangle/forest.hpp"
#include "tangle/lomonoid.hpp"
#include "tangle/normalize.hpp"
#include "tangle/operators.hpp"
#include "tangle/oracle.hpp"
#include "tangle/primes.hpp"
#include "tangle/words.hpp"

namespace tangle {

template <LatticeMonoid M>
value_t<M> invariant_operator(const Representation<M>& rep, const GenWord& w) {
  if (!is_closed(w)) {
    require_chain(w);
    throw word_error("the invariant needs a closed word", 1);
  }
  const auto s = rep.eval_word(w, rep.trivial());
  return s.value(1);
}

template <LatticeMonoid M>
value_t<M> invariant_operator(const Representation<M>& rep, const SymWord& w) {
  return invariant_operator(rep, decode(w));
}

template <LatticeMonoid M>
value_t<M> invariant_recursive(const M& m, const Forest& f);

template <LatticeMonoid M>
value_t<M> invariant_recursive(const M& m, const Tree& t) {
  return m.phi(invariant_recursive(m, t.children));
}

template <LatticeMonoid M>
value_t<M> invariant_recursive(const M& m, const Forest& f) {
  value_t<M> acc = m.zero();
  for (const auto& t : f) acc = m.oplus(acc, invariant_recursive(m, t));
  return acc;
}

/// Forest of the normal form of a closed word.
inline Forest normal_forest(const SymWord& w, NormalizeOptions opts = {}) {
  return to_forest(normalize(w, opts).word);
}

struct InvariantReport {
  std::string word;
  std::string monoid;
  std::string operator_value;
  std::string recursive_value;

  bool agree() const { return operator_value == recursive_value; }
};

template <LatticeMonoid M>
InvariantReport invariant_report(const Representation<M>& rep, const AnyWord& w, NormalizeOptions opts = {}) {
  const SymWord symbols = closed_symbols(w);
  const auto& m = rep.monoid();
  return {format(symbols), std::string(m.name()), m.render(invariant_operator(rep, symbols)),
          m.render(invariant_recursive(m, normal_forest(symbols, opts)))};
}

struct Equivalence {
  bool equivalent;
  PrimeMonoid::value_type first;
  PrimeMonoid::value_type second;
};

/// Decides isotopy of two closed systems by the prime invariant. Checked
/// builds also compare canonical strand-trace forests and throw
/// internal_error when the two answers differ.
inline Equivalence equivalent(const AnyWord& a, const AnyWord& b) {
  const Representation<PrimeMonoid> rep;
  const GenWord ga = generators(a);
  const GenWord gb = generators(b);
  auto va = invariant_operator(rep, ga);
  auto vb = invariant_operator(rep, gb);
  const bool same = va == vb;
#if TANGLE_CHECKED
  const bool same_shape = canonical(trace_diagram(ga)) == canonical(trace_diagram(gb));
  if (same != same_shape) {
    throw internal_error("equivalent: prime invariant says " + std::string(same ? "equal" : "distinct") +
                         " but the strand trace disagrees for " + format(ga) + " and " + format(gb));
  }
#endif
  return {same, std::move(va), std::move(vb)};
}

}  // namespace tangle
