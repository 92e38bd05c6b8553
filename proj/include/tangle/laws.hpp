#pragma once

// Executable form of the lattice-ordered monoid axioms. Used by the finite
// lattice constructor's callers and by the property suites.

#include <string>
#include <vector>

#include "tangle/lomonoid.hpp"

namespace tangle {

/// Every law that fails on the triple (a, b, c), by label. Empty means all hold.
template <LatticeMonoid M>
std::vector<std::string> failed_laws(const M& m, const value_t<M>& a, const value_t<M>& b, const value_t<M>& c) {
  std::vector<std::string> failed;
  const auto check = [&](bool ok, const char* label) {
    if (!ok) failed.emplace_back(label);
  };
  const auto z = m.zero();
  const auto le = [&](const value_t<M>& x, const value_t<M>& y) { return less_equal(m, x, y); };

  check(m.oplus(a, b) == m.oplus(b, a), "M1");
  check(m.oplus(m.oplus(a, b), c) == m.oplus(a, m.oplus(b, c)), "M2");
  check(m.oplus(z, a) == a, "M3");

  check(m.join(a, a) == a && m.meet(a, a) == a, "L1");
  check(m.join(a, b) == m.join(b, a) && m.meet(a, b) == m.meet(b, a), "L2");
  check(m.join(m.join(a, b), c) == m.join(a, m.join(b, c)) && m.meet(m.meet(a, b), c) == m.meet(a, m.meet(b, c)),
        "L3");
  check(m.meet(a, m.join(a, b)) == a && m.join(a, m.meet(a, b)) == a, "L4");
  check(m.meet(a, m.join(b, c)) == m.join(m.meet(a, b), m.meet(a, c)) &&
            m.join(a, m.meet(b, c)) == m.meet(m.join(a, b), m.join(a, c)),
        "L5");

  check(m.join(z, a) == a && m.meet(z, a) == z, "C1");
  check(m.oplus(a, m.join(b, c)) == m.join(m.oplus(a, b), m.oplus(a, c)) &&
            m.oplus(a, m.meet(b, c)) == m.meet(m.oplus(a, b), m.oplus(a, c)),
        "C2");

  check(le(a, m.oplus(a, b)), "P1");
  check(m.oplus(m.join(a, b), m.meet(a, b)) == m.oplus(a, b), "P2");

  // The Boolean action: (v1 v2)*x = v1*(v2*x), (v1+v2)*x = v1*x v v2*x,
  // v*(x v y) = v*x v v*y, v*(x + y) = v*x + v*y.
  for (bool v1 : {false, true}) {
    for (bool v2 : {false, true}) {
      check(scalar_act(m, v1 && v2, a) == scalar_act(m, v1, scalar_act(m, v2, a)), "act-i");
      check(scalar_act(m, v1 || v2, a) == m.join(scalar_act(m, v1, a), scalar_act(m, v2, a)), "act-ii");
    }
    check(scalar_act(m, v1, m.join(a, b)) == m.join(scalar_act(m, v1, a), scalar_act(m, v1, b)), "act-iii");
    check(scalar_act(m, v1, m.oplus(a, b)) == m.oplus(scalar_act(m, v1, a), scalar_act(m, v1, b)), "act-iv");
  }
  return failed;
}

}  // namespace tangle
