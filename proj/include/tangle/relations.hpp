#pragma once

// The defining relations of the generators and the intertwining squares of
// mirror, psi and epsilon, as pairs of composites that must agree on every
// state. Subscripts follow the generator convention: hat(n, k) leaves width n,
// check(n, k) arrives at width n.

#include <string>
#include <utility>
#include <vector>

#include "tangle/lomonoid.hpp"
#include "tangle/operators.hpp"
#include "tangle/state.hpp"

namespace tangle {

enum class Family {
  R1_up,    // check(n,k+1) hat(n,k) = id
  R1_down,  // check(n,k-1) hat(n,k) = id
  R2,       // hat(n+2,l) hat(n,k) = hat(n+2,k) hat(n,l-2)
  R3a,      // hat(n-2,l-2) check(n-2,k) = check(n,k) hat(n,l)
  R3b,      // check(n,l) hat(n,k) = hat(n-2,k) check(n-2,l-2)
  R4,       // check(n-2,l-2) check(n,k) = check(n-2,k) check(n,l)
  mirror_hat,     // M hat(n,k) = hat(n,n+3-k) M
  mirror_check,   // M check(n,k) = check(n,n+3-k) M
  psi_hat,        // hat(n,k) psi = psi hat(n,k)
  psi_check,      // check(n,k) psi = psi check(n,k)
  epsilon_hat,    // hat(n+2,k+1) eps(n) = eps(n+2) hat(n,k)
  epsilon_check,  // check(n,k+1) eps(n) = eps(n-2) check(n-2,k)
};

inline const char* family_name(Family f) {
  switch (f) {
    case Family::R1_up: return "R1+";
    case Family::R1_down: return "R1-";
    case Family::R2: return "R2";
    case Family::R3a: return "R3a";
    case Family::R3b: return "R3b";
    case Family::R4: return "R4";
    case Family::mirror_hat: return "mirror-hat";
    case Family::mirror_check: return "mirror-check";
    case Family::psi_hat: return "psi-hat";
    case Family::psi_check: return "psi-check";
    case Family::epsilon_hat: return "epsilon-hat";
    case Family::epsilon_check: return "epsilon-check";
  }
  return "?";
}

struct RelationInstance {
  Family family;
  int n;
  int k;
  int l = 0;  // second position; only the two-generator relations use it

  /// Width of the states both sides act on.
  std::size_t input_width() const {
    switch (family) {
      case Family::R4:
      case Family::mirror_check:
      case Family::psi_check:
        return static_cast<std::size_t>(n + 2);
      default:
        return static_cast<std::size_t>(n);
    }
  }

  /// Whether the instance needs a state whose outer intervals share a region.
  bool needs_outer() const { return family == Family::epsilon_hat || family == Family::epsilon_check; }

  std::string describe() const {
    std::string out = std::string(family_name(family)) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
    if (l) out += " l=" + std::to_string(l);
    return out;
  }
};

/// The five relation families at subscript n, every legal (k, l).
inline std::vector<RelationInstance> relation_instances(int n) {
  std::vector<RelationInstance> out;
  for (int k = 2; k <= n + 1; ++k) {
    if (k <= n) out.push_back({Family::R1_up, n, k});
    if (k >= 3) out.push_back({Family::R1_down, n, k});
    for (int l = k + 2; l <= n + 3; ++l) out.push_back({Family::R2, n, k, l});
  }
  for (int k = 2; k <= n - 1; ++k) {
    for (int l = k + 2; l <= n + 1; ++l) {
      out.push_back({Family::R3a, n, k, l});
      out.push_back({Family::R3b, n, k, l});
      out.push_back({Family::R4, n, k, l});
    }
  }
  return out;
}

/// The mirror, psi and epsilon squares at subscript n. Epsilon instances act
/// on width n and exist only for odd n.
inline std::vector<RelationInstance> intertwining_instances(int n) {
  std::vector<RelationInstance> out;
  for (int k = 2; k <= n + 1; ++k) {
    out.push_back({Family::mirror_hat, n, k});
    out.push_back({Family::mirror_check, n, k});
    out.push_back({Family::psi_hat, n, k});
    out.push_back({Family::psi_check, n, k});
    if (n % 2 == 1) out.push_back({Family::epsilon_hat, n, k});
  }
  if (n % 2 == 1)
    for (int k = 2; k <= n - 1; ++k) out.push_back({Family::epsilon_check, n, k});
  return out;
}

/// Both sides of the instance applied to `s`; `mark` is the psi value.
template <LatticeMonoid M>
std::pair<State<M>, State<M>> relation_sides(const Representation<M>& rep, const RelationInstance& r,
                                             const State<M>& s, const value_t<M>& mark) {
  const int n = r.n;
  const int k = r.k;
  const int l = r.l;
  switch (r.family) {
    case Family::R1_up: return {rep.t_check(rep.t_hat(s, k), k + 1), s};
    case Family::R1_down: return {rep.t_check(rep.t_hat(s, k), k - 1), s};
    case Family::R2: return {rep.t_hat(rep.t_hat(s, k), l), rep.t_hat(rep.t_hat(s, l - 2), k)};
    case Family::R3a: return {rep.t_hat(rep.t_check(s, k), l - 2), rep.t_check(rep.t_hat(s, l), k)};
    case Family::R3b: return {rep.t_check(rep.t_hat(s, k), l), rep.t_hat(rep.t_check(s, l - 2), k)};
    case Family::R4: return {rep.t_check(rep.t_check(s, k), l - 2), rep.t_check(rep.t_check(s, l), k)};
    case Family::mirror_hat: return {rep.mirror(rep.t_hat(s, k)), rep.t_hat(rep.mirror(s), n + 3 - k)};
    case Family::mirror_check: return {rep.mirror(rep.t_check(s, k)), rep.t_check(rep.mirror(s), n + 3 - k)};
    case Family::psi_hat: return {rep.t_hat(rep.psi(s, mark), k), rep.psi(rep.t_hat(s, k), mark)};
    case Family::psi_check: return {rep.t_check(rep.psi(s, mark), k), rep.psi(rep.t_check(s, k), mark)};
    case Family::epsilon_hat: return {rep.t_hat(rep.epsilon(s), k + 1), rep.epsilon(rep.t_hat(s, k))};
    case Family::epsilon_check: return {rep.t_check(rep.epsilon(s), k + 1), rep.epsilon(rep.t_check(s, k))};
  }
  throw std::logic_error("relation_sides: unknown family");
}

template <LatticeMonoid M>
bool relation_holds(const Representation<M>& rep, const RelationInstance& r, const State<M>& s,
                    const value_t<M>& mark) {
  const auto [lhs, rhs] = relation_sides(rep, r, s, mark);
  return lhs == rhs;
}

}  // namespace tangle
