#pragma once

// Representation objects: a same-region relation R on n intervals together with
// one monoid value per interval, constant on each region.
//
// Intervals are numbered 1..n from left to right; every index that appears in
// this header's API (related(), value(), violation witnesses) uses that
// 1-based numbering.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tangle/boolmat.hpp"
#include "tangle/error.hpp"
#include "tangle/lomonoid.hpp"

#ifndef TANGLE_CHECKED
#ifdef NDEBUG
#define TANGLE_CHECKED 0
#else
#define TANGLE_CHECKED 1
#endif
#endif

namespace tangle {

template <class V>
class TangleState {
 public:
  using value_type = V;

  /// No checks; use validate() for untrusted input.
  TangleState(BitMatrix relation, std::vector<V> values)
      : relation_(std::move(relation)), values_(std::move(values)) {}

  std::size_t width() const noexcept { return values_.size(); }
  const BitMatrix& relation() const noexcept { return relation_; }
  const std::vector<V>& values() const noexcept { return values_; }

  bool related(std::size_t i, std::size_t j) const { return entry(relation_, i, j); }

  const V& value(std::size_t i) const {
    if (i < 1 || i > values_.size()) throw range_error("TangleState::value: interval out of range");
    return values_[i - 1];
  }

  friend bool operator==(const TangleState&, const TangleState&) = default;

 private:
  BitMatrix relation_;
  std::vector<V> values_;
};

template <LatticeMonoid M>
using State = TangleState<value_t<M>>;

enum class Property {
  reflexive,      // R >= I
  symmetric,      // R^t = R
  idempotent,     // R^2 = R
  parity,         // related intervals are an even distance apart
  non_crossing,   // a <= b <= c <= d with a~c and b~d forces a~b~c~d
  nested,         // a~b (a<b) implies (a+1)~(b-1) or a~c for some a<c<b
  fixed,          // R * v = v
  region_constant // a~b implies v_a = v_b
};

inline const char* property_name(Property p) {
  switch (p) {
    case Property::reflexive: return "reflexive";
    case Property::symmetric: return "symmetric";
    case Property::idempotent: return "idempotent";
    case Property::parity: return "parity";
    case Property::non_crossing: return "non-crossing";
    case Property::nested: return "nested";
    case Property::fixed: return "fixed";
    case Property::region_constant: return "region-constant";
  }
  return "?";
}

struct Violation {
  Property property;
  std::vector<std::size_t> witness;  // 1-based interval indices

  std::string describe() const {
    std::string out = property_name(property);
    out += " at (";
    for (std::size_t i = 0; i < witness.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(witness[i]);
    }
    return out + ")";
  }
};

class invalid_state : public std::invalid_argument {
 public:
  explicit invalid_state(std::vector<Violation> violations)
      : std::invalid_argument(message(violations)), violations_(std::move(violations)) {}

  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  static std::string message(const std::vector<Violation>& vs) {
    std::string out = "invalid state:";
    for (const auto& v : vs) out += " " + v.describe() + ";";
    return out;
  }

  std::vector<Violation> violations_;
};

/// Every violated property, one entry per property with its first witness.
/// An empty result means (relation, values) is a representation object.
template <LatticeMonoid M>
std::vector<Violation> check_state(const M& m, const BitMatrix& r, const std::vector<value_t<M>>& v) {
  const std::size_t n = v.size();
  if (n == 0) throw dimension_error("check_state: a state needs at least one interval");
  if (r.rows() != n || r.cols() != n) {
    throw dimension_error("check_state: relation is " + std::to_string(r.rows()) + "x" +
                          std::to_string(r.cols()) + " but there are " + std::to_string(n) + " values");
  }
  using Witness = std::optional<std::vector<std::size_t>>;
  std::vector<Violation> out;
  const auto at = [&](std::size_t i, std::size_t j) { return r(i - 1, j - 1); };
  const auto record = [&](Property p, Witness w) {
    if (w) out.push_back({p, std::move(*w)});
  };

  record(Property::reflexive, [&]() -> Witness {
    for (std::size_t i = 1; i <= n; ++i)
      if (!at(i, i)) return {{i, i}};
    return {};
  }());
  record(Property::symmetric, [&]() -> Witness {
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j)
        if (at(i, j) != at(j, i)) return {{i, j}};
    return {};
  }());
  record(Property::idempotent, [&]() -> Witness {
    const BitMatrix sq = r * r;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        if (sq(i - 1, j - 1) != at(i, j)) return {{i, j}};
    return {};
  }());
  record(Property::parity, [&]() -> Witness {
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        if (at(i, j) && (i + j) % 2 != 0) return {{i, j}};
    return {};
  }());
  // O(n^4); widths here are small.
  record(Property::non_crossing, [&]() -> Witness {
    for (std::size_t a = 1; a <= n; ++a)
      for (std::size_t b = a; b <= n; ++b)
        for (std::size_t c = b; c <= n; ++c) {
          if (!at(a, c)) continue;
          for (std::size_t d = c; d <= n; ++d)
            if (at(b, d) && !(at(a, b) && at(b, c) && at(c, d))) return {{a, b, c, d}};
        }
    return {};
  }());
  record(Property::nested, [&]() -> Witness {
    for (std::size_t a = 1; a <= n; ++a)
      for (std::size_t b = a + 1; b <= n; ++b) {
        if (!at(a, b)) continue;
        bool ok = b >= a + 2 && at(a + 1, b - 1);
        for (std::size_t c = a + 1; c < b && !ok; ++c) ok = at(a, c);
        if (!ok) return {{a, b}};
      }
    return {};
  }());
  record(Property::fixed, [&]() -> Witness {
    const auto moved = act(m, r, v);
    for (std::size_t i = 1; i <= n; ++i)
      if (!(moved[i - 1] == v[i - 1])) return {{i}};
    return {};
  }());
  record(Property::region_constant, [&]() -> Witness {
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j)
        if (at(i, j) && !(v[i - 1] == v[j - 1])) return {{i, j}};
    return {};
  }());
  return out;
}

template <LatticeMonoid M>
std::vector<Violation> check_state(const M& m, const State<M>& s) {
  return check_state(m, s.relation(), s.values());
}

/// Checked construction; throws invalid_state listing every violated property.
template <LatticeMonoid M>
State<M> validate(const M& m, BitMatrix r, std::vector<value_t<M>> v) {
  auto violations = check_state(m, r, v);
  if (!violations.empty()) throw invalid_state(std::move(violations));
  return State<M>(std::move(r), std::move(v));
}

/// The one-interval state ([1], (zero)).
template <LatticeMonoid M>
State<M> trivial(const M& m) {
  return State<M>(mat::identity(1), {m.zero()});
}

/// Identity relation with the given values; always a valid state.
template <LatticeMonoid M>
State<M> separated(std::vector<value_t<M>> values) {
  const std::size_t n = values.size();
  if (n == 0) throw dimension_error("separated: need at least one interval");
  return State<M>(mat::identity(n), std::move(values));
}

/// True iff the first and last intervals share a region. Only odd widths qualify.
template <class V>
bool outer_connected(const TangleState<V>& s) {
  return s.related(1, s.width());
}

/// Membership in the subfamily U_n: r_{1,n} = 1.
template <class V>
bool in_U(const TangleState<V>& s) {
  return outer_connected(s);
}

/// Text dump: the relation, one row of 0/1 per line, then the value tuple.
template <LatticeMonoid M>
std::string dump(const M& m, const State<M>& s) {
  return s.relation().to_string() + render(m, std::span<const value_t<M>>(s.values())) + "\n";
}

}  // namespace tangle
