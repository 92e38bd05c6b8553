#pragma once

// Lattice-ordered additive monoids: a commutative monoid (oplus, zero) whose
// carrier is also a distributive lattice (join, meet) with minimum zero, the
// sum distributing over both lattice operations. Each instance also carries the
// region-closure function phi that the representation applies to the value of
// a region sealed off by a cup.
//
// The order is never stored: a <= b iff join(a, b) == b.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tangle/boolmat.hpp"
#include "tangle/error.hpp"
#include "tangle/primes.hpp"

namespace tangle {

template <class M>
concept LatticeMonoid = std::copy_constructible<M> && requires(const M& m, const typename M::value_type& a,
                                                            std::mt19937_64& rng) {
  typename M::value_type;
  requires std::equality_comparable<typename M::value_type>;
  { m.zero() } -> std::convertible_to<typename M::value_type>;
  { m.oplus(a, a) } -> std::convertible_to<typename M::value_type>;
  { m.join(a, a) } -> std::convertible_to<typename M::value_type>;
  { m.meet(a, a) } -> std::convertible_to<typename M::value_type>;
  { m.phi(a) } -> std::convertible_to<typename M::value_type>;
  { m.sample(rng) } -> std::convertible_to<typename M::value_type>;
  { m.render(a) } -> std::convertible_to<std::string>;
  { m.name() } -> std::convertible_to<std::string_view>;
};

template <LatticeMonoid M>
using value_t = typename M::value_type;

template <LatticeMonoid M>
using ValueArray = std::vector<value_t<M>>;

template <LatticeMonoid M>
bool less_equal(const M& m, const value_t<M>& a, const value_t<M>& b) {
  return m.join(a, b) == b;
}

/// The Boolean action on values: 1*x = x, 0*x = zero.
template <LatticeMonoid M>
value_t<M> scalar_act(const M& m, bool bit, const value_t<M>& x) {
  return bit ? x : m.zero();
}

/// Matrix-on-array action: out_i is the join of x_j over every j with a(i,j) = 1.
template <LatticeMonoid M>
ValueArray<M> act(const M& m, const BitMatrix& a, std::span<const value_t<M>> x) {
  if (a.cols() != x.size()) {
    throw dimension_error("act: matrix has " + std::to_string(a.cols()) + " columns, array has " +
                          std::to_string(x.size()) + " entries");
  }
  ValueArray<M> out;
  out.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    value_t<M> acc = m.zero();
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j)) acc = m.join(acc, x[j]);
    out.push_back(std::move(acc));
  }
  return out;
}

template <LatticeMonoid M>
ValueArray<M> act(const M& m, const BitMatrix& a, const ValueArray<M>& x) {
  return act(m, a, std::span<const value_t<M>>(x));
}

namespace detail {

template <LatticeMonoid M, class Op>
ValueArray<M> zip(std::span<const value_t<M>> x, std::span<const value_t<M>> y, Op op, const char* what) {
  if (x.size() != y.size()) throw dimension_error(std::string(what) + ": array lengths differ");
  ValueArray<M> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(op(x[i], y[i]));
  return out;
}

}  // namespace detail

/// Coordinatewise sum.
template <LatticeMonoid M>
ValueArray<M> oplus(const M& m, const ValueArray<M>& x, const ValueArray<M>& y) {
  return detail::zip<M>(x, y, [&](const auto& a, const auto& b) { return m.oplus(a, b); }, "oplus");
}

/// Coordinatewise join.
template <LatticeMonoid M>
ValueArray<M> join(const M& m, const ValueArray<M>& x, const ValueArray<M>& y) {
  return detail::zip<M>(x, y, [&](const auto& a, const auto& b) { return m.join(a, b); }, "join");
}

template <LatticeMonoid M>
bool less_equal(const M& m, const ValueArray<M>& x, const ValueArray<M>& y) {
  if (x.size() != y.size()) throw dimension_error("less_equal: array lengths differ");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!less_equal(m, x[i], y[i])) return false;
  return true;
}

/// Array with `value` at 1-based position `pos` and zero elsewhere.
template <LatticeMonoid M>
ValueArray<M> unit_array(const M& m, std::size_t length, std::size_t pos, const value_t<M>& value) {
  if (pos < 1 || pos > length) throw range_error("unit_array: position outside array");
  ValueArray<M> out(length, m.zero());
  out[pos - 1] = value;
  return out;
}

template <LatticeMonoid M>
std::string render(const M& m, std::span<const value_t<M>> x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ',';
    out += m.render(x[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Counting monoid: naturals under +, max, min. phi(n) = n + 1 counts curves.

class CountMonoid {
 public:
  using value_type = std::uint64_t;

  value_type zero() const { return 0; }
  value_type oplus(value_type a, value_type b) const {
    value_type s;
    if (__builtin_add_overflow(a, b, &s)) throw std::overflow_error("CountMonoid: sum overflows 64 bits");
    return s;
  }
  value_type join(value_type a, value_type b) const { return std::max(a, b); }
  value_type meet(value_type a, value_type b) const { return std::min(a, b); }
  value_type phi(value_type a) const { return oplus(a, 1); }

  /// Uniform on [0, 10^6].
  value_type sample(std::mt19937_64& rng) const {
    return std::uniform_int_distribution<value_type>(0, 1'000'000)(rng);
  }

  std::string render(value_type a) const { return std::to_string(a); }
  std::string_view name() const { return "count"; }
};

// ---------------------------------------------------------------------------
// Prime-coding monoid: positive integers under *, lcm, gcd. phi(n) = n-th prime.

class PrimeMonoid {
 public:
  using value_type = boost::multiprecision::cpp_int;

  value_type zero() const { return 1; }
  value_type oplus(const value_type& a, const value_type& b) const { return a * b; }
  value_type join(const value_type& a, const value_type& b) const {
    return boost::multiprecision::lcm(a, b);
  }
  value_type meet(const value_type& a, const value_type& b) const {
    return boost::multiprecision::gcd(a, b);
  }
  value_type phi(const value_type& a) const {
    if (a < 1 || a > kMaxPrimeIndex) {
      throw range_error("PrimeMonoid::phi: prime index " + a.str() + " outside the supported range");
    }
    return value_type(nth_prime(a.convert_to<std::uint64_t>()));
  }

  /// A product of 0 to 4 primes drawn from those below 100.
  value_type sample(std::mt19937_64& rng) const {
    static constexpr std::uint32_t small[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                              43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    const int factors = std::uniform_int_distribution<int>(0, 4)(rng);
    std::uniform_int_distribution<std::size_t> pick(0, std::size(small) - 1);
    value_type v = 1;
    for (int i = 0; i < factors; ++i) v *= small[pick(rng)];
    return v;
  }

  std::string render(const value_type& a) const { return a.str(); }
  std::string_view name() const { return "prime"; }
};

// ---------------------------------------------------------------------------
// A finite distributive lattice with minimum, summed by its own join.

/// Element names plus the order relation: order(i, j) = 1 iff element i <= element j.
struct LatticeTable {
  std::vector<std::string> names;
  BitMatrix order;
};

class FiniteLatticeMonoid {
 public:
  using value_type = std::size_t;
  using PhiFn = std::function<value_type(value_type)>;

  /// Builds join and meet tables from the order and rejects anything that is
  /// not a finite distributive lattice with a minimum. phi defaults to the identity.
  explicit FiniteLatticeMonoid(LatticeTable table, PhiFn phi = {});

  value_type zero() const { return data_->bottom; }
  value_type oplus(value_type a, value_type b) const { return join(a, b); }
  value_type join(value_type a, value_type b) const { return data_->join[check(a) * size() + check(b)]; }
  value_type meet(value_type a, value_type b) const { return data_->meet[check(a) * size() + check(b)]; }
  value_type phi(value_type a) const { return data_->phi ? check(data_->phi(check(a))) : check(a); }

  value_type sample(std::mt19937_64& rng) const {
    return std::uniform_int_distribution<value_type>(0, size() - 1)(rng);
  }

  std::string render(value_type a) const { return data_->table.names[check(a)]; }
  std::string_view name() const { return "lattice"; }

  std::size_t size() const { return data_->table.names.size(); }

  /// Element index by name; throws if absent.
  value_type element(std::string_view name) const {
    const auto& names = data_->table.names;
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return i;
    throw std::invalid_argument("FiniteLatticeMonoid: no element named '" + std::string(name) + "'");
  }

 private:
  struct Data {
    LatticeTable table;
    PhiFn phi;
    std::vector<value_type> join;
    std::vector<value_type> meet;
    value_type bottom = 0;
  };

  value_type check(value_type a) const {
    if (a >= size()) throw range_error("FiniteLatticeMonoid: element index out of range");
    return a;
  }

  std::shared_ptr<const Data> data_;
};

inline FiniteLatticeMonoid::FiniteLatticeMonoid(LatticeTable table, PhiFn phi) {
  const std::size_t n = table.names.size();
  if (n == 0) throw std::invalid_argument("lattice table is empty");
  const BitMatrix& le = table.order;
  if (le.rows() != n || le.cols() != n) throw dimension_error("lattice table: order is not n x n");

  for (std::size_t a = 0; a < n; ++a) {
    if (!le(a, a)) throw std::invalid_argument("lattice table: order is not reflexive");
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && le(a, b) && le(b, a)) throw std::invalid_argument("lattice table: order is not antisymmetric");
      for (std::size_t c = 0; c < n; ++c)
        if (le(a, b) && le(b, c) && !le(a, c)) throw std::invalid_argument("lattice table: order is not transitive");
    }
  }

  auto data = std::make_shared<Data>();
  data->join.resize(n * n);
  data->meet.resize(n * n);

  // Least upper / greatest lower bounds by brute force.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t lub = n, glb = n;
      for (std::size_t c = 0; c < n; ++c) {
        if (le(a, c) && le(b, c) && (lub == n || le(c, lub))) lub = c;
        if (le(c, a) && le(c, b) && (glb == n || le(glb, c))) glb = c;
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (le(a, c) && le(b, c) && !le(lub, c)) lub = n;
        if (le(c, a) && le(c, b) && !le(c, glb)) glb = n;
        if (lub == n || glb == n) break;
      }
      if (lub == n || glb == n) {
        throw std::invalid_argument("lattice table: " + table.names[a] + " and " + table.names[b] +
                                    " lack a join or meet");
      }
      data->join[a * n + b] = lub;
      data->meet[a * n + b] = glb;
    }
  }

  std::size_t bottom = n;
  for (std::size_t a = 0; a < n && bottom == n; ++a) {
    bool below_all = true;
    for (std::size_t b = 0; b < n; ++b) below_all = below_all && le(a, b);
    if (below_all) bottom = a;
  }
  if (bottom == n) throw std::invalid_argument("lattice table: no minimum element");
  data->bottom = bottom;

  // Distributivity (the remaining lattice-monoid laws follow from the
  // construction, and are re-checked exhaustively by the test suite).
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const auto j = [&](std::size_t x, std::size_t y) { return data->join[x * n + y]; };
        const auto m = [&](std::size_t x, std::size_t y) { return data->meet[x * n + y]; };
        if (m(a, j(b, c)) != j(m(a, b), m(a, c)) || j(a, m(b, c)) != m(j(a, b), j(a, c))) {
          throw std::invalid_argument("lattice table: not distributive at (" + table.names[a] + "," +
                                      table.names[b] + "," + table.names[c] + ")");
        }
      }

  data->table = std::move(table);
  data->phi = std::move(phi);
  data_ = std::move(data);
}

// ---------------------------------------------------------------------------
// Test-only adaptor replacing phi on any instance.

template <LatticeMonoid Base>
class PhiOverride {
 public:
  using value_type = value_t<Base>;

  PhiOverride(Base base, std::function<value_type(const value_type&)> phi)
      : base_(std::move(base)), phi_(std::move(phi)) {}

  value_type zero() const { return base_.zero(); }
  value_type oplus(const value_type& a, const value_type& b) const { return base_.oplus(a, b); }
  value_type join(const value_type& a, const value_type& b) const { return base_.join(a, b); }
  value_type meet(const value_type& a, const value_type& b) const { return base_.meet(a, b); }
  value_type phi(const value_type& a) const { return phi_(a); }
  value_type sample(std::mt19937_64& rng) const { return base_.sample(rng); }
  std::string render(const value_type& a) const { return base_.render(a); }
  std::string_view name() const { return base_.name(); }

 private:
  Base base_;
  std::function<value_type(const value_type&)> phi_;
};

inline CountMonoid count_monoid() { return {}; }
inline PrimeMonoid prime_monoid() { return {}; }
inline FiniteLatticeMonoid lattice_monoid(LatticeTable table) { return FiniteLatticeMonoid(std::move(table)); }

}  // namespace tangle
