#pragma once

// Dense matrices over the two-element Boolean semiring ({0,1}, +, ·) with 1+1=1.
//
// Element access through operator() is 0-based like any container. The
// structured builders further down take their position parameters in the
// 1-based interval numbering used throughout the library, so that a cap at
// position k is written `cap_lift(n, k)` with the same k a generator carries.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "tangle/error.hpp"

namespace tangle {

class BitMatrix {
 public:
  BitMatrix() = default;

  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_((cols + 63) / 64), bits_(rows * stride_, 0) {}

  /// Literal construction; every entry must be 0 or 1 and every row the same length.
  BitMatrix(std::initializer_list<std::initializer_list<int>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    *this = BitMatrix(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw dimension_error("BitMatrix literal: ragged rows");
      std::size_t j = 0;
      for (int x : row) {
        if (x != 0 && x != 1) throw std::invalid_argument("BitMatrix literal: entries must be 0 or 1");
        set(i, j++, x == 1);
      }
      ++i;
    }
  }

  /// Parses the debug rendering: one string of '0'/'1' characters per row.
  static BitMatrix from_strings(const std::vector<std::string>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    BitMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw dimension_error("BitMatrix::from_strings: ragged rows");
      for (std::size_t j = 0; j < c; ++j) {
        const char ch = rows[i][j];
        if (ch != '0' && ch != '1') throw std::invalid_argument("BitMatrix::from_strings: expected 0 or 1");
        m.set(i, j, ch == '1');
      }
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  bool operator()(std::size_t i, std::size_t j) const {
    return (bits_[i * stride_ + j / 64] >> (j % 64)) & 1u;
  }

  void set(std::size_t i, std::size_t j, bool value = true) {
    std::uint64_t& w = bits_[i * stride_ + j / 64];
    const std::uint64_t mask = std::uint64_t{1} << (j % 64);
    w = value ? (w | mask) : (w & ~mask);
  }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (auto w : bits_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  /// Rows as strings of '0'/'1', each terminated by '\n'.
  std::string to_string() const {
    std::string out;
    out.reserve(rows_ * (cols_ + 1));
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out.push_back((*this)(i, j) ? '1' : '0');
      out.push_back('\n');
    }
    return out;
  }

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.bits_ == b.bits_;
  }

  friend BitMatrix operator+(const BitMatrix& a, const BitMatrix& b);
  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
  friend BitMatrix minus(const BitMatrix& a, const BitMatrix& b);
  friend bool leq(const BitMatrix& a, const BitMatrix& b);

 private:
  const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * stride_; }
  std::uint64_t* row(std::size_t i) { return bits_.data() + i * stride_; }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;
};

namespace detail {

inline void require_same_shape(const BitMatrix& a, const BitMatrix& b, std::string_view op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw dimension_error(std::string(op) + ": shapes " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()) + " differ");
  }
}

}  // namespace detail

/// Entrywise OR.
inline BitMatrix operator+(const BitMatrix& a, const BitMatrix& b) {
  detail::require_same_shape(a, b, "add");
  BitMatrix c = a;
  for (std::size_t w = 0; w < c.bits_.size(); ++w) c.bits_[w] |= b.bits_[w];
  return c;
}

/// Boolean product: c(i,j) = OR_k a(i,k) AND b(k,j).
inline BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) {
    throw dimension_error("mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                          " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  BitMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint64_t* out = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (!a(i, k)) continue;
      const std::uint64_t* in = b.row(k);
      for (std::size_t w = 0; w < c.stride_; ++w) out[w] |= in[w];
    }
  }
  return c;
}

/// Entry is 1 exactly where `a` has 1 and `b` has 0.
inline BitMatrix minus(const BitMatrix& a, const BitMatrix& b) {
  detail::require_same_shape(a, b, "minus");
  BitMatrix c = a;
  for (std::size_t w = 0; w < c.bits_.size(); ++w) c.bits_[w] &= ~b.bits_[w];
  return c;
}

/// Entrywise order a <= b.
inline bool leq(const BitMatrix& a, const BitMatrix& b) {
  detail::require_same_shape(a, b, "leq");
  for (std::size_t w = 0; w < a.bits_.size(); ++w) {
    if (a.bits_[w] & ~b.bits_[w]) return false;
  }
  return true;
}

inline BitMatrix transpose(const BitMatrix& a) {
  BitMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j)) t.set(j, i);
  return t;
}

/// The entry e_i^t A e_j, with i and j in 1-based interval numbering.
inline bool entry(const BitMatrix& a, std::size_t i, std::size_t j) {
  if (i < 1 || j < 1 || i > a.rows() || j > a.cols()) {
    throw range_error("entry: (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                      std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  return a(i - 1, j - 1);
}

/// Value of a 1x1 matrix.
inline bool scalar(const BitMatrix& a) {
  if (a.rows() != 1 || a.cols() != 1) throw dimension_error("scalar: matrix is not 1x1");
  return a(0, 0);
}

/// Least transitive matrix above `a` (the sum of all positive powers).
///
/// Computed by repeated squaring c <- c + c*c. After t rounds c holds every
/// path of length at most 2^t, so the fixpoint is confirmed within
/// ceil(log2(dim)) + 1 rounds.
inline BitMatrix transitive_closure(const BitMatrix& a) {
  if (!a.is_square()) throw dimension_error("transitive_closure: matrix is not square");
  const std::size_t n = a.rows();
  std::size_t bound = 1;
  while ((std::size_t{1} << (bound - 1)) < n) ++bound;
  BitMatrix c = a;
  for (std::size_t round = 0; round < bound; ++round) {
    BitMatrix next = c + c * c;
    if (next == c) return c;
    c = std::move(next);
  }
  throw internal_error("transitive_closure: no fixpoint within " + std::to_string(bound) + " rounds");
}

namespace mat {

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw range_error(what);
}

inline std::string args(std::string_view name, long a, long b) {
  return std::string(name) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace detail

inline BitMatrix identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

inline BitMatrix zero(std::size_t rows, std::size_t cols) { return BitMatrix(rows, cols); }

/// (n+2) x n connectivity across a cap inserted at interval k: entry (i,j) is 1
/// iff i = j < k or i = j + 2 > k. Requires n >= 1 and 2 <= k <= n+1.
inline BitMatrix cap_lift(long n, long k) {
  detail::require(n >= 1 && k >= 2 && k <= n + 1, "cap_lift: illegal " + detail::args("cap_lift", n, k));
  BitMatrix m(static_cast<std::size_t>(n + 2), static_cast<std::size_t>(n));
  for (long j = 1; j <= n; ++j) {
    if (j < k) m.set(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(j - 1));
    if (j + 2 > k) m.set(static_cast<std::size_t>(j + 1), static_cast<std::size_t>(j - 1));
  }
  return m;
}

/// n x n with a single 1 on the diagonal at position k.
inline BitMatrix diagonal_unit(long n, long k) {
  detail::require(n >= 1 && k >= 1 && k <= n, "diagonal_unit: illegal " + detail::args("diagonal_unit", n, k));
  BitMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  m.set(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(k - 1));
  return m;
}

/// n x 1 column with a single 1 in row k.
inline BitMatrix unit_column(long n, long k) {
  detail::require(n >= 1 && k >= 1 && k <= n, "unit_column: illegal " + detail::args("unit_column", n, k));
  BitMatrix m(static_cast<std::size_t>(n), 1);
  m.set(static_cast<std::size_t>(k - 1), 0);
  return m;
}

/// n x n anti-diagonal: reverses interval order.
inline BitMatrix reversal(long n) {
  detail::require(n >= 1, "reversal: n must be positive");
  BitMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(n - 1 - i));
  return m;
}

/// (n+2) x n embedding that moves interval j to j+1, leaving the first and
/// last rows empty.
inline BitMatrix frame_embed(long n) {
  detail::require(n >= 1, "frame_embed: n must be positive");
  BitMatrix m(static_cast<std::size_t>(n + 2), static_cast<std::size_t>(n));
  for (long j = 0; j < n; ++j) m.set(static_cast<std::size_t>(j + 1), static_cast<std::size_t>(j));
  return m;
}

/// m x m relating only the first and last intervals (all four corners set).
inline BitMatrix frame_corners(long m) {
  detail::require(m >= 1, "frame_corners: dimension must be positive");
  BitMatrix f(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  const auto last = static_cast<std::size_t>(m - 1);
  f.set(0, 0);
  f.set(0, last);
  f.set(last, 0);
  f.set(last, last);
  return f;
}

/// n x n with a single 1 at (a, b).
inline BitMatrix unit_entry(long n, long a, long b) {
  detail::require(n >= 1 && a >= 1 && a <= n && b >= 1 && b <= n,
                  "unit_entry: illegal position " + detail::args("unit_entry", a, b));
  BitMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  m.set(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));
  return m;
}

/// rows x cols with 1 exactly where i - j is even.
inline BitMatrix chessboard(long rows, long cols) {
  detail::require(rows >= 1 && cols >= 1, "chessboard: dimensions must be positive");
  BitMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j)
      if ((i - j) % 2 == 0) m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  return m;
}

/// Transposed cap lift with the (k-1, k+1) entry removed: cap_lift(n,k)^t (I - D_{k+1}).
inline BitMatrix cup_selector(long n, long k) {
  return transpose(cap_lift(n, k)) *
         minus(identity(static_cast<std::size_t>(n + 2)), diagonal_unit(n + 2, k + 1));
}

/// cap_lift(n,k) D_{k-1} cap_lift(n,k)^t: relates intervals k-1 and k+1 across the cap.
inline BitMatrix cap_spread(long n, long k) {
  const BitMatrix lift = cap_lift(n, k);
  return lift * diagonal_unit(n, k - 1) * transpose(lift);
}

}  // namespace mat

}  // namespace tangle
