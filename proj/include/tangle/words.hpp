#pragma once

// Tangle words. Both word types list factors in composition order: index 1 is
// the bottom-most generator, the last index the top-most one. A closed word
// therefore starts with a cup that ends on no points and finishes with a cap
// that starts from none.

#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tangle/error.hpp"
#include "tangle/operators.hpp"

namespace tangle {

/// One (c, d) symbol: c = +2 for a cap, -2 for a cup; d = left minus right
/// strand count, always even.
class Symbol {
 public:
  Symbol(int c, int d) : c_(c), d_(d) {
    if (c != 2 && c != -2) throw std::invalid_argument("Symbol: c must be 2 or -2, got " + std::to_string(c));
    if (d % 2 != 0) throw std::invalid_argument("Symbol: d must be even, got " + std::to_string(d));
  }

  int c() const noexcept { return c_; }
  int d() const noexcept { return d_; }

  friend bool operator==(const Symbol&, const Symbol&) = default;

 private:
  int c_;
  int d_;
};

using SymWord = std::vector<Symbol>;
using GenWord = std::vector<Generator>;

inline std::string to_string(const Symbol& s) {
  return "(" + std::to_string(s.c()) + "," + std::to_string(s.d()) + ")";
}

inline std::string format(const SymWord& w) {
  std::string out;
  for (const auto& s : w) out += to_string(s);
  return out;
}

inline std::string format(const GenWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ';';
    out += to_string(w[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Arity chain

/// Throws word_error at the first illegal generator or broken link. Generator
/// i sits on top of generator i-1, so top_points(w[i-1]) == bottom_points(w[i]).
inline void require_chain(const GenWord& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!is_legal(w[i])) throw word_error("illegal generator " + to_string(w[i]), i + 1);
    if (i > 0 && top_points(w[i - 1]) != bottom_points(w[i])) {
      throw word_error(to_string(w[i]) + " has " + std::to_string(bottom_points(w[i])) + " bottom points but " +
                           to_string(w[i - 1]) + " below it has " + std::to_string(top_points(w[i - 1])) +
                           " top points",
                       i + 1);
    }
  }
}

/// A chained word that starts and ends on zero points.
inline bool is_closed(const GenWord& w) {
  try {
    require_chain(w);
  } catch (const word_error&) {
    return false;
  }
  return w.empty() || (bottom_points(w.front()) == 0 && top_points(w.back()) == 0);
}

// ---------------------------------------------------------------------------
// Condition C

struct ConditionC {
  bool ok;
  std::optional<std::size_t> failing_index;  // 1-based

  explicit operator bool() const noexcept { return ok; }
};

/// Checks both bounds at every index:
///   c = +2:  |d| <= -sum_{j<i} c_j - 2  and  |d| <= sum_{j>i} c_j
///   c = -2:  |d| <= -sum_{j<i} c_j      and  |d| <= sum_{j>i} c_j - 2
/// Together these force the total to be zero.
inline ConditionC check_condition_c(const SymWord& w) {
  long total = 0;
  for (const auto& s : w) total += s.c();
  long before = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const long after = total - before - w[i].c();
    const long d = std::labs(w[i].d());
    const bool ok = w[i].c() == 2 ? (d <= -before - 2 && d <= after) : (d <= -before && d <= after - 2);
    if (!ok) return {false, i + 1};
    before += w[i].c();
  }
  return {true, std::nullopt};
}

inline void require_condition_c(const SymWord& w) {
  const auto r = check_condition_c(w);
  if (!r) throw word_error("condition C fails", *r.failing_index);
}

// ---------------------------------------------------------------------------
// Codec

/// t_hat(n,k) -> (2, 2k-n-3), t_check(n,k) -> (-2, 2k-n-3). Closed words only.
inline SymWord encode(const GenWord& w) {
  require_chain(w);
  if (!is_closed(w)) {
    throw word_error("encode needs a closed word", bottom_points(w.front()) != 0 ? 1 : w.size());
  }
  SymWord out;
  out.reserve(w.size());
  for (const auto& g : w) out.emplace_back(g.kind == GenKind::hat ? 2 : -2, 2 * g.k - g.n - 3);
  return out;
}

/// Inverse of encode: n' = sum_{j>i} c_j + 1 for a cap, - 1 for a cup, and
/// k' = (d + n' + 3) / 2.
inline GenWord decode(const SymWord& w) {
  require_condition_c(w);
  GenWord out(w.size(), Generator{GenKind::hat, 1, 2});
  int after = 0;
  for (std::size_t i = w.size(); i-- > 0;) {
    const bool cap = w[i].c() == 2;
    const int n = cap ? after + 1 : after - 1;
    out[i] = {cap ? GenKind::hat : GenKind::check, n, (w[i].d() + n + 3) / 2};
    after += w[i].c();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Local relations

enum class Relation { R1, R2, R3_1, R3_2, R4 };
enum class Direction { forward, backward };

inline const char* relation_name(Relation r) {
  switch (r) {
    case Relation::R1: return "R1";
    case Relation::R2: return "R2";
    case Relation::R3_1: return "R3.1";
    case Relation::R3_2: return "R3.2";
    case Relation::R4: return "R4";
  }
  return "?";
}

inline const char* direction_name(Direction d) { return d == Direction::forward ? "forward" : "backward"; }

/// Which of the two R1 patterns to insert: (-2,k)(2,k+2) or (-2,k)(2,k-2).
struct R1Insertion {
  int k;
  bool raised = true;
};

namespace detail {

inline bool is(const Symbol& s, int c) { return s.c() == c; }

}  // namespace detail

/// Rewrites the pair at 1-based positions (pos, pos+1) by `rule`. Forward reads
/// each relation left to right:
///   R1    (-2,k)(2,k+2) or (-2,k)(2,k-2) -> (deleted)
///   R2    (2,k)(2,l)   -> (2,l+2)(2,k+2)    k <= l-2
///   R3.1  (-2,k)(2,l)  -> (2,l-2)(-2,k+2)   k <= l-4
///   R3.2  (2,k)(-2,l)  -> (-2,l+2)(2,k-2)   k <= l
///   R4    (-2,k)(-2,l) -> (-2,l-2)(-2,k-2)  k <= l-2
/// R1 backward inserts `insertion` before position pos (1 <= pos <= size+1).
inline SymWord apply_relation(SymWord w, Relation rule, std::size_t pos, Direction dir,
                              std::optional<R1Insertion> insertion = std::nullopt) {
  using detail::is;
  const auto mismatch = [&]() -> word_error {
    return word_error(std::string(relation_name(rule)) + " " + direction_name(dir) + " does not match", pos);
  };

  if (rule == Relation::R1 && dir == Direction::backward) {
    if (!insertion) throw std::invalid_argument("apply_relation: R1 backward needs an insertion");
    if (pos < 1 || pos > w.size() + 1) throw mismatch();
    const int k = insertion->k;
    const Symbol pair[2] = {Symbol(-2, k), Symbol(2, insertion->raised ? k + 2 : k - 2)};
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(pos - 1), pair, pair + 2);
    if (const auto r = check_condition_c(w); !r) throw word_error("R1 insertion breaks condition C", *r.failing_index);
    return w;
  }

  if (pos < 1 || pos + 1 > w.size()) throw mismatch();
  const Symbol a = w[pos - 1];
  const Symbol b = w[pos];
  const int x = a.d();
  const int y = b.d();
  std::optional<std::pair<Symbol, Symbol>> repl;
  bool erase = false;

  const bool fwd = dir == Direction::forward;
  switch (rule) {
    case Relation::R1:
      if (is(a, -2) && is(b, 2) && (y == x + 2 || y == x - 2)) erase = true;
      break;
    case Relation::R2:
      if (is(a, 2) && is(b, 2)) {
        if (fwd && x <= y - 2) repl.emplace(Symbol(2, y + 2), Symbol(2, x + 2));
        if (!fwd && y <= x - 2) repl.emplace(Symbol(2, y - 2), Symbol(2, x - 2));
      }
      break;
    case Relation::R3_1:
      if (fwd && is(a, -2) && is(b, 2) && x <= y - 4) repl.emplace(Symbol(2, y - 2), Symbol(-2, x + 2));
      if (!fwd && is(a, 2) && is(b, -2) && y <= x) repl.emplace(Symbol(-2, y - 2), Symbol(2, x + 2));
      break;
    case Relation::R3_2:
      if (fwd && is(a, 2) && is(b, -2) && x <= y) repl.emplace(Symbol(-2, y + 2), Symbol(2, x - 2));
      if (!fwd && is(a, -2) && is(b, 2) && y <= x - 4) repl.emplace(Symbol(2, y + 2), Symbol(-2, x - 2));
      break;
    case Relation::R4:
      if (is(a, -2) && is(b, -2)) {
        if (fwd && x <= y - 2) repl.emplace(Symbol(-2, y - 2), Symbol(-2, x - 2));
        if (!fwd && y <= x - 2) repl.emplace(Symbol(-2, y + 2), Symbol(-2, x + 2));
      }
      break;
  }

  if (erase) {
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(pos - 1), w.begin() + static_cast<std::ptrdiff_t>(pos + 1));
  } else if (repl) {
    w[pos - 1] = repl->first;
    w[pos] = repl->second;
  } else {
    throw mismatch();
  }
  if (!check_condition_c(w)) {
    SymWord before = w;
    if (erase) {
      before.insert(before.begin() + static_cast<std::ptrdiff_t>(pos - 1), {a, b});
    } else {
      before[pos - 1] = a;
      before[pos] = b;
    }
    if (check_condition_c(before)) throw internal_error("relation rewrite broke condition C");
  }
  return w;
}

// ---------------------------------------------------------------------------
// Text syntax

namespace detail {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
  }
  bool done() {
    skip_space();
    return i_ >= text_.size();
  }
  char peek() {
    skip_space();
    return i_ < text_.size() ? text_[i_] : '\0';
  }
  bool accept(char ch) {
    if (peek() != ch) return false;
    ++i_;
    return true;
  }
  void expect(char ch, std::size_t token) {
    if (!accept(ch)) throw word_error(std::string("expected '") + ch + "'" + found(), token);
  }
  int integer(std::size_t token) {
    skip_space();
    std::size_t start = i_;
    if (i_ < text_.size() && text_[i_] == '+') ++start, ++i_;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + text_.size(), value);
    if (ec != std::errc{}) throw word_error("expected an integer" + found(), token);
    i_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }
  std::string found() {
    if (done()) return " but the word ended";
    return std::string(" but found '") + text_[i_] + "'";
  }

 private:
  std::string_view text_;
  std::size_t i_ = 0;
};

}  // namespace detail

/// Symbol form: "(c,d)(c,d)...", whitespace allowed between tokens.
inline SymWord parse_symbols(std::string_view text) {
  detail::Lexer lex(text);
  SymWord out;
  for (std::size_t token = 1; !lex.done(); ++token) {
    lex.expect('(', token);
    const int c = lex.integer(token);
    lex.expect(',', token);
    const int d = lex.integer(token);
    lex.expect(')', token);
    if (c != 2 && c != -2) throw word_error("symbol c must be 2 or -2, got " + std::to_string(c), token);
    if (d % 2 != 0) throw word_error("symbol d must be even, got " + std::to_string(d), token);
    out.emplace_back(c, d);
  }
  return out;
}

/// Generator form: "U(n,k);H(n,k);..." with U a cup and H a cap.
inline GenWord parse_generators(std::string_view text) {
  detail::Lexer lex(text);
  GenWord out;
  if (lex.done()) return out;
  for (std::size_t token = 1;; ++token) {
    GenKind kind;
    if (lex.accept('U')) {
      kind = GenKind::check;
    } else if (lex.accept('H')) {
      kind = GenKind::hat;
    } else {
      throw word_error("expected 'U' or 'H'" + lex.found(), token);
    }
    lex.expect('(', token);
    const int n = lex.integer(token);
    lex.expect(',', token);
    const int k = lex.integer(token);
    lex.expect(')', token);
    const Generator g{kind, n, k};
    if (!is_legal(g)) throw word_error("illegal generator " + to_string(g) + ": need n >= 1 and 2 <= k <= n+1", token);
    out.push_back(g);
    if (lex.done()) break;
    lex.expect(';', token);
  }
  return out;
}

using AnyWord = std::variant<SymWord, GenWord>;

/// Picks the syntax by the first non-space character: '(' for symbols, a
/// letter for generators. An empty string is the empty symbol word.
inline AnyWord parse_word(std::string_view text) {
  detail::Lexer lex(text);
  if (lex.done()) return SymWord{};
  const char first = lex.peek();
  if (first == '(') return parse_symbols(text);
  if (std::isalpha(static_cast<unsigned char>(first))) return parse_generators(text);
  throw word_error(std::string("a word starts with '(' or a generator letter, found '") + first + "'", 1);
}

/// The closed word as symbols: generator words are chain-checked and encoded,
/// symbol words are checked against condition C.
inline SymWord closed_symbols(const AnyWord& w) {
  if (const auto* g = std::get_if<GenWord>(&w)) return encode(*g);
  const auto& s = std::get<SymWord>(w);
  require_condition_c(s);
  return s;
}

/// The generator form of a word; symbol words must satisfy condition C.
inline GenWord generators(const AnyWord& w) {
  if (const auto* s = std::get_if<SymWord>(&w)) return decode(*s);
  const auto& g = std::get<GenWord>(w);
  require_chain(g);
  return g;
}

}  // namespace tangle
