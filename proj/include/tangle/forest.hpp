#pragma once

// Nesting forests: one node per circle, children are the circles directly
// inside it. Sibling order carries no meaning; canonical() gives the
// order-free key.

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tangle/error.hpp"

namespace tangle {

struct Tree {
  std::vector<Tree> children;

  friend bool operator==(const Tree&, const Tree&) = default;
};

using Forest = std::vector<Tree>;

inline std::size_t node_count(const Forest& f);

inline std::size_t node_count(const Tree& t) { return 1 + node_count(t.children); }

inline std::size_t node_count(const Forest& f) {
  std::size_t n = 0;
  for (const auto& t : f) n += node_count(t);
  return n;
}

namespace detail {

inline bool shorter_then_lex(const std::string& a, const std::string& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

inline std::string join_sorted(std::vector<std::string> parts) {
  std::sort(parts.begin(), parts.end(), shorter_then_lex);
  std::string out;
  for (const auto& p : parts) out += p;
  return out;
}

}  // namespace detail

inline std::string canonical(const Forest& f);

/// "(" + children's canonical strings, sorted shorter-first then
/// lexicographically + ")".
inline std::string canonical(const Tree& t) { return "(" + canonical(t.children) + ")"; }

/// Sorted concatenation of the trees' strings; the empty forest is "".
inline std::string canonical(const Forest& f) {
  std::vector<std::string> parts;
  parts.reserve(f.size());
  for (const auto& t : f) parts.push_back(canonical(t));
  return detail::join_sorted(std::move(parts));
}

/// Same forest with siblings reordered to match canonical().
inline Forest canonicalize(Forest f) {
  for (auto& t : f) t.children = canonicalize(std::move(t.children));
  std::vector<std::pair<std::string, Tree>> keyed;
  keyed.reserve(f.size());
  for (auto& t : f) keyed.emplace_back(canonical(t), std::move(t));
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return detail::shorter_then_lex(a.first, b.first); });
  Forest out;
  out.reserve(keyed.size());
  for (auto& [key, t] : keyed) out.push_back(std::move(t));
  return out;
}

/// Parses a balanced parenthesis string, keeping sibling order as written.
inline Forest parse_forest(std::string_view text) {
  std::vector<Forest> stack(1);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') {
      stack.emplace_back();
    } else if (text[i] == ')') {
      if (stack.size() == 1) throw std::invalid_argument("parse_forest: unmatched ')' at " + std::to_string(i + 1));
      Tree t{std::move(stack.back())};
      stack.pop_back();
      stack.back().push_back(std::move(t));
    } else {
      throw std::invalid_argument("parse_forest: unexpected character at " + std::to_string(i + 1));
    }
  }
  if (stack.size() != 1) throw std::invalid_argument("parse_forest: unclosed '('");
  return std::move(stack.front());
}

/// Parenthesis string in the stored sibling order.
inline std::string render(const Forest& f) {
  std::string out;
  for (const auto& t : f) out += "(" + render(t.children) + ")";
  return out;
}

}  // namespace tangle
