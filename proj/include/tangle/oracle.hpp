#pragma once

// Geometric ground truth. trace_diagram follows strands through the picture
// with a union-find and reads off the nesting forest; nothing here uses the
// representation or the rewriting system.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "tangle/error.hpp"
#include "tangle/forest.hpp"
#include "tangle/words.hpp"

namespace tangle {

namespace detail {

class UnionFind {
 public:
  std::size_t add() {
    parent_.push_back(parent_.size());
    return parent_.size() - 1;
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Nesting forest of a closed generator word. Sweeps from the top (last
/// generator) down. A cap at k inserts a joined strand pair between points
/// k-2 and k-1; a cup at k joins strands k-1 and k and removes them, closing
/// a curve when they already belong to one component. A closed curve B lies
/// inside A when an odd number of A's strands are left of B's closing point;
/// its parent is the innermost such A.
inline Forest trace_diagram(const GenWord& w) {
  if (!is_closed(w)) {
    require_chain(w);
    throw word_error("trace_diagram needs a closed word", 1);
  }
  detail::UnionFind uf;
  std::vector<std::size_t> live;
  struct Closure {
    std::size_t strand;
    std::vector<std::size_t> left;
  };
  std::vector<Closure> closures;

  for (std::size_t i = w.size(); i-- > 0;) {
    const Generator& g = w[i];
    const auto at = static_cast<std::size_t>(g.k - 2);
    if (g.kind == GenKind::hat) {
      const std::size_t a = uf.add();
      const std::size_t b = uf.add();
      uf.unite(a, b);
      live.insert(live.begin() + static_cast<std::ptrdiff_t>(at), {a, b});
    } else {
      const std::size_t a = live[at];
      const std::size_t b = live[at + 1];
      if (!uf.unite(a, b)) closures.push_back({a, std::vector<std::size_t>(live.begin(), live.begin() + static_cast<std::ptrdiff_t>(at))});
      live.erase(live.begin() + static_cast<std::ptrdiff_t>(at), live.begin() + static_cast<std::ptrdiff_t>(at + 2));
    }
  }
  if (!live.empty()) throw internal_error("trace_diagram: strands left open at the bottom");

  const std::size_t n = closures.size();
  std::map<std::size_t, std::size_t> curve_of_root;
  for (std::size_t c = 0; c < n; ++c) curve_of_root[uf.find(closures[c].strand)] = c;

  std::vector<std::vector<std::size_t>> containers(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::map<std::size_t, std::size_t> hits;
    for (std::size_t s : closures[c].left) ++hits[uf.find(s)];
    for (const auto& [root, count] : hits)
      if (count % 2 == 1) containers[c].push_back(curve_of_root.at(root));
  }

  std::vector<std::vector<std::size_t>> kids(n);
  std::vector<std::size_t> roots;
  for (std::size_t c = 0; c < n; ++c) {
    if (containers[c].empty()) {
      roots.push_back(c);
      continue;
    }
    const auto parent = *std::max_element(containers[c].begin(), containers[c].end(), [&](std::size_t a, std::size_t b) {
      return containers[a].size() < containers[b].size();
    });
    kids[parent].push_back(c);
  }

  const auto build = [&](auto&& self, std::size_t c) -> Tree {
    Tree t;
    for (std::size_t k : kids[c]) t.children.push_back(self(self, k));
    return t;
  };
  Forest out;
  for (std::size_t r : roots) out.push_back(build(build, r));
  return canonicalize(std::move(out));
}

/// All balanced parenthesis strings with `pairs` pairs, in lexicographic order.
inline std::vector<std::string> dyck_words(std::size_t pairs) {
  std::vector<std::string> out;
  std::string cur;
  const auto grow = [&](auto&& self, std::size_t open, std::size_t close) -> void {
    if (close == pairs) {
      out.push_back(cur);
      return;
    }
    if (open < pairs) {
      cur.push_back('(');
      self(self, open + 1, close);
      cur.pop_back();
    }
    if (close < open) {
      cur.push_back(')');
      self(self, open, close + 1);
      cur.pop_back();
    }
  };
  grow(grow, 0, 0);
  return out;
}

inline constexpr std::size_t kMaxEnumeratedCircles = 8;

/// Every unordered forest with exactly `circles` nodes, once each, in
/// canonical order: Dyck words are canonicalized and deduplicated.
inline std::vector<Forest> enumerate_forests(std::size_t circles) {
  if (circles > kMaxEnumeratedCircles) {
    throw range_error("enumerate_forests: at most " + std::to_string(kMaxEnumeratedCircles) + " circles");
  }
  std::set<std::string> seen;
  for (const auto& d : dyck_words(circles)) seen.insert(canonical(parse_forest(d)));
  std::vector<Forest> out;
  out.reserve(seen.size());
  for (const auto& s : seen) out.push_back(parse_forest(s));
  return out;
}

}  // namespace tangle
