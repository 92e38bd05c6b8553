#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tangle/forest.hpp"
#include "tangle/invariants.hpp"
#include "tangle/lomonoid.hpp"
#include "tangle/oracle.hpp"

namespace tangle {

struct CompletenessRow {
  std::size_t circles;
  std::string canonical;
  PrimeMonoid::value_type prime;
  CountMonoid::value_type count;
};

struct CompletenessReport {
  std::vector<CompletenessRow> rows;
  std::vector<std::pair<std::string, std::string>> collisions;  // canonical strings sharing a prime value

  bool ok() const { return collisions.empty(); }

  /// "<canonical> <prime> <count>" per row, then totals. The empty forest is
  /// written as "-".
  std::string table() const {
    std::string out;
    for (const auto& r : rows) {
      out += (r.canonical.empty() ? "-" : r.canonical) + " " + r.prime.str() + " " + std::to_string(r.count) + "\n";
    }
    out += "forests " + std::to_string(rows.size()) + "\n";
    out += "collisions " + std::to_string(collisions.size()) + "\n";
    for (const auto& [a, b] : collisions) out += "collision " + a + " " + b + "\n";
    return out;
  }
};

/// Prime and count invariants of every forest with at most `max_circles`
/// nodes. Two forests with one prime value are reported as a collision.
inline CompletenessReport completeness_report(std::size_t max_circles) {
  const auto prime = prime_monoid();
  const auto count = count_monoid();
  CompletenessReport report;
  std::map<PrimeMonoid::value_type, std::string> owner;
  for (std::size_t n = 0; n <= max_circles; ++n) {
    for (const auto& f : enumerate_forests(n)) {
      CompletenessRow row{n, canonical(f), invariant_recursive(prime, f), invariant_recursive(count, f)};
      const auto [it, fresh] = owner.emplace(row.prime, row.canonical);
      if (!fresh) report.collisions.emplace_back(it->second, row.canonical);
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace tangle
