// Evaluates a few closed curve systems, normalizes a tangled one, and shows
// that the prime invariant tells nesting patterns apart.

#include <iostream>

#include "tangle/tangle.hpp"

using namespace tangle;

int main() {
  const Representation<PrimeMonoid> prime;
  const Representation<CountMonoid> count;

  for (const char* text : {"U(1,2);H(1,2)", "(-2,0)(-2,0)(2,0)(2,0)", "(-2,0)(2,0)(-2,0)(2,0)",
                           "U(1,2);U(3,3);U(5,3);H(5,5);H(3,3);H(1,2)"}) {
    const SymWord w = closed_symbols(parse_word(text));
    std::cout << text << "\n  circles " << invariant_operator(count, w) << ", prime " << invariant_operator(prime, w)
              << ", forest " << canonical(normal_forest(w)) << "\n";
  }

  const SymWord tangled = parse_symbols("(-2,0)(-2,0)(2,0)(-2,0)(2,2)(2,0)");
  const auto r = normalize(tangled);
  std::cout << "\nnormalize " << format(tangled) << "\n";
  for (const auto& step : r.trace) std::cout << "  " << to_string(step) << "\n";
  std::cout << "  result " << format(r.word) << "\n";

  std::cout << "\nevaluation of U(1,2);H(1,2) bottom to top\n";
  for (const auto& s : prime.eval_steps(parse_generators("U(1,2);H(1,2)"), trivial(prime.monoid())))
    std::cout << dump(prime.monoid(), s);
  return 0;
}
