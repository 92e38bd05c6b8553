#pragma once

// The `tangle` command line. run() takes its streams as parameters so the
// golden tests drive it in-process.

#include <cstdint>
#include <exception>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tangle/tangle.hpp"

namespace tangle::cli {

enum Exit : int { kOk = 0, kInvalid = 1, kInternal = 2 };

inline std::string show(const SymWord& w) { return w.empty() ? "(empty)" : format(w); }
inline std::string show(const GenWord& w) { return w.empty() ? "(empty)" : format(w); }

template <class F>
int with_monoid(const std::string& name, F&& f) {
  if (name == "count") return f(Representation<CountMonoid>());
  return f(Representation<PrimeMonoid>());
}

inline int cmd_validate(const std::string& text, std::ostream& out) {
  const AnyWord w = parse_word(text);
  const GenWord g = generators(w);
  const int bottom = g.empty() ? 0 : bottom_points(g.front());
  const int top = g.empty() ? 0 : top_points(g.back());
  const bool closed = is_closed(g);
  out << "VALID " << (closed ? "closed" : "open") << "\n";
  out << "generators " << show(g) << "\n";
  if (closed) out << "symbols " << show(encode(g)) << "\n";
  out << "points " << bottom << " " << top << "\n";
  return kOk;
}

inline int cmd_normalize(const std::string& text, bool trace, std::size_t max_steps, std::ostream& out) {
  const auto result = normalize(closed_symbols(parse_word(text)), {max_steps});
  if (trace)
    for (const auto& t : result.trace) out << to_string(t) << "\n";
  out << show(result.word) << "\n";
  return kOk;
}

inline int cmd_invariant(const std::string& text, const std::string& monoid, std::size_t max_steps,
                         std::ostream& out) {
  const AnyWord w = parse_word(text);
  return with_monoid(monoid, [&](const auto& rep) {
    const auto report = invariant_report(rep, w, {max_steps});
    out << report.monoid << " operator " << report.operator_value << "\n";
    out << report.monoid << " recursive " << report.recursive_value << "\n";
    out << (report.agree() ? "AGREE" : "DISAGREE") << "\n";
    return report.agree() ? kOk : kInternal;
  });
}

inline int cmd_equiv(const std::string& a, const std::string& b, std::ostream& out) {
  const auto r = equivalent(parse_word(a), parse_word(b));
  out << (r.equivalent ? "EQUIVALENT " : "DISTINCT ") << r.first.str() << " " << r.second.str() << "\n";
  return kOk;
}

inline int cmd_enumerate(std::size_t circles, std::ostream& out) {
  const auto report = completeness_report(circles);
  out << report.table();
  return report.ok() ? kOk : kInternal;
}

inline int cmd_eval(const std::string& text, const std::string& monoid, bool steps, bool show_state,
                    std::ostream& out) {
  const GenWord g = generators(parse_word(text));
  return with_monoid(monoid, [&](const auto& rep) {
    const auto& m = rep.monoid();
    using V = value_t<std::decay_t<decltype(m)>>;
    const auto values = [&](const auto& s) { return render(m, std::span<const V>(s.values())); };
    const std::size_t width = g.empty() ? 1 : static_cast<std::size_t>(top_points(g.back())) + 1;
    auto s = width == 1 ? rep.trivial() : separated<std::decay_t<decltype(m)>>(std::vector<V>(width, m.zero()));
    if (steps) {
      out << "start " << values(s) << "\n";
      if (show_state) out << s.relation().to_string();
    }
    for (std::size_t i = g.size(); i-- > 0;) {
      s = rep.eval_word(std::span<const Generator>(g).subspan(i, 1), s);
      if (steps) {
        out << "step " << i + 1 << " " << to_string(g[i]) << " " << values(s) << "\n";
        if (show_state) out << s.relation().to_string();
      }
    }
    out << "result " << values(s) << "\n";
    if (show_state && !steps) out << s.relation().to_string();
    return kOk;
  });
}

// ---------------------------------------------------------------------------
// selftest

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::string first_failure;

  bool ok() const { return first_failure.empty(); }
};

inline void check(SuiteResult& r, bool ok, const std::function<std::string()>& what) {
  ++r.checks;
  if (!ok && r.first_failure.empty()) r.first_failure = what();
}

template <LatticeMonoid M>
void relation_trials(SuiteResult& r, const Representation<M>& rep, std::mt19937_64& rng, std::size_t trials) {
  std::vector<RelationInstance> all;
  for (int n = 1; n <= 6; ++n) {
    for (auto list : {relation_instances(n), intertwining_instances(n)}) all.insert(all.end(), list.begin(), list.end());
  }
  for (std::size_t t = 0; t < trials; ++t) {
    const auto& inst = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    auto s = random_state(rep, inst.input_width(), rng);
    while (inst.needs_outer() && !outer_connected(s)) s = random_state(rep, inst.input_width(), rng);
    const auto mark = small_value(rep.monoid(), rng);
    check(r, relation_holds(rep, inst, s, mark), [&] { return std::string(rep.monoid().name()) + " " + inst.describe(); });
  }
}

inline std::vector<SuiteResult> selftest(std::uint64_t seed, std::size_t trials) {
  std::mt19937_64 rng(seed);
  const Representation<PrimeMonoid> prime;
  const Representation<CountMonoid> count;
  std::vector<SuiteResult> out;

  SuiteResult relations{"relations"};
  relation_trials(relations, prime, rng, trials);
  relation_trials(relations, count, rng, trials);
  out.push_back(relations);

  SuiteResult codec{"codec"}, norm{"normalize"}, methods{"methods"}, hom{"homomorphism"};
  for (std::size_t t = 0; t < trials; ++t) {
    const GenWord g = random_closed_word_upto(rng, 10);
    const SymWord s = encode(g);
    const auto where = [&] { return show(s); };
    check(codec, decode(s) == g && check_condition_c(s).ok, where);

    const auto result = normalize(s);
    const Forest forest = to_forest(result.word);
    check(norm, is_normal(result.word) && canonical(forest) == canonical(trace_diagram(g)), where);

    check(methods, invariant_operator(prime, s) == invariant_recursive(prime.monoid(), forest), where);
    check(methods, invariant_operator(count, s) == invariant_recursive(count.monoid(), forest), where);

    const SymWord other = encode(random_closed_word_upto(rng, 6));
    SymWord ab = s, ba = other;
    ab.insert(ab.end(), other.begin(), other.end());
    ba.insert(ba.end(), s.begin(), s.end());
    const auto va = invariant_operator(prime, s);
    const auto vb = invariant_operator(prime, other);
    check(hom, invariant_operator(prime, ab) == prime.monoid().oplus(va, vb), where);
    check(hom, invariant_operator(prime, ab) == invariant_operator(prime, ba), where);
    check(hom, invariant_operator(count, encircle(s)) == count.monoid().phi(invariant_operator(count, s)), where);
  }
  out.push_back(codec);
  out.push_back(norm);
  out.push_back(methods);
  out.push_back(hom);
  return out;
}

inline int cmd_selftest(std::uint64_t seed, std::size_t trials, std::ostream& out) {
  out << "seed " << seed << " trials " << trials << "\n";
  bool ok = true;
  for (const auto& r : selftest(seed, trials)) {
    out << r.name << " " << (r.ok() ? "PASS" : "FAIL") << " " << r.checks;
    if (!r.ok()) out << " first " << r.first_failure;
    out << "\n";
    ok = ok && r.ok();
  }
  out << (ok ? "ALL PASS" : "FAILED") << "\n";
  return ok ? kOk : kInternal;
}

// ---------------------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Planar tangle invariants: words, normal forms and the prime-coded invariant", "tangle"};
  app.require_subcommand(1);

  std::string word, word_b, monoid = "prime";
  bool trace = false, steps = false, show_state = false;
  std::size_t max_steps = 1'000'000, circles = 0, trials = 200;
  std::uint64_t seed = 1;
  const auto monoid_option = [&](CLI::App* sub) {
    sub->add_option("--monoid", monoid, "prime or count")->check(CLI::IsMember({"prime", "count"}))->capture_default_str();
  };

  auto* validate = app.add_subcommand("validate", "Check a word and print both syntaxes");
  validate->add_option("word", word)->required();

  auto* norm = app.add_subcommand("normalize", "Rewrite a closed word into (2,0)/(-2,0) symbols");
  norm->add_option("word", word)->required();
  norm->add_flag("--trace", trace, "Print every rewrite");
  norm->add_option("--max-steps", max_steps, "Rewrite cap")->check(CLI::PositiveNumber)->capture_default_str();

  auto* inv = app.add_subcommand("invariant", "Invariant of a closed word by both methods");
  inv->add_option("word", word)->required();
  monoid_option(inv);
  inv->add_option("--max-steps", max_steps, "Rewrite cap")->check(CLI::PositiveNumber)->capture_default_str();

  auto* equiv = app.add_subcommand("equiv", "Compare two closed words by the prime invariant");
  equiv->add_option("a", word)->required();
  equiv->add_option("b", word_b)->required();

  auto* enumerate = app.add_subcommand("enumerate", "Invariants of every forest up to a size");
  enumerate->add_option("--circles", circles, "Largest forest size")
      ->required()
      ->check(CLI::Range(std::size_t{0}, kMaxEnumeratedCircles));

  auto* eval = app.add_subcommand("eval", "Evaluate a word on its input state");
  eval->add_option("word", word)->required();
  monoid_option(eval);
  eval->add_flag("--steps", steps, "Print every intermediate state");
  eval->add_flag("--show-state", show_state, "Print relation matrices");

  auto* self = app.add_subcommand("selftest", "Seeded randomized checks");
  self->add_option("--seed", seed, "Random seed")->capture_default_str();
  self->add_option("--trials", trials, "Trials per suite")->check(CLI::PositiveNumber)->capture_default_str();

  if (argc >= 2 && argv[1][0] != '-') {
    const auto subs = app.get_subcommands([&](const CLI::App* sub) { return sub->get_name() == argv[1]; });
    if (subs.empty()) {
      err << "error: unknown command '" << argv[1] << "'\n" << app.help();
      return kInvalid;
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << "\n" << app.help();
    return kInvalid;
  }

  try {
    if (validate->parsed()) return cmd_validate(word, out);
    if (norm->parsed()) return cmd_normalize(word, trace, max_steps, out);
    if (inv->parsed()) return cmd_invariant(word, monoid, max_steps, out);
    if (equiv->parsed()) return cmd_equiv(word, word_b, out);
    if (enumerate->parsed()) return cmd_enumerate(circles, out);
    if (eval->parsed()) return cmd_eval(word, monoid, steps, show_state, out);
    if (self->parsed()) return cmd_selftest(seed, trials, out);
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}

}  // namespace tangle::cli
