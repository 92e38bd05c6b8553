#include <gtest/gtest.h>

#include <random>

#include "tangle/invariants.hpp"
#include "tangle/normalize.hpp"
#include "tangle/oracle.hpp"
#include "tangle/sampling.hpp"

using namespace tangle;

namespace {

SymWord S(std::string_view text) { return parse_symbols(text); }

SymWord concat(const SymWord& a, const SymWord& b) {
  SymWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

TEST(Normalize, AlreadyNormal) {
  for (const char* w : {"(-2,0)(2,0)", "(-2,0)(-2,0)(2,0)(2,0)", ""}) {
    const auto r = normalize(S(w));
    EXPECT_EQ(r.word, S(w));
    EXPECT_TRUE(r.trace.empty()) << w;
  }
}

TEST(Normalize, SingleR1) {
  const auto r = normalize(S("(-2,0)(-2,0)(2,2)(2,0)"));
  EXPECT_EQ(r.word, S("(-2,0)(2,0)"));
  ASSERT_EQ(r.trace.size(), 1u);
  EXPECT_EQ(r.trace[0].step, 3);
  EXPECT_EQ(r.trace[0].rule, Relation::R1);
  EXPECT_EQ(r.trace[0].position, 2u);
  EXPECT_EQ(to_string(r.trace[0]), "step 3 R1 forward 2 (-2,0)(2,0) E=(2,0)");
}

TEST(Normalize, RejectsConditionCFailures) {
  EXPECT_THROW(normalize(S("(2,0)(-2,0)")), word_error);
}

TEST(Normalize, RewriteCapIsAnInternalError) {
  EXPECT_THROW(normalize(S("(-2,0)(-2,0)(2,2)(2,0)"), {0}), internal_error);
}

TEST(Normalize, PotentialExamples) {
  EXPECT_EQ(potential_E(S("(-2,0)(2,0)")), (Potential{2, 0}));
  EXPECT_EQ(potential_E(S("(-2,0)(-2,0)(2,0)(2,0)")), (Potential{7, 0}));
  EXPECT_EQ(potential_E(S("(-2,0)(-2,0)(2,2)(2,0)")), (Potential{7, -2}));
  EXPECT_EQ(to_string(Potential{7, -2}), "(7,-2)");
  EXPECT_LT((Potential{2, 5}), (Potential{3, -9}));
  EXPECT_EQ(potential_E2(S("(-2,0)(-2,0)(2,0)(2,0)")), 0);
  EXPECT_EQ(potential_E2(S("(-2,0)(-2,2)(2,0)(2,0)")), 2);
  EXPECT_EQ(potential_E2(S("(-2,0)(2,0)")), kNoGap);
}

TEST(Normalize, OutputIsNormalAndTraceReplays) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 1000; ++t) {
    const SymWord in = encode(random_closed_word_upto(rng, 12));
    const auto r = normalize(in);
    ASSERT_TRUE(is_normal(r.word));
    SymWord replay = in;
    for (const auto& e : r.trace) {
      replay = apply_relation(replay, e.rule, e.position, e.direction);
      ASSERT_EQ(replay, e.word);
      ASSERT_EQ(potential_E(replay), e.energy);
    }
    ASSERT_EQ(replay, r.word);
    for (const auto& e : r.trace) ASSERT_TRUE(e.step >= 1 && e.step <= 4);
  }
}

TEST(Normalize, StepsFollowTheDeterministicPolicy) {
  // Step 1 always touches the leftmost cap/cup pair; replay the first step-1
  // rewrite by hand.
  const SymWord in = S("(-2,0)(-2,0)(2,0)(-2,0)(2,0)(2,0)");
  const auto r = normalize(in);
  ASSERT_FALSE(r.trace.empty());
  EXPECT_EQ(r.trace[0].step, 1);
  EXPECT_EQ(r.trace[0].rule, Relation::R3_2);
  EXPECT_EQ(r.trace[0].position, 3u);
  EXPECT_EQ(canonical(to_forest(r.word)), "(()())");
}

TEST(Normalize, ForestMatchesStrandTrace) {
  std::mt19937_64 rng(52);
  for (int t = 0; t < 1000; ++t) {
    const GenWord g = random_closed_word_upto(rng, 12);
    const Forest f = normal_forest(encode(g));
    ASSERT_EQ(canonical(f), canonical(trace_diagram(g))) << format(g);
    ASSERT_EQ(factorize(normalize(encode(g)).word).size(), f.size());
  }
}

TEST(Normalize, InvariantIsPreserved) {
  std::mt19937_64 rng(53);
  const Representation<PrimeMonoid> prime;
  const Representation<CountMonoid> count;
  for (int t = 0; t < 500; ++t) {
    const SymWord in = encode(random_closed_word_upto(rng, 10));
    const SymWord out = normalize(in).word;
    ASSERT_EQ(invariant_operator(prime, in), invariant_operator(prime, out));
    ASSERT_EQ(invariant_operator(count, in), invariant_operator(count, out));
  }
}

TEST(Normalize, FactorizeExamples) {
  EXPECT_EQ(factorize(S("(-2,0)(2,0)(-2,0)(2,0)")), (std::vector<SymWord>{S("(-2,0)(2,0)"), S("(-2,0)(2,0)")}));
  EXPECT_EQ(factorize(S("(-2,0)(-2,0)(2,0)(2,0)")).size(), 1u);
  EXPECT_TRUE(factorize({}).empty());
  EXPECT_THROW(factorize(S("(-2,0)(-2,0)(2,2)(2,0)")), std::invalid_argument);
  std::mt19937_64 rng(54);
  for (int t = 0; t < 300; ++t) {
    const SymWord w = normalize(encode(random_closed_word_upto(rng, 10))).word;
    SymWord joined;
    for (const auto& f : factorize(w)) {
      ASSERT_TRUE(check_condition_c(f).ok);
      joined = concat(joined, f);
    }
    ASSERT_EQ(joined, w);
  }
}

TEST(Normalize, EncircleExamples) {
  EXPECT_EQ(encircle({}), S("(-2,0)(2,0)"));
  EXPECT_EQ(encircle(S("(-2,0)(2,0)")), S("(-2,0)(-2,0)(2,0)(2,0)"));
  std::mt19937_64 rng(55);
  for (int t = 0; t < 1000; ++t) {
    const SymWord w = encode(random_closed_word_upto(rng, 10));
    ASSERT_TRUE(check_condition_c(encircle(w)).ok);
  }
}

TEST(Normalize, ForestConversions) {
  EXPECT_EQ(to_forest(S("(-2,0)(2,0)")), Forest{Tree{}});
  EXPECT_EQ(to_forest(S("(-2,0)(-2,0)(2,0)(2,0)")), Forest{Tree{{Tree{}}}});
  EXPECT_EQ(to_forest(S("(-2,0)(2,0)(-2,0)(2,0)")), (Forest{Tree{}, Tree{}}));
  EXPECT_THROW(to_forest(S("(-2,0)(-2,0)(2,2)(2,0)")), std::invalid_argument);
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& f : enumerate_forests(n)) {
      const SymWord w = from_forest(f);
      ASSERT_TRUE(is_normal(w));
      ASSERT_EQ(to_forest(w), f);
    }
  }
}

TEST(Normalize, ConcatenationCommutes) {
  std::mt19937_64 rng(56);
  const Representation<PrimeMonoid> prime;
  for (int t = 0; t < 300; ++t) {
    const SymWord a = encode(random_closed_word_upto(rng, 6));
    const SymWord b = encode(random_closed_word_upto(rng, 6));
    const SymWord ab = concat(a, b);
    const SymWord ba = concat(b, a);
    ASSERT_EQ(invariant_operator(prime, ab), invariant_operator(prime, ba));
    ASSERT_EQ(canonical(normal_forest(ab)), canonical(normal_forest(ba)));
  }
}

TEST(Normalize, WatchdogHoldsOnEveryShortWord) {
  for (const auto& g : enumerate_closed_words(8)) {
    const SymWord in = encode(g);
    ASSERT_NO_THROW({
      const auto r = normalize(in);
      ASSERT_TRUE(is_normal(r.word));
    }) << format(in);
  }
}
