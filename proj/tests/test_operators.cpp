#include <gtest/gtest.h>

#include <random>

#include "tangle/operators.hpp"
#include "tangle/relations.hpp"
#include "tangle/sampling.hpp"
#include "tangle/words.hpp"

using namespace tangle;

namespace {

using CState = State<CountMonoid>;
using PState = State<PrimeMonoid>;
using P = PrimeMonoid::value_type;

const BitMatrix kCircle{{1, 0, 1}, {0, 1, 0}, {1, 0, 1}};

}  // namespace

TEST(Operators, GeneratorBasics) {
  const Generator h{GenKind::hat, 1, 2};
  const Generator u{GenKind::check, 3, 4};
  EXPECT_TRUE(is_legal(h));
  EXPECT_TRUE(is_legal(u));
  EXPECT_FALSE(is_legal({GenKind::hat, 0, 2}));
  EXPECT_FALSE(is_legal({GenKind::hat, 2, 1}));
  EXPECT_FALSE(is_legal({GenKind::check, 2, 4}));
  EXPECT_EQ(top_points(h), 0);
  EXPECT_EQ(bottom_points(h), 2);
  EXPECT_EQ(top_points(u), 4);
  EXPECT_EQ(bottom_points(u), 2);
  EXPECT_EQ(to_string(h), "H(1,2)");
  EXPECT_EQ(to_string(u), "U(3,4)");
}

TEST(Operators, ShiftExamples) {
  EXPECT_EQ(shift({GenKind::hat, 1, 2}), (Generator{GenKind::hat, 3, 3}));
  EXPECT_EQ(shift({GenKind::check, 3, 4}), (Generator{GenKind::check, 5, 5}));
  for (int n = 1; n <= 8; ++n)
    for (int k = 2; k <= n + 1; ++k)
      for (GenKind kind : {GenKind::hat, GenKind::check}) {
        const Generator g{kind, n, k};
        const Generator s = shift(g);
        ASSERT_TRUE(is_legal(s));
        ASSERT_EQ(2 * s.k - s.n - 3, 2 * g.k - g.n - 3);
      }
}

TEST(Operators, CapOnTrivialState) {
  const Representation<CountMonoid> rep;
  const auto s = rep.t_hat(rep.trivial(), 2);
  EXPECT_EQ(s.relation(), kCircle);
  EXPECT_EQ(s.values(), (std::vector<std::uint64_t>{0, 0, 0}));
}

TEST(Operators, CapOnSeparatedState) {
  const Representation<CountMonoid> rep;
  const auto s = rep.t_hat(separated<CountMonoid>({3, 5, 7}), 2);
  BitMatrix expected = mat::identity(5);
  expected.set(0, 2);
  expected.set(2, 0);
  EXPECT_EQ(s.relation(), expected);
  EXPECT_EQ(s.values(), (std::vector<std::uint64_t>{3, 0, 3, 5, 7}));
  EXPECT_THROW(rep.t_hat(rep.trivial(), 3), range_error);
  EXPECT_THROW(rep.t_hat(rep.trivial(), 1), range_error);
}

TEST(Operators, CupValueCases) {
  const Representation<CountMonoid> c;
  const Representation<PrimeMonoid> p;
  const CState circle(kCircle, {0, 6, 0});
  EXPECT_EQ(c.x_value(circle, 2), 7u);
  const PState pcircle(kCircle, {1, 6, 1});
  EXPECT_EQ(p.x_value(pcircle, 2), 13);
  EXPECT_EQ(c.x_value(separated<CountMonoid>({3, 5, 7}), 2), 3u);
  EXPECT_EQ(p.x_value(separated<PrimeMonoid>({12, 5, 18}), 2), 6);
  EXPECT_THROW(c.x_value(separated<CountMonoid>({3, 5, 7}), 3), range_error);
  EXPECT_THROW(c.x_value(separated<CountMonoid>({3, 5}), 2), range_error);
}

TEST(Operators, CupOnCircle) {
  const Representation<CountMonoid> c;
  const auto out = c.t_check(CState(kCircle, {0, 6, 0}), 2);
  EXPECT_EQ(out.relation(), mat::identity(1));
  EXPECT_EQ(out.values(), (std::vector<std::uint64_t>{7}));

  const Representation<PrimeMonoid> p;
  const auto pout = p.t_check(PState(kCircle, {1, 5, 1}), 2);
  EXPECT_EQ(pout.values(), (std::vector<P>{11}));
}

TEST(Operators, CupOnSeparatedState) {
  const Representation<CountMonoid> c;
  EXPECT_EQ(c.t_check(separated<CountMonoid>({3, 5, 7}), 2).values(), (std::vector<std::uint64_t>{10}));
  const Representation<PrimeMonoid> p;
  EXPECT_EQ(p.t_check(separated<PrimeMonoid>({12, 5, 18}), 2).values(), (std::vector<P>{216}));
}

TEST(Operators, MirrorExamples) {
  const Representation<CountMonoid> c;
  EXPECT_EQ(c.mirror(c.trivial()), c.trivial());
  const auto s = c.t_hat(separated<CountMonoid>({3, 5, 7}), 2);
  const auto m = c.mirror(s);
  EXPECT_EQ(m.values(), (std::vector<std::uint64_t>{7, 5, 3, 0, 3}));
  EXPECT_EQ(c.mirror(m), s);
}

TEST(Operators, PsiExamples) {
  const Representation<CountMonoid> c;
  EXPECT_EQ(c.psi(c.trivial(), 9).values(), (std::vector<std::uint64_t>{9}));
  const auto s = c.t_hat(separated<CountMonoid>({3, 5, 7}), 2);
  EXPECT_EQ(c.psi(s, 0), s);
  EXPECT_EQ(c.psi(s, 4).values(), (std::vector<std::uint64_t>{7, 0, 7, 5, 7}));
}

TEST(Operators, EpsilonExamples) {
  const Representation<CountMonoid> c;
  const auto e = c.epsilon(c.trivial());
  EXPECT_EQ(e.relation(), kCircle);
  EXPECT_EQ(e.values(), (std::vector<std::uint64_t>{0, 0, 0}));
  EXPECT_EQ(c.epsilon(c.psi(c.trivial(), 4)).values(), (std::vector<std::uint64_t>{0, 4, 0}));
  EXPECT_THROW(c.epsilon(separated<CountMonoid>({1, 2, 3})), std::invalid_argument);
}

TEST(Operators, WordEvaluation) {
  const Representation<CountMonoid> c;
  const Representation<PrimeMonoid> p;
  const GenWord circle = parse_generators("U(1,2);H(1,2)");
  EXPECT_EQ(c.eval_word(circle, c.trivial()).values(), (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(p.eval_word(circle, p.trivial()).values(), (std::vector<P>{2}));
  EXPECT_EQ(c.eval_word({}, c.trivial()), c.trivial());
  const auto steps = c.eval_steps(circle, c.trivial());
  ASSERT_EQ(steps.size(), 3u);
  EXPECT_EQ(steps[1].relation(), kCircle);
}

TEST(Operators, WordEvaluationErrors) {
  const Representation<CountMonoid> c;
  try {
    c.eval_word(parse_generators("U(1,2);H(1,2);H(1,2)"), c.trivial());
    FAIL();
  } catch (const word_error& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  try {
    c.eval_word(GenWord{{GenKind::hat, 1, 5}}, c.trivial());
    FAIL();
  } catch (const word_error& e) {
    EXPECT_EQ(e.position(), 1u);
  }
  EXPECT_THROW(c.apply(c.trivial(), {GenKind::check, 1, 2}), dimension_error);
}

TEST(Operators, ApplyDispatchesOnKind) {
  const Representation<PrimeMonoid> p;
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const int k = 2 + static_cast<int>(rng() % static_cast<unsigned>(n));
    const auto s = random_state(p, static_cast<std::size_t>(n), rng);
    ASSERT_EQ(p.apply(s, {GenKind::hat, n, k}), p.t_hat(s, k));
    const auto wide = random_state(p, static_cast<std::size_t>(n + 2), rng);
    ASSERT_EQ(p.apply(wide, {GenKind::check, n, k}), p.t_check(wide, k));
  }
}

TEST(Operators, RelationInstanceCounts) {
  // n = 3: R1 up at k = 2,3, down at k = 3,4, R2 over k = 2..4, R3a/R3b/R4 at (2,4).
  EXPECT_EQ(relation_instances(3).size(), 2u + 2u + (3u + 2u + 1u) + 3u);
  EXPECT_EQ(intertwining_instances(3).size(), 3u * 5u + 1u);
  EXPECT_EQ(intertwining_instances(2).size(), 2u * 4u);
}

template <class M>
class RelationFamilies : public ::testing::Test {};

using Monoids = ::testing::Types<CountMonoid, PrimeMonoid>;
TYPED_TEST_SUITE(RelationFamilies, Monoids);

TYPED_TEST(RelationFamilies, HoldOnRandomStates) {
  const Representation<TypeParam> rep;
  std::mt19937_64 rng(32);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& inst : relation_instances(n)) {
      for (int t = 0; t < 20; ++t) {
        const auto s = random_state(rep, inst.input_width(), rng);
        ASSERT_TRUE(relation_holds(rep, inst, s, small_value(rep.monoid(), rng))) << inst.describe();
      }
    }
  }
}

TYPED_TEST(RelationFamilies, IntertwiningSquares) {
  const Representation<TypeParam> rep;
  std::mt19937_64 rng(33);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& inst : intertwining_instances(n)) {
      for (int t = 0; t < 20; ++t) {
        auto s = random_state(rep, inst.input_width(), rng);
        while (inst.needs_outer() && !in_U(s)) s = random_state(rep, inst.input_width(), rng);
        ASSERT_TRUE(relation_holds(rep, inst, s, small_value(rep.monoid(), rng))) << inst.describe();
      }
    }
  }
}

TYPED_TEST(RelationFamilies, MirrorIsAnInvolution) {
  const Representation<TypeParam> rep;
  std::mt19937_64 rng(34);
  for (int t = 0; t < 300; ++t) {
    const auto s = random_state(rep, 1 + rng() % 9, rng);
    ASSERT_EQ(rep.mirror(rep.mirror(s)), s);
  }
}

TYPED_TEST(RelationFamilies, PsiComposesAdditively) {
  const Representation<TypeParam> rep;
  const auto& m = rep.monoid();
  std::mt19937_64 rng(35);
  for (int t = 0; t < 300; ++t) {
    const auto s = random_state(rep, 1 + rng() % 9, rng);
    const auto a = small_value(m, rng), b = small_value(m, rng);
    ASSERT_EQ(rep.psi(rep.psi(s, a), b), rep.psi(s, m.oplus(a, b)));
    ASSERT_EQ(rep.psi(s, m.zero()), s);
  }
}
