#include "abduction/ordering.h"

#include <gtest/gtest.h>

#include "test_instances.h"

namespace abduction {
namespace {

using testing::kA;
using testing::kP;
using testing::kT;
using testing::kV;

const OrderingKind kAllKinds[] = {OrderingKind::kUniversal, OrderingKind::kSubsetPref,
                                  OrderingKind::kCardPref,  OrderingKind::kSubsetPrio,
                                  OrderingKind::kCardPrio,  OrderingKind::kPenalty};

TEST(CompareTest, TexExamples) {
  const auto tex = testing::tex_instance();
  EXPECT_EQ(compare(OrderingKind::kSubsetPref, VarSet{kP}, VarSet{kA, kP}, tex),
            Comparison::kStrictlyBetter);
  EXPECT_EQ(compare(OrderingKind::kCardPref, VarSet{kA, kT, kV}, VarSet{kP}, tex),
            Comparison::kStrictlyWorse);
  EXPECT_EQ(compare(OrderingKind::kPenalty, VarSet{kV}, VarSet{kP}, testing::tex_penalty()),
            Comparison::kStrictlyBetter);
  EXPECT_EQ(compare(OrderingKind::kSubsetPref, VarSet{kA}, VarSet{kP}, tex),
            Comparison::kIncomparable);
  EXPECT_EQ(compare(OrderingKind::kSubsetPrio, VarSet{kP}, VarSet{kA}, testing::tex_prio()),
            Comparison::kStrictlyBetter);
}

TEST(CompareTest, PrioritizedOrderings) {
  const auto prio = testing::tex_prio();
  // {p,v} uses only the likely class; {a} uses the unlikely one.
  EXPECT_EQ(compare(OrderingKind::kCardPrio, VarSet{kP, kV}, VarSet{kA}, prio),
            Comparison::kStrictlyBetter);
  EXPECT_EQ(compare(OrderingKind::kCardPrio, VarSet{kP}, VarSet{kV}, prio),
            Comparison::kEquivalent);
  EXPECT_EQ(compare(OrderingKind::kSubsetPrio, VarSet{kP}, VarSet{kV}, prio),
            Comparison::kIncomparable);
  EXPECT_EQ(compare(OrderingKind::kSubsetPrio, VarSet{kA, kP}, VarSet{kA, kP, kV}, prio),
            Comparison::kStrictlyBetter);
  EXPECT_EQ(compare(OrderingKind::kSubsetPrio, VarSet{kA}, VarSet{kT, kP}, prio),
            Comparison::kIncomparable);
}

TEST(CompareTest, UniversalIsAlwaysEquivalent) {
  const auto tex = testing::tex_instance();
  for (const VarSet& a : testing::all_subsets(tex.hypotheses())) {
    for (const VarSet& b : testing::all_subsets(tex.hypotheses())) {
      EXPECT_EQ(compare(OrderingKind::kUniversal, a, b, tex), Comparison::kEquivalent);
    }
  }
}

TEST(CompareTest, PenaltyNeedsWeights) {
  EXPECT_THROW(compare(OrderingKind::kPenalty, VarSet{kA}, VarSet{kP}, testing::tex_instance()),
               AbductionError);
}

// Reflexive and transitive preorder, antisymmetric strict part, on every
// subset triple of a 4-variable universe.
TEST(OrderingLaws, PreorderOnSmallUniverse) {
  const auto inst = testing::tex_penalty();
  AbductionInstance prio = inst;
  prio.classes = {VarSet{kP, kV}, VarSet{kA, kT}};
  const auto subsets = testing::all_subsets(inst.hypotheses());
  for (OrderingKind kind : kAllKinds) {
    const Ordering ord = Ordering::for_instance(kind, prio);
    for (const VarSet& a : subsets) {
      EXPECT_TRUE(ord.preceq(a, a)) << to_string(kind);
      for (const VarSet& b : subsets) {
        const Comparison ab = ord.compare(a, b);
        const Comparison ba = ord.compare(b, a);
        if (ab == Comparison::kStrictlyBetter) EXPECT_EQ(ba, Comparison::kStrictlyWorse);
        if (ab == Comparison::kEquivalent) EXPECT_EQ(ba, Comparison::kEquivalent);
        for (const VarSet& c : subsets) {
          if (ord.preceq(a, b) && ord.preceq(b, c)) {
            EXPECT_TRUE(ord.preceq(a, c)) << to_string(kind);
          }
        }
      }
    }
  }
}

TEST(PropertiesTest, SubsetPreferencePassesExhaustively) {
  const auto p = check_ordering_properties(Ordering(OrderingKind::kSubsetPref), VarSet{1, 2, 3},
                                           100000);
  EXPECT_TRUE(p.exhaustive);
  EXPECT_TRUE(p.meaningful.pass);
  EXPECT_TRUE(p.irredundant.pass);
  // 3 * 4^2 meaningful cases, 3^3 - 2^3 irredundant ones.
  EXPECT_EQ(p.meaningful.cases, 48u);
  EXPECT_EQ(p.irredundant.cases, 19u);
}

TEST(PropertiesTest, UniversalFailsIrredundancy) {
  const auto p =
      check_ordering_properties(Ordering(OrderingKind::kUniversal), VarSet{1, 2}, 100000);
  EXPECT_TRUE(p.meaningful.pass);
  ASSERT_FALSE(p.irredundant.pass);
  ASSERT_TRUE(p.irredundant.witness.has_value());
  EXPECT_TRUE(p.irredundant.witness->first.is_subset_of(p.irredundant.witness->second));
  EXPECT_NE(p.irredundant.witness->first, p.irredundant.witness->second);
  EXPECT_EQ(p.irredundant.witness->observed, Comparison::kEquivalent);
}

TEST(PropertiesTest, ZeroWeightBreaksIrredundancy) {
  const Ordering zero(OrderingKind::kPenalty, {VarSet{1, 2}}, {{1, 0}, {2, 3}});
  const auto p = check_ordering_properties(zero, VarSet{1, 2}, 100000);
  EXPECT_FALSE(p.irredundant.pass);
  ASSERT_TRUE(p.irredundant.witness.has_value());
  // The witness differs exactly by the zero-weight hypothesis.
  EXPECT_EQ(set_difference(p.irredundant.witness->second, p.irredundant.witness->first),
            VarSet{1});
}

TEST(PropertiesTest, AllPreferenceOrderingsPassUpToFourVariables) {
  for (int n = 1; n <= 4; ++n) {
    std::vector<Var> vars;
    std::map<Var, std::int64_t> weights;
    for (Var v = 1; v <= n; ++v) {
      vars.push_back(v);
      weights[v] = 1 + (v * 7) % 5;
    }
    const VarSet universe(vars);
    std::vector<VarSet> classes = {VarSet{}, VarSet{}};
    for (Var v : vars) classes[v % 2].insert(v);
    for (OrderingKind kind : kAllKinds) {
      if (kind == OrderingKind::kUniversal) continue;
      const Ordering ord(kind, classes, weights);
      const auto p = check_ordering_properties(ord, universe, 1 << 20);
      EXPECT_TRUE(p.exhaustive);
      EXPECT_TRUE(p.meaningful.pass) << to_string(kind) << " n=" << n;
      EXPECT_TRUE(p.irredundant.pass) << to_string(kind) << " n=" << n;
    }
  }
}

TEST(PropertiesTest, SamplesWhenBudgetIsSmall) {
  const auto p = check_ordering_properties(Ordering(OrderingKind::kCardPref),
                                           VarSet{1, 2, 3, 4, 5, 6}, 50, 7);
  EXPECT_FALSE(p.exhaustive);
  EXPECT_EQ(p.meaningful.cases, 50u);
  EXPECT_TRUE(p.meaningful.pass);
  EXPECT_TRUE(p.irredundant.pass);
}

TEST(ParseOrderingTest, Spellings) {
  EXPECT_EQ(parse_ordering("none"), OrderingKind::kUniversal);
  EXPECT_EQ(parse_ordering("prio-card"), OrderingKind::kCardPrio);
  EXPECT_EQ(parse_ordering("penalty"), OrderingKind::kPenalty);
  EXPECT_FALSE(parse_ordering("lexicographic").has_value());
}

}  // namespace
}  // namespace abduction
