#include "abduction/sat_engine.h"

#include <gtest/gtest.h>

#include "abduction/oracle.h"
#include "abduction/random.h"
#include "test_instances.h"

namespace abduction {
namespace {

using testing::kF;
using testing::kP;
using testing::kT;

TEST(IsConsistentTest, TexExamples) {
  const Theory& t = testing::tex_instance().theory;
  EXPECT_FALSE(is_consistent(t, VarSet{kP, kT}).has_value());
  auto model = is_consistent(t, VarSet{kP});
  ASSERT_TRUE(model.has_value());
  for (const Clause& c : t.clauses()) EXPECT_TRUE(model->satisfies(c));
  EXPECT_TRUE(model->value(kP));
  EXPECT_TRUE(is_consistent(Theory(), VarSet{}).has_value());
}

TEST(IsConsistentTest, WitnessFollowsBranchingOrder) {
  // Lowest variable first, true first: x1 = true forces x2 = false.
  Theory t({Clause::from_dimacs({-1, -2}), Clause::from_dimacs({2, 3})});
  auto model = is_consistent(t, VarSet{});
  ASSERT_TRUE(model.has_value());
  EXPECT_EQ(model->true_vars(), (VarSet{1, 3}));
}

TEST(IsConsistentTest, EmptyClause) {
  Theory t({Clause()});
  EXPECT_FALSE(is_consistent(t, VarSet{}).has_value());
}

TEST(EntailsTest, TexExamples) {
  const Theory& t = testing::tex_instance().theory;
  EXPECT_TRUE(entails(t, VarSet{kP}, VarSet{kF}));
  EXPECT_FALSE(entails(t, VarSet{}, VarSet{kF}));
  EXPECT_TRUE(entails(t, VarSet{}, VarSet{}));
  EXPECT_TRUE(entails(Theory(), VarSet{7}, VarSet{}));
}

TEST(EntailsTest, OneCallPerQuery) {
  EngineCounters counters;
  entails(testing::tex_instance().theory, VarSet{kP}, VarSet{kF, kP}, &counters);
  EXPECT_EQ(counters.calls, 1u);
}

TEST(ForwardChainTest, Examples) {
  EXPECT_EQ(forward_chain(Theory({Clause::from_dimacs({-1, 2})}), VarSet{1}), (VarSet{1, 2}));
  EXPECT_EQ(forward_chain(Theory(), VarSet{}), VarSet{});
  EXPECT_EQ(forward_chain(Theory({Clause::from_dimacs({-1, -2, 3})}), VarSet{1}), VarSet{1});
  EXPECT_THROW(forward_chain(testing::tex_instance().theory, VarSet{}), AbductionError);
}

TEST(ForwardChainTest, FactsAndTautologies) {
  Theory t({Clause::from_dimacs({4}), Clause::from_dimacs({-4, 5}),
            Clause::from_dimacs({6, -6})});
  EXPECT_EQ(forward_chain(t, VarSet{}), (VarSet{4, 5}));
}

TEST(ClassifyTest, Examples) {
  EXPECT_EQ(classify_theory(testing::tex_instance().theory), (TheoryFlags{true, true, false}));
  EXPECT_EQ(classify_theory(Theory({Clause::from_dimacs({1, 2, 3, 4})})),
            (TheoryFlags{false, false, false}));
  EXPECT_EQ(classify_theory(Theory({Clause::from_dimacs({-1, 2})})),
            (TheoryFlags{true, true, true}));
}

Theory random_theory(Rng& rng, int n, int clauses, bool definite) {
  std::vector<Clause> out;
  for (int i = 0; i < clauses; ++i) {
    std::vector<Lit> lits;
    const int width = rng.between(1, 3);
    const int head = rng.between(0, width - 1);
    for (int j = 0; j < width; ++j) {
      const Var v = rng.between(1, n);
      const bool positive = definite ? j == head : rng.coin();
      lits.push_back(positive ? Lit::positive(v) : Lit::negative(v));
    }
    Clause c(std::move(lits));
    if (definite && c.num_positive() != 1) continue;
    out.push_back(std::move(c));
  }
  return Theory(std::move(out));
}

TEST(SatEngineProperty, AgreesWithTruthTable) {
  Rng rng(11);
  for (int round = 0; round < 400; ++round) {
    const int n = rng.between(1, 4);
    Theory t = random_theory(rng, n, rng.between(0, 7), false);
    VarSet assumptions;
    for (Var v = 1; v <= n; ++v) {
      if (rng.chance(1, 3)) assumptions.insert(v);
    }
    bool expected = false;
    for (std::uint64_t a = 0; a < (1u << n); ++a) {
      bool ok = true;
      for (Var v : assumptions) ok = ok && ((a >> (v - 1)) & 1);
      for (const Clause& c : t.clauses()) ok = ok && testing::satisfies(c, a);
      expected = expected || ok;
    }
    auto model = is_consistent(t, assumptions);
    ASSERT_EQ(model.has_value(), expected) << "round " << round;
    if (model) {
      for (const Clause& c : t.clauses()) EXPECT_TRUE(model->satisfies(c));
      for (Var v : assumptions) EXPECT_TRUE(model->value(v));
    }
  }
}

TEST(SatEngineProperty, ConjunctiveEntailmentSplits) {
  Rng rng(12);
  for (int round = 0; round < 300; ++round) {
    const int n = rng.between(2, 6);
    Theory t = random_theory(rng, n, rng.between(1, 8), false);
    VarSet s, goals;
    for (Var v = 1; v <= n; ++v) {
      if (rng.chance(1, 3)) s.insert(v);
      if (rng.chance(1, 3)) goals.insert(v);
    }
    bool each = true;
    for (Var g : goals) each = each && entails(t, s, VarSet{g});
    EXPECT_EQ(entails(t, s, goals), each) << "round " << round;
  }
}

TEST(SatEngineProperty, DefiniteHornAgreesWithChaining) {
  Rng rng(13);
  for (int round = 0; round < 300; ++round) {
    const int n = rng.between(2, 7);
    Theory t = random_theory(rng, n, rng.between(1, 10), true);
    ASSERT_TRUE(t.flags().is_definite_horn);
    VarSet s, goals;
    for (Var v = 1; v <= n; ++v) {
      if (rng.chance(1, 3)) s.insert(v);
      if (rng.chance(1, 3)) goals.insert(v);
    }
    EXPECT_TRUE(is_consistent(t, s).has_value());
    EXPECT_EQ(entails(t, s, goals), goals.is_subset_of(forward_chain(t, s)));
  }
}

TEST(SatEngineTest, ReusableAcrossCalls) {
  SatEngine engine(testing::tex_instance().theory);
  const std::vector<Lit> pt = {Lit::positive(kP), Lit::positive(kT)};
  const std::vector<Lit> p = {Lit::positive(kP)};
  const std::vector<Lit> not_f = {Lit::negative(kF)};
  EXPECT_FALSE(engine.solve(pt).has_value());
  EXPECT_TRUE(engine.solve(p).has_value());
  EXPECT_FALSE(engine.solve(p, &not_f).has_value());
  EXPECT_TRUE(engine.solve({}, &not_f).has_value());
  EXPECT_EQ(engine.calls(), 4u);
}

}  // namespace
}  // namespace abduction
