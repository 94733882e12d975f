#include <random>

#include <gtest/gtest.h>

#include "pareto/axioms.hpp"
#include "pareto/error.hpp"
#include "pareto/witnesses.hpp"
#include "test_support.hpp"

using namespace pareto;
using pareto::testing::level_set;
using pareto::testing::X;

namespace {

using R = RelValue;

Ranking pair_ranking(const std::shared_ptr<const ProfileSet>& s, R rel) {
  Ranking r(s);
  r.set(0, 1, rel);
  return r;
}

}  // namespace

TEST(AxiomSet, ParsesNamesAndRejectsUnknown) {
  AxiomSet a = AxiomSet::parse("mawp,acyclicity");
  EXPECT_TRUE(a.contains(Axiom::MinimalAlmostWeakPareto));
  EXPECT_TRUE(a.contains(Axiom::Acyclicity));
  EXPECT_FALSE(a.contains(Axiom::WeakPareto));
  try {
    AxiomSet::parse("mawp,pareto");
    FAIL();
  } catch (const ArgumentError& e) {
    EXPECT_NE(std::string(e.what()).find("weak-anonymity"), std::string::npos);
  }
  EXPECT_THROW(AxiomSet::parse("veto"), ArgumentError);
  EXPECT_EQ(AxiomSet::parse(AxiomSet::all().str()), AxiomSet::all());
}

TEST(Ranking, StoresEachPairOnceAndMirrors) {
  auto s = level_set({{"a", {1, 1}}, {"b", {2, 2}}, {"c", {3, 3}}});
  Ranking r(s);
  EXPECT_EQ(r.pair_count(), 3u);
  r.set("b", "a", R::LeftStrict);
  EXPECT_EQ(r.relation("a", "b"), R::RightStrict);
  EXPECT_EQ(r.relation(2, 2), R::Indifferent);
  EXPECT_THROW(r.set(1, 1, R::LeftStrict), ArgumentError);
}

TEST(Acyclicity, Examples) {
  WitnessBundle t = gen_temkin();
  Ranking r = t.forced_ranking();
  AxiomReport rep = check_acyclicity(r);
  EXPECT_FALSE(rep.holds);
  ASSERT_EQ(rep.violations.size(), 1u);
  EXPECT_EQ(rep.violations[0].profiles, (std::vector<std::string>{"u", "v", "w"}));

  EXPECT_TRUE(check_acyclicity(Ranking(t.profiles)).holds);

  auto s = level_set({{"a", {1, 1}}, {"b", {2, 2}}, {"c", {3, 3}}});
  Ranking chain(s);
  chain.set("a", "b", R::LeftStrict);
  chain.set("b", "c", R::LeftStrict);
  EXPECT_TRUE(check_acyclicity(chain).holds);
}

TEST(Acyclicity, AgreesWithClosureOracle) {
  std::mt19937 rng(17);
  for (int i = 0; i < 600; ++i) {
    auto s = pareto::testing::random_level_set(rng, 2 + i % 5, 2);
    Ranking r = pareto::testing::random_ranking(rng, s);
    EXPECT_EQ(check_acyclicity(r).holds, !pareto::testing::has_strict_cycle(r));
  }
}

TEST(IndifferenceTransitivity, Examples) {
  auto s = level_set({{"a", {1, 1}}, {"b", {2, 2}}, {"c", {3, 3}}});
  Ranking r(s, R::Indifferent);
  EXPECT_TRUE(check_indifference_transitivity(r).holds);
  r.set("a", "c", R::LeftStrict);
  AxiomReport rep = check_indifference_transitivity(r);
  EXPECT_FALSE(rep.holds);
  EXPECT_EQ(rep.violations[0].profiles, (std::vector<std::string>{"a", "b", "c"}));

  Ranking vac(s);
  vac.set("a", "b", R::Indifferent);
  EXPECT_TRUE(check_indifference_transitivity(vac).holds);
}

TEST(WeakPareto, Examples) {
  EXPECT_FALSE(check_weak_pareto(pair_ranking(level_set({{"a", {2, 2}}, {"b", {1, 1}}}), R::Indifferent)).holds);
  for (R rel : kAllRelValues) {
    EXPECT_TRUE(check_weak_pareto(pair_ranking(level_set({{"a", {2, X}}, {"b", {1, 1}}}), rel)).holds);
  }
  WitnessBundle t2 = gen_theorem2(2, 1, 1);
  Ranking r(t2.profiles);
  r.set("u5", "u1", R::LeftStrict);
  EXPECT_TRUE(check_weak_pareto(r).holds);
}

TEST(ExtendedPareto, Examples) {
  WitnessBundle t = gen_temkin();
  EXPECT_FALSE(check_extended_pareto(Ranking(t.profiles)).holds);
  EXPECT_FALSE(check_extended_pareto(pair_ranking(level_set({{"a", {5, X}}, {"b", {1, 1}}}), R::RightStrict)).holds);
  EXPECT_TRUE(check_extended_pareto(pair_ranking(level_set({{"a", {5, X}}, {"b", {1, 1}}}), R::LeftStrict)).holds);
  EXPECT_FALSE(forcing(Axiom::ExtendedPareto, *level_set({{"a", {1, 1}}, {"b", {1, 1}}}), 0, 1));
}

TEST(MinimalAlmostWeakPareto, Examples) {
  auto s = level_set({{"a", {3, 1}}, {"b", {2, X}}});
  EXPECT_TRUE(mawp_antecedent(*s, 0, 1, 1));
  EXPECT_FALSE(mawp_antecedent(*s, 0, 1, 0));
  auto inst = forcing(Axiom::MinimalAlmostWeakPareto, *s, 0, 1);
  ASSERT_TRUE(inst);
  EXPECT_EQ(inst->forced, R::LeftStrict);
  EXPECT_EQ(inst->pivot, 1u);

  auto temkin = gen_temkin().profiles;
  EXPECT_FALSE(forcing(Axiom::MinimalAlmostWeakPareto, *temkin, 0, 1));

  auto both = level_set({{"a", {2, 2}}, {"b", {1, 1}}});
  EXPECT_TRUE(mawp_antecedent(*both, 0, 1, 0));
  EXPECT_TRUE(mawp_antecedent(*both, 0, 1, 1));
  EXPECT_FALSE(check_minimal_almost_weak_pareto(pair_ranking(both, R::Noncomparable)).holds);
}

TEST(MinimalAlmostWeakPareto, PivotReadings) {
  // Equal pivot: "v_j at least u_j" holds, so only the weak reading qualifies.
  auto s = level_set({{"a", {3, 1}}, {"b", {2, 1}}});
  EXPECT_FALSE(mawp_antecedent(*s, 0, 1, 1));
  EXPECT_TRUE(mawp_antecedent(*s, 0, 1, 1, AxiomOptions{true, 100}));
}

TEST(MinimalAlmostParetoIndifference, Examples) {
  auto a = level_set({{"a", {1, 1}}, {"b", {X, 1}}});
  auto inst = forcing(Axiom::MinimalAlmostParetoIndifference, *a, 0, 1);
  ASSERT_TRUE(inst);
  EXPECT_EQ(inst->forced, R::Indifferent);
  EXPECT_EQ(inst->pivot, 0u);

  auto b = level_set({{"a", {2, 1}}, {"b", {2, X}}});
  inst = forcing(Axiom::MinimalAlmostParetoIndifference, *b, 0, 1);
  ASSERT_TRUE(inst);
  EXPECT_EQ(inst->pivot, 1u);

  EXPECT_FALSE(forcing(Axiom::MinimalAlmostParetoIndifference, *level_set({{"a", {2, 1}}, {"b", {1, X}}}), 0, 1));
}

TEST(WeakAnonymity, SwapImagesMustAgree) {
  auto s = level_set({{"a", {3, 1}}, {"b", {2, X}}, {"c", {1, 3}}, {"d", {X, 2}}});
  Ranking r(s);
  r.set("a", "b", R::LeftStrict);
  EXPECT_FALSE(check_weak_anonymity(r).holds);
  r.set("c", "d", R::LeftStrict);
  EXPECT_TRUE(check_weak_anonymity(r).holds);

  auto lone = level_set({{"a", {3, 1}}, {"b", {2, X}}});
  EXPECT_TRUE(check_weak_anonymity(pair_ranking(lone, R::LeftStrict)).holds);
}

TEST(WeakAnonymity, RelabelledCopyOfAProfileIsIndifferent) {
  auto s = level_set({{"a", {3, 1}}, {"b", {1, 3}}});
  EXPECT_FALSE(check_weak_anonymity(pair_ranking(s, R::LeftStrict)).holds);
  EXPECT_TRUE(check_weak_anonymity(pair_ranking(s, R::Indifferent)).holds);
}

TEST(OrdinalNoncomparability, SharedSignaturesMustAgree) {
  auto s = level_set({{"a", {3, 1}}, {"b", {2, X}}, {"c", {10, 5}}, {"d", {7, X}}});
  Ranking r(s);
  r.set("a", "b", R::LeftStrict);
  EXPECT_FALSE(check_ordinal_noncomparability(r).holds);
  r.set("c", "d", R::LeftStrict);
  EXPECT_FALSE(check_ordinal_noncomparability(r).holds);  // (c, b) shares the signature too
  r.set("c", "b", R::LeftStrict);
  EXPECT_TRUE(check_ordinal_noncomparability(r).holds);

  auto diff = level_set({{"a", {2, 2}}, {"b", {1, 1}}, {"c", {X, 2}}});
  Ranking free(diff);
  free.set("a", "b", R::LeftStrict);
  EXPECT_TRUE(check_ordinal_noncomparability(free).holds);

  EXPECT_THROW(check_ordinal_noncomparability(Ranking(gen_application(1).profiles)), UnsupportedDomainError);

  auto twins = level_set({{"a", {1, 1}}, {"b", {1, 1}}});
  EXPECT_FALSE(check_ordinal_noncomparability(pair_ranking(twins, R::Noncomparable)).holds);
  EXPECT_TRUE(check_ordinal_noncomparability(pair_ranking(twins, R::Indifferent)).holds);
}

TEST(Veto, Examples) {
  auto s = level_set({{"a", {5, X}}, {"b", {4, 3}}});
  EXPECT_TRUE(veto_antecedent(*s, 0, 1, 1));
  EXPECT_FALSE(check_veto(pair_ranking(s, R::LeftStrict), 1).holds);
  EXPECT_TRUE(check_veto(pair_ranking(s, R::Noncomparable), 1).holds);
  EXPECT_TRUE(check_veto(pair_ranking(s, R::LeftStrict), 0).holds);
  EXPECT_THROW(check_veto(Ranking(s), 2), ArgumentError);
  EXPECT_THROW(check(Axiom::Veto, Ranking(s)), ArgumentError);
}

TEST(Checkers, ViolationListIsCappedButCounted) {
  auto s = gen_theorem1(4).profiles;
  AxiomReport rep = check_minimal_almost_weak_pareto(Ranking(s), AxiomOptions{false, 2});
  EXPECT_FALSE(rep.holds);
  EXPECT_EQ(rep.violations.size(), 2u);
  EXPECT_GE(rep.violation_count, 8u);
}

// A Pareto-family checker passes exactly when every forced instance is met.
TEST(Checkers, ForcingAxiomsMatchTheirInstances) {
  std::mt19937 rng(23);
  const Axiom family[] = {Axiom::WeakPareto, Axiom::ExtendedPareto, Axiom::MinimalAlmostWeakPareto,
                          Axiom::MinimalAlmostParetoIndifference};
  for (int i = 0; i < 400; ++i) {
    auto s = pareto::testing::random_level_set(rng, 3, 2 + i % 2, 2);
    Ranking r = pareto::testing::random_ranking(rng, s);
    for (Axiom a : family) {
      bool met = true;
      for (std::size_t u = 0; u < s->size(); ++u) {
        for (std::size_t v = 0; v < s->size(); ++v) {
          if (u == v) continue;
          auto inst = forcing(a, *s, u, v);
          if (inst && r.relation(u, v) != inst->forced) met = false;
        }
      }
      EXPECT_EQ(check(a, r).holds, met) << axiom_name(a);
      // Forcing the instances into the ranking makes the checker pass.
      Ranking fixed = r;
      for (const AxiomInstance& inst : forced_instances(a, *s)) fixed.set(inst.left, inst.right, inst.forced);
      if (check(a, fixed).holds) continue;
      // Instances can only disagree with each other, never with the checker.
      bool clash = false;
      for (const AxiomInstance& x : forced_instances(a, *s)) {
        if (fixed.relation(x.left, x.right) != x.forced) clash = true;
      }
      EXPECT_TRUE(clash);
    }
  }
}

// Extended Pareto and minimal almost weak Pareto never force opposite relations
// on one pair for small populations.
TEST(Checkers, ExtendedParetoAndMawpAreCompatible) {
  std::mt19937 rng(29);
  for (int i = 0; i < 1500; ++i) {
    const std::size_t n = 2 + i % 2;
    auto s = pareto::testing::random_level_set(rng, 2, n, 3, 0.3);
    for (std::size_t u = 0; u < 2; ++u) {
      const std::size_t v = 1 - u;
      auto ep = forcing(Axiom::ExtendedPareto, *s, u, v);
      auto mw = forcing(Axiom::MinimalAlmostWeakPareto, *s, u, v);
      auto mw_back = forcing(Axiom::MinimalAlmostWeakPareto, *s, v, u);
      if (ep && mw) EXPECT_EQ(ep->forced, mw->forced);
      if (ep && mw_back) ADD_FAILURE() << "opposite forcing";
    }
  }
}
