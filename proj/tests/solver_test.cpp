#include <random>

#include <gtest/gtest.h>

#include "pareto/error.hpp"
#include "pareto/io.hpp"
#include "pareto/solver.hpp"
#include "pareto/witnesses.hpp"
#include "test_support.hpp"

using namespace pareto;
using pareto::testing::level_set;
using pareto::testing::X;

namespace {

using R = RelValue;

const AxiomSet kMawpAcyc{Axiom::MinimalAlmostWeakPareto, Axiom::Acyclicity};
const AxiomSet kIndifferenceAxioms{Axiom::WeakPareto, Axiom::MinimalAlmostParetoIndifference,
                         Axiom::IndifferenceTransitivity};

AxiomSet random_axioms(std::mt19937& rng) {
  std::bernoulli_distribution coin(0.4);
  AxiomSet a;
  for (Axiom x : kSetAxioms) {
    if (coin(rng)) a.insert(x);
  }
  return a;
}

// Independent count: every assignment, each checked from scratch.
std::uint64_t oracle_count(const Query& q) {
  const std::size_t m = q.profiles->size();
  const std::size_t k = pair_count(m);
  std::uint64_t total = 1, count = 0;
  for (std::size_t i = 0; i < k; ++i) total *= 4;
  for (std::uint64_t code = 0; code < total; ++code) {
    Ranking r(q.profiles);
    std::uint64_t c = code;
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a + 1; b < m; ++b, c /= 4) r.set(a, b, kAllRelValues[c % 4]);
    }
    bool ok = true;
    for (const Requirement& req : q.extra) ok = ok && r.relation(req.left, req.right) == req.rel;
    if (q.axioms.contains(Axiom::Acyclicity)) ok = ok && !pareto::testing::has_strict_cycle(r);
    for (Axiom a : q.axioms.members()) {
      if (a != Axiom::Acyclicity) ok = ok && check(a, r).holds;
    }
    count += ok;
  }
  return count;
}

}  // namespace

TEST(Propagate, MawpFamilyForcesTheWrapAroundCycle) {
  WitnessBundle b = gen_theorem1(2);
  PropagationResult p = propagate(Query{b.profiles, {Axiom::MinimalAlmostWeakPareto}, {}, {}});
  EXPECT_EQ(p.conflict, ConflictKind::None);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(p.relation(k, (k + 1) % 4), R::LeftStrict);
}

TEST(Propagate, IndifferenceFamilyForcesFourIndifferencesAndOneStrictEdge) {
  WitnessBundle b = gen_theorem2(2, 1, 1);
  PropagationResult p =
      propagate(Query{b.profiles, {Axiom::MinimalAlmostParetoIndifference, Axiom::WeakPareto}, {}, {}});
  for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(p.relation(k, k + 1), R::Indifferent);
  EXPECT_EQ(p.relation(4, 0), R::LeftStrict);
  EXPECT_EQ(p.forced_count(), 5u);
}

TEST(Propagate, NoAxiomsForceNothing) {
  PropagationResult p = propagate(Query{gen_theorem1(3).profiles, {}, {}, {}});
  EXPECT_EQ(p.forced_count(), 0u);
  EXPECT_EQ(p.conflict, ConflictKind::None);
}

TEST(Solve, MawpFamilyIsUnsatWithCycleOfLength2n) {
  for (std::size_t n = 2; n <= 5; ++n) {
    Query q{gen_theorem1(n).profiles, kMawpAcyc, {}, {}};
    Certificate c = solve(q);
    EXPECT_EQ(c.verdict, Verdict::Unsat);
    EXPECT_EQ(c.conflict, ConflictKind::StrictCycle);
    EXPECT_EQ(c.forced_cycle.size(), 2 * n);
    EXPECT_FALSE(validate_certificate(q, c));
    Certificate control = solve(Query{q.profiles, {Axiom::Acyclicity}, {}, {}});
    EXPECT_EQ(control.verdict, Verdict::Sat);
  }
}

TEST(Solve, IndifferenceFamilyIsUnsatAndEveryAxiomIsNeeded) {
  for (std::size_t n = 2; n <= 3; ++n) {
    Query q{gen_theorem2(n, 1, 1).profiles, kIndifferenceAxioms, {}, {}};
    Certificate c = solve(q);
    EXPECT_EQ(c.verdict, Verdict::Unsat);
    EXPECT_EQ(c.conflict, ConflictKind::IndifferenceChain);
    for (Axiom a : kIndifferenceAxioms.members()) {
      EXPECT_EQ(solve(Query{q.profiles, kIndifferenceAxioms.without(a), {}, {}}).verdict, Verdict::Sat) << axiom_name(a);
    }
  }
}

TEST(Solve, TemkinCycle) {
  Query q{gen_temkin().profiles, {Axiom::ExtendedPareto, Axiom::Acyclicity}, {}, {}};
  Certificate c = solve(q);
  ASSERT_EQ(c.verdict, Verdict::Unsat);
  ASSERT_EQ(c.forced_cycle.size(), 3u);
  EXPECT_EQ(c.forced_cycle[0].from, 0u);
  EXPECT_EQ(c.forced_cycle[1].from, 1u);
  EXPECT_EQ(c.forced_cycle[2].from, 2u);
}

TEST(Solve, RequirementClash) {
  auto s = level_set({{"a", {2, 2}}, {"b", {1, 1}}});
  Query q{s, {Axiom::WeakPareto}, {{1, 0, R::LeftStrict}}, {}};
  Certificate c = solve(q);
  EXPECT_EQ(c.verdict, Verdict::Unsat);
  EXPECT_EQ(c.conflict, ConflictKind::PairClash);
  EXPECT_FALSE(validate_certificate(q, c));
  EXPECT_THROW(solve(Query{s, {}, {{0, 0, R::LeftStrict}}, {}}), ArgumentError);
}

TEST(Solve, TransitivityChainAgainstARequirement) {
  // a∼b and b∼c are forced, so a≻c cannot be required under transitivity.
  auto s = level_set({{"a", {1, 1}}, {"b", {X, 1}}, {"c", {1, 1}}});
  Query sat{s, {Axiom::MinimalAlmostParetoIndifference}, {}, {}};
  EXPECT_EQ(solve(sat).verdict, Verdict::Sat);
  Query unsat{s, {Axiom::MinimalAlmostParetoIndifference, Axiom::IndifferenceTransitivity},
              {{0, 2, R::LeftStrict}}, {}};
  Certificate c = solve(unsat);
  EXPECT_EQ(c.verdict, Verdict::Unsat);
  EXPECT_FALSE(validate_certificate(unsat, c));
}

TEST(Solve, BudgetAndDomainErrors) {
  Query big{gen_theorem1(6).profiles, {Axiom::Acyclicity}, {}, {}};
  EXPECT_THROW(solve(big), ResourceError);
  EXPECT_EQ(solve(big, SolverOptions{100}).verdict, Verdict::Sat);
  EXPECT_THROW(solve(Query{gen_application(1).profiles, {Axiom::OrdinalNoncomparability}, {}, {}}),
               UnsupportedDomainError);
}

TEST(Enumerate, Fixtures) {
  Query q{gen_theorem1(2).profiles, kMawpAcyc, {}, {}};
  EXPECT_EQ(enumerate_all(q), 0u);
  EXPECT_EQ(enumerate_all(Query{q.profiles, {}, {}, {}}), 4096u);
  auto three = level_set({{"a", {1, X}}, {"b", {X, 1}}, {"c", {2, 2}}});
  Query acyc{three, {Axiom::Acyclicity}, {}, {}};
  EXPECT_EQ(enumerate_all(acyc), oracle_count(acyc));
  EXPECT_EQ(enumerate_all(acyc), 62u);  // 64 minus the two cyclic orientations
  EXPECT_THROW(enumerate_all(Query{gen_theorem1(3).profiles, {}, {}, {}}), ResourceError);
}

TEST(Certificates, TamperedCertificatesAreRejected) {
  Query q{gen_theorem1(2).profiles, kMawpAcyc, {}, {}};
  Certificate c = solve(q);
  Certificate wrong_pivot = c;
  wrong_pivot.derivation[0].pivot = 0;
  EXPECT_TRUE(validate_certificate(q, wrong_pivot));
  Certificate reversed = c;
  reversed.derivation[1].rel = R::RightStrict;
  EXPECT_TRUE(validate_certificate(q, reversed));
  Certificate short_cycle = c;
  short_cycle.forced_cycle.pop_back();
  EXPECT_TRUE(validate_certificate(q, short_cycle));
  Certificate other_axioms = c;
  EXPECT_TRUE(validate_certificate(Query{q.profiles, {Axiom::Acyclicity}, {}, {}}, other_axioms));
  Certificate decided = c;
  decided.derivation[0].rule = Rule::Decision;
  EXPECT_TRUE(validate_certificate(q, decided));
}

// The solver agrees with an independent brute-force count on small queries.
TEST(Properties, SolverAgreesWithEnumeration) {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> pick_rel(0, 3);
  for (int i = 0; i < 250; ++i) {
    const std::size_t m = 2 + i % 3;
    auto s = pareto::testing::random_level_set(rng, m, 2 + i % 2, 2, 0.3);
    Query q{s, random_axioms(rng), {}, {}};
    if (i % 3 == 0) {
      std::uniform_int_distribution<std::size_t> idx(0, m - 1);
      std::size_t a = idx(rng), b = idx(rng);
      if (a != b) q.extra.push_back({a, b, kAllRelValues[pick_rel(rng)]});
    }
    Certificate c = solve(q);
    const std::uint64_t count = oracle_count(q);
    EXPECT_EQ(c.verdict == Verdict::Sat, count > 0) << "case " << i << " axioms " << q.axioms.str();
    EXPECT_EQ(enumerate_all(q), count);
    EXPECT_FALSE(validate_certificate(q, c));
    if (c.witness) EXPECT_TRUE(satisfies(q, *c.witness));
  }
}

TEST(Properties, DroppingAxiomsNeverLosesSatisfiability) {
  std::mt19937 rng(37);
  for (int i = 0; i < 150; ++i) {
    auto s = pareto::testing::random_level_set(rng, 4, 2, 2, 0.3);
    AxiomSet big = random_axioms(rng);
    if (solve(Query{s, big, {}, {}}).verdict == Verdict::Unsat) continue;
    for (Axiom a : big.members()) {
      EXPECT_EQ(solve(Query{s, big.without(a), {}, {}}).verdict, Verdict::Sat);
    }
  }
}

TEST(Properties, SolveIsDeterministic) {
  Query q{gen_application(3).profiles, kMawpAcyc, {}, {}};
  EXPECT_EQ(dump(certificate_to_json(q, solve(q))), dump(certificate_to_json(q, solve(q))));
  Query sat{gen_theorem1(3).profiles, {Axiom::Acyclicity, Axiom::WeakAnonymity}, {{0, 1, R::LeftStrict}}, {}};
  EXPECT_EQ(dump(certificate_to_json(sat, solve(sat))), dump(certificate_to_json(sat, solve(sat))));
}

TEST(VetoPower, EveryIndividualHoldsAVetoAtNTwo) {
  Theorem3Report rep = verify_theorem3(2);
  ASSERT_FALSE(rep.queries.empty());
  EXPECT_TRUE(rep.all_unsat());
  for (const VetoQuery& vq : rep.queries) EXPECT_FALSE(validate_certificate(vq.query, vq.certificate));
}

TEST(VetoPower, BothInvarianceAxiomsAreLoadBearing) {
  Theorem3Report no_onc = verify_theorem3(2, {Axiom::WeakAnonymity, Axiom::Acyclicity});
  EXPECT_GE(no_onc.sat_count(), 1u);
  Theorem3Report no_wa = verify_theorem3(2, {Axiom::OrdinalNoncomparability, Axiom::Acyclicity});
  EXPECT_EQ(no_wa.sat_count(), no_wa.queries.size());  // regression fixture
}

TEST(VetoPower, HoldsAtNThree) {
  Theorem3Report rep = verify_theorem3(3);
  EXPECT_EQ(rep.family->size(), 12u);
  EXPECT_TRUE(rep.all_unsat());
  EXPECT_THROW(verify_theorem3(4), ResourceError);
}

TEST(VetoPower, VetoCandidatesAreOneSided) {
  auto fam = theorem3_family(2);
  for (std::size_t j = 0; j < 2; ++j) {
    for (const VetoPair& vp : veto_candidates(*fam, j)) {
      const bool left_absent = (*fam)[vp.left][j].is_absent();
      const bool right_absent = (*fam)[vp.right][j].is_absent();
      EXPECT_NE(left_absent, right_absent);
      EXPECT_EQ(vp.side == VetoSide::AbsentInLeft, left_absent);
    }
  }
}
