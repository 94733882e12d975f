#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "pareto/error.hpp"
#include "pareto/welfare.hpp"
#include "pareto/witnesses.hpp"
#include "test_support.hpp"

using namespace pareto;
using pareto::testing::X;

namespace {

Welfare L(std::int64_t x) { return Welfare::level(Rational(x)); }
const Welfare A = Welfare::absent();

}  // namespace

TEST(CompareIndividual, Levels) {
  EXPECT_EQ(compare_individual(L(2), L(1)), IndividualComparison::Better);
  EXPECT_EQ(compare_individual(L(1), L(2)), IndividualComparison::Worse);
  EXPECT_EQ(compare_individual(L(5), L(5)), IndividualComparison::Equal);
}

TEST(CompareIndividual, AbsenceIsNeverRanked) {
  EXPECT_EQ(compare_individual(A, L(2)), IndividualComparison::Noncomparable);
  EXPECT_EQ(compare_individual(L(2), A), IndividualComparison::Noncomparable);
  EXPECT_EQ(compare_individual(A, A), IndividualComparison::Noncomparable);
}

TEST(CompareIndividual, CareerOutcomesAcrossFieldsAreNoncomparable) {
  WitnessBundle app1 = gen_application(1);
  const OutcomeDomain* d = app1.profiles->domain_ptr();
  ASSERT_NE(d, nullptr);
  EXPECT_EQ(compare_individual(Welfare::outcome("scholar A+"), Welfare::outcome("artist A-"), d),
            IndividualComparison::Noncomparable);
  EXPECT_EQ(compare_individual(Welfare::outcome("scholar A"), Welfare::outcome("scholar A-"), d),
            IndividualComparison::Better);
  EXPECT_THROW(compare_individual(Welfare::outcome("astronaut"), Welfare::outcome("scholar A"), d), DomainError);
}

TEST(CompareIndividual, AntisymmetryProperty) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> lv(-3, 3);
  std::bernoulli_distribution gone(0.2);
  for (int i = 0; i < 1000; ++i) {
    Welfare a = gone(rng) ? A : L(lv(rng));
    Welfare b = gone(rng) ? A : L(lv(rng));
    EXPECT_EQ(compare_individual(a, b), mirror(compare_individual(b, a)));
  }
}

TEST(OutcomeDomain, RejectsNonOrders) {
  EXPECT_THROW(OutcomeDomain({"a", "b"}, {{"a", "a"}}), ArgumentError);
  EXPECT_THROW(OutcomeDomain({"a", "b"}, {{"a", "b"}, {"b", "a"}}), ArgumentError);
  EXPECT_THROW(OutcomeDomain({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}), ArgumentError);  // not transitive
  EXPECT_THROW(OutcomeDomain({"a"}, {{"a", "z"}}), ArgumentError);
  EXPECT_NO_THROW(OutcomeDomain::from_generators({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}));
}

TEST(Profile, RejectsEmptySociety) {
  EXPECT_THROW(Profile("u", {A, A}), ArgumentError);
  EXPECT_THROW(Profile("", {L(1)}), ArgumentError);
}

TEST(ProfileSet, ValidatesShape) {
  auto ind = numbered_individuals(2);
  EXPECT_THROW(ProfileSet(numbered_individuals(1), std::nullopt, {Profile("u", {L(1)})}), ArgumentError);
  EXPECT_THROW(ProfileSet(ind, std::nullopt, {Profile("u", {L(1), L(2)}), Profile("u", {L(2), L(1)})}),
               ArgumentError);
  EXPECT_THROW(ProfileSet(ind, std::nullopt, {Profile("u", {L(1)})}), ArgumentError);
  EXPECT_THROW(ProfileSet(ind, std::nullopt, {Profile("u", {Welfare::outcome("x"), L(1)})}), ArgumentError);
}

TEST(PairSignature, HandExamples) {
  auto s = pareto::testing::level_set({{"a", {3, 1}}, {"b", {2, X}}, {"c", {X, 2}}});
  using T = SignatureToken;
  EXPECT_EQ(pair_signature((*s)[0], (*s)[1]), (PairSignature{T::GT, T::RightAbsent}));
  EXPECT_EQ(pair_signature((*s)[0], (*s)[0]), (PairSignature{T::EQ, T::EQ}));
  EXPECT_EQ(pair_signature((*s)[2], (*s)[0]), (PairSignature{T::LeftAbsent, T::GT}));
}

TEST(PairSignature, ReversalAndMonotoneInvariance) {
  std::mt19937 rng(5);
  for (int i = 0; i < 300; ++i) {
    auto s = pareto::testing::random_level_set(rng, 2, 4, 5);
    const Profile& u = (*s)[0];
    const Profile& v = (*s)[1];
    EXPECT_EQ(pair_signature(v, u), reversed(pair_signature(u, v)));

    // A strictly increasing transform per individual leaves the signature unchanged.
    std::uniform_int_distribution<int> scale(1, 9), shift(-50, 50);
    std::vector<Welfare> tu, tv;
    for (std::size_t k = 0; k < u.size(); ++k) {
      Rational a(scale(rng)), b(shift(rng));
      auto f = [&](const Welfare& w) {
        if (w.is_absent()) return w;
        const Rational& x = w.level_value();
        return Welfare::level(a * x * x * x + b);
      };
      tu.push_back(f(u[k]));
      tv.push_back(f(v[k]));
    }
    EXPECT_EQ(pair_signature(Profile("x", tu), Profile("y", tv)), pair_signature(u, v));
  }
}

TEST(Permutation, HandExamples) {
  Profile u("u", {L(2), L(1), A});
  Profile swapped = permute_profile(u, Permutation{2, 1, 0});
  EXPECT_EQ(swapped.entries(), (std::vector<Welfare>{A, L(1), L(2)}));
  EXPECT_EQ(permute_profile(u, Permutation{0, 1, 2}).entries(), u.entries());
  Profile p("p", {L(3), L(1)});
  EXPECT_EQ(permute_profile(p, Permutation{1, 0}).entries(), (std::vector<Welfare>{L(1), L(3)}));
  EXPECT_THROW(permute_profile(u, Permutation{0, 0, 1}), ArgumentError);
}

TEST(Permutation, CompositionProperty) {
  std::mt19937 rng(9);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + i % 4;
    Permutation sigma(n), pi(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::iota(pi.begin(), pi.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    std::shuffle(pi.begin(), pi.end(), rng);
    auto s = pareto::testing::random_level_set(rng, 1, n, 9, 0.2);
    const auto& e = (*s)[0].entries();
    EXPECT_EQ(permute_entries(permute_entries(e, pi), sigma), permute_entries(e, compose(sigma, pi)));
    EXPECT_TRUE(is_bijection(compose(sigma, pi), n));
  }
}
