#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pareto/axioms.hpp"
#include "pareto/welfare.hpp"

namespace pareto {

// One consecutive step of a witness cycle and the axiom that forces it.
struct WitnessEdge {
  std::string left;
  std::string right;
  Axiom axiom = Axiom::MinimalAlmostWeakPareto;
  RelValue forced = RelValue::LeftStrict;
  std::optional<std::size_t> pivot;  // 0-based
};

// A profile family exhibiting an impossibility: consecutive profiles of
// expected_cycle (wrapping around) are forced by the listed axioms, and
// together the forced relations break `contradicts`.
struct WitnessBundle {
  std::shared_ptr<const ProfileSet> profiles;
  std::vector<std::string> expected_cycle;
  Axiom forcing_axiom = Axiom::MinimalAlmostWeakPareto;
  std::vector<std::optional<std::size_t>> pivot_schedule;  // one per edge
  std::vector<WitnessEdge> edges;                          // edges[k]: cycle[k] -> cycle[k+1 mod len]
  AxiomSet contradicts;                                    // the axiom set shown inconsistent

  // Every relation forced by the Pareto-family axioms in `contradicts`, the
  // rest Noncomparable.
  Ranking forced_ranking(const AxiomOptions& opts = {}) const;
};

// Grid of levels for the first impossibility family: levels[i][tau - 1] is
// individual i's level at superscript tau, tau = 1 .. 2n-1.
using LevelGrid = std::vector<std::vector<Rational>>;

WitnessBundle gen_temkin();

// 2n profiles u1..u2n. Individual i (1-based) is absent in profile 2n-2i+2;
// otherwise individual i in profile k sits at superscript (2n-2i+2-k) mod 2n.
// Default grid: level tau at superscript tau. Throws ArgumentError for n < 2,
// a grid of the wrong shape, or a grid not strictly increasing in tau.
WitnessBundle gen_theorem1(std::size_t n, const std::optional<LevelGrid>& levels = std::nullopt);

// 2n+1 profiles from (u,..,u) to (u+eps,..,u+eps), alternately deleting and
// raising individuals left to right. Throws ArgumentError unless n >= 2 and u, eps > 0.
WitnessBundle gen_theorem2(std::size_t n, const Rational& u, const Rational& eps);

// k = 1: incomplete preferences over careers, k = 2: multi-dimensional
// well-being, k = 3: intergenerational levels. Throws ArgumentError otherwise.
WitnessBundle gen_application(int k);

struct VotingProfile {
  std::vector<std::string> voters;
  std::vector<std::string> alternatives;
  std::vector<std::vector<std::size_t>> rankings;  // per voter, best first
};

// Voter k ranks a_k ≻ a_{k+1} ≻ ... ≻ a_{k-1}. Throws ArgumentError for n < 3.
VotingProfile gen_latin_square(std::size_t n);
// Number of voters ranking alternative a above b.
std::size_t tally(const VotingProfile& vp, std::size_t a, std::size_t b);
// A cycle in "a beats b with at least `threshold` votes", if one exists.
std::optional<std::vector<std::size_t>> supermajority_cycle(const VotingProfile& vp, std::size_t threshold);

enum class RepugnantVariant { Weak, Reverse };

// Crowd of `crowd` individuals at c + delta (weak) or c - delta (reverse)
// against `elite` individuals at `high` (weak) or one individual at c (reverse).
struct RepugnantParams {
  Rational delta;
  std::size_t crowd = 0;
  std::size_t elite = 0;
  Rational high;
};

RepugnantParams default_repugnant_params(RepugnantVariant variant, const Rational& c);

struct RepugnantDemo {
  std::shared_ptr<const ProfileSet> profiles;  // [crowd, other]
  RepugnantVariant variant = RepugnantVariant::Weak;
  Rational critical_level;
  RepugnantParams params;
  Rational crowd_value;  // sum of (level - c) over the crowd
  Rational other_value;
  RelValue expected = RelValue::LeftStrict;  // crowd vs other under CLU(c)
};

// Throws ArgumentError unless delta > 0 and the parameters produce the named
// conclusion.
RepugnantDemo gen_repugnant_demo(const Rational& c, RepugnantVariant variant,
                                 const std::optional<RepugnantParams>& params = std::nullopt);

}  // namespace pareto
