#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pareto/axioms.hpp"

namespace pareto {

// "Some ranking must have left `rel` right here."
struct Requirement {
  std::size_t left = 0;
  std::size_t right = 0;
  RelValue rel = RelValue::LeftStrict;
};

struct Query {
  std::shared_ptr<const ProfileSet> profiles;
  AxiomSet axioms;
  std::vector<Requirement> extra;
  AxiomOptions options;
};

struct SolverOptions {
  // Maximum number of pairs left open after root propagation.
  std::size_t pair_budget = 45;
};

// Justification of a forced relation.
enum class Rule : unsigned char {
  WeakPareto,
  ExtendedPareto,
  MinimalAlmostWeakPareto,
  MinimalAlmostParetoIndifference,
  WeakAnonymity,
  OrdinalNoncomparability,
  IndifferenceTransitivity,
  Requirement,
  Decision,
};

const char* rule_name(Rule r);
std::optional<Rule> parse_rule(std::string_view name);

// left `rel` right, justified by `rule` applied to earlier steps.
struct Step {
  Rule rule = Rule::Decision;
  std::size_t left = 0;
  std::size_t right = 0;
  RelValue rel = RelValue::Noncomparable;
  std::optional<std::size_t> pivot;        // 0-based, Pareto-family rules
  std::vector<std::size_t> premises;       // indices of earlier steps
  std::optional<Permutation> permutation;  // WeakAnonymity: carries the premise pair onto this one
};

// Edge of a conflict chain: `from rel to`, established by derivation[step].
struct CycleEdge {
  std::size_t step = 0;
  std::size_t from = 0;
  std::size_t to = 0;
  RelValue rel = RelValue::LeftStrict;
};

enum class Verdict { Sat, Unsat };

enum class ConflictKind {
  None,
  StrictCycle,        // closed chain of forced ≻ edges, breaks acyclicity
  IndifferenceChain,  // forced ∼ path whose endpoints are forced not ∼
  PairClash,          // one pair forced to two different relations
  Exhaustion,         // no single forced conflict; every branch failed
};

const char* to_string(Verdict v);
const char* to_string(ConflictKind k);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::size_t pairs = 0;
  std::size_t forced_pairs = 0;  // fixed by root propagation
  double elapsed_ms = 0.0;
};

struct Certificate {
  Verdict verdict = Verdict::Sat;
  std::optional<Ranking> witness;        // Sat only
  ConflictKind conflict = ConflictKind::None;
  std::vector<Step> derivation;          // premises precede their uses
  std::vector<CycleEdge> forced_cycle;   // in chain order
  SearchStats stats;
};

struct PropagationResult {
  std::size_t profile_count = 0;
  // Canonical pair order; the relation of the lower-indexed profile to the higher.
  std::vector<std::optional<RelValue>> assignment;
  ConflictKind conflict = ConflictKind::None;
  std::vector<Step> derivation;
  std::vector<CycleEdge> forced_cycle;

  std::optional<RelValue> relation(std::size_t a, std::size_t b) const;
  std::size_t forced_count() const;
};

// Relations forced before any choice: Pareto-family consequences, requirements,
// equalities from anonymity orbits and signature classes, indifference
// transitivity. Throws UnsupportedDomainError when ordinal noncomparability is
// requested on outcome profiles, ArgumentError for bad requirements.
PropagationResult propagate(const Query& q);

// Depth-first search with propagation. Throws ResourceError when more than
// pair_budget pairs remain open after root propagation.
Certificate solve(const Query& q, const SolverOptions& opts = {});

// Brute force over every assignment, checked with the axiom checkers.
// Throws ResourceError beyond max_pairs pairs.
std::uint64_t enumerate_all(const Query& q, std::size_t max_pairs = 8);

// Empty when the certificate checks out against the query; otherwise the reason.
std::optional<std::string> validate_certificate(const Query& q, const Certificate& c);

// True when the ranking satisfies every axiom and requirement of the query.
bool satisfies(const Query& q, const Ranking& r);

// --- veto power ---------------------------------------------------------

// The first impossibility family closed under relabelling of individuals.
std::shared_ptr<const ProfileSet> theorem3_family(std::size_t n);

enum class VetoSide { AbsentInLeft, AbsentInRight };

struct VetoPair {
  std::size_t individual = 0;  // 0-based
  VetoSide side = VetoSide::AbsentInLeft;
  std::size_t left = 0;
  std::size_t right = 0;
};

// Ordered pairs of `s` whose strict ranking would override individual j.
std::vector<VetoPair> veto_candidates(const ProfileSet& s, std::size_t j);

struct VetoQuery {
  std::size_t individual = 0;
  std::pair<std::string, std::string> absent_in_left;   // family pair
  std::pair<std::string, std::string> absent_in_right;  // family pair
  Query query;
  Certificate certificate;
};

struct Theorem3Report {
  std::size_t n = 0;
  std::shared_ptr<const ProfileSet> family;
  AxiomSet axioms;
  std::vector<VetoQuery> queries;

  bool all_unsat() const;
  std::size_t sat_count() const;
};

// For every individual j and every veto candidate of the family, asks whether
// a ranking can override j on both sides at once: a fresh pair shaped like an
// absent-in-left candidate and a fresh pair shaped like an absent-in-right
// candidate are added and required strict. Each such query is Unsat when
// every individual holds a veto on at least one side. Throws ResourceError
// for n outside {2, 3}.
Theorem3Report verify_theorem3(std::size_t n,
                               const AxiomSet& axioms = {Axiom::WeakAnonymity, Axiom::OrdinalNoncomparability,
                                                         Axiom::Acyclicity},
                               const SolverOptions& opts = {});

}  // namespace pareto
