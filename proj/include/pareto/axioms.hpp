#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pareto/welfare.hpp"

namespace pareto {

// Social relation between an ordered pair of profiles (u, v):
// u ≻ v, u ≺ v, u ∼ v, or neither.
enum class RelValue : unsigned char { LeftStrict, RightStrict, Indifferent, Noncomparable };

inline constexpr RelValue kAllRelValues[] = {RelValue::LeftStrict, RelValue::RightStrict,
                                             RelValue::Indifferent, RelValue::Noncomparable};

RelValue mirror(RelValue r);
// "left_strict", "right_strict", "indifferent", "noncomparable".
const char* to_string(RelValue r);
std::optional<RelValue> parse_rel(std::string_view name);
// "≻", "≺", "∼", "⋈".
const char* symbol(RelValue r);

enum class Axiom : unsigned char {
  Acyclicity,
  IndifferenceTransitivity,
  WeakPareto,
  ExtendedPareto,
  MinimalAlmostWeakPareto,
  MinimalAlmostParetoIndifference,
  WeakAnonymity,
  OrdinalNoncomparability,
  Veto,  // per-individual property, never part of an AxiomSet
};

inline constexpr Axiom kSetAxioms[] = {
    Axiom::Acyclicity,           Axiom::IndifferenceTransitivity,       Axiom::WeakPareto,
    Axiom::ExtendedPareto,       Axiom::MinimalAlmostWeakPareto,        Axiom::MinimalAlmostParetoIndifference,
    Axiom::WeakAnonymity,        Axiom::OrdinalNoncomparability,
};

// Command-line names: acyclicity, indiff-trans, weak-pareto, extended-pareto,
// mawp, mapi, weak-anonymity, onc (and veto).
const char* axiom_name(Axiom a);
std::optional<Axiom> parse_axiom(std::string_view name);
// Comma-separated, stable order. Throws ArgumentError naming the valid choices.
std::string valid_axiom_names();

class AxiomSet {
 public:
  AxiomSet() = default;
  AxiomSet(std::initializer_list<Axiom> axioms);

  static AxiomSet all();
  // "mawp,acyclicity". Throws ArgumentError on unknown or empty names.
  static AxiomSet parse(std::string_view comma_list);

  bool contains(Axiom a) const { return (bits_ >> static_cast<unsigned>(a)) & 1U; }
  void insert(Axiom a);
  void erase(Axiom a) { bits_ &= ~(1U << static_cast<unsigned>(a)); }
  AxiomSet with(Axiom a) const;
  AxiomSet without(Axiom a) const;
  bool empty() const { return bits_ == 0; }
  bool is_subset_of(const AxiomSet& o) const { return (bits_ & ~o.bits_) == 0; }
  // In declaration order of Axiom.
  std::vector<Axiom> members() const;
  std::string str() const;

  friend bool operator==(const AxiomSet&, const AxiomSet&) = default;

 private:
  std::uint32_t bits_ = 0;
};

struct AxiomOptions {
  // Minimal almost weak Pareto pivot: off reads "v_j is not at least u_j",
  // on reads "v_j is not better than u_j" (lets an indifferent pivot qualify).
  bool pivot_weak = false;
  std::size_t max_violations = 100;
};

// Index of the unordered pair {a, b}, a < b, among m profiles.
std::size_t pair_index(std::size_t a, std::size_t b, std::size_t m);
std::size_t pair_count(std::size_t m);

// A relation for every unordered pair of profiles in a ProfileSet. (u, u) is
// Indifferent and not stored.
class Ranking {
 public:
  explicit Ranking(std::shared_ptr<const ProfileSet> base, RelValue fill = RelValue::Noncomparable);

  const ProfileSet& base() const { return *base_; }
  const std::shared_ptr<const ProfileSet>& base_ptr() const { return base_; }
  std::size_t size() const { return base_->size(); }
  std::size_t pair_count() const { return assignment_.size(); }

  RelValue relation(std::size_t a, std::size_t b) const;
  RelValue relation(const std::string& a, const std::string& b) const;
  // Sets the relation of (a, b); (b, a) becomes its mirror. Throws ArgumentError for a == b.
  void set(std::size_t a, std::size_t b, RelValue r);
  void set(const std::string& a, const std::string& b, RelValue r);

  // Canonical storage, oriented from the lower to the higher profile index.
  const std::vector<RelValue>& assignment() const { return assignment_; }

  friend bool operator==(const Ranking& a, const Ranking& b) {
    return (a.base_ == b.base_ || *a.base_ == *b.base_) && a.assignment_ == b.assignment_;
  }

 private:
  std::size_t require(const std::string& name) const;

  std::shared_ptr<const ProfileSet> base_;
  std::vector<RelValue> assignment_;
};

struct Violation {
  std::vector<std::string> profiles;
  std::string explanation;
};

struct AxiomReport {
  Axiom axiom = Axiom::Acyclicity;
  bool holds = true;
  std::vector<Violation> violations;  // capped at AxiomOptions::max_violations
  std::size_t violation_count = 0;    // uncapped
};

// One application of a Pareto-family axiom: the axiom's antecedent holds for
// (left, right) and it forces `forced` (LeftStrict or Indifferent).
struct AxiomInstance {
  Axiom axiom = Axiom::WeakPareto;
  std::size_t left = 0;
  std::size_t right = 0;
  RelValue forced = RelValue::LeftStrict;
  std::optional<std::size_t> pivot;  // 0-based individual

  friend bool operator==(const AxiomInstance&, const AxiomInstance&) = default;
};

// --- antecedents ------------------------------------------------------------

// Everyone exists in both and is strictly better off in u.
bool weak_pareto_antecedent(const ProfileSet& s, std::size_t u, std::size_t v);
// Nobody has v_i at least u_i.
bool extended_pareto_antecedent(const ProfileSet& s, std::size_t u, std::size_t v);
// Pivot j fails "v_j at least u_j" (or "v_j better than u_j" under pivot_weak)
// and everyone else is strictly better off in u.
bool mawp_antecedent(const ProfileSet& s, std::size_t u, std::size_t v, std::size_t j,
                     const AxiomOptions& opts = {});
// Pivot j is noncomparable and everyone else is co-existing and equal.
bool mapi_antecedent(const ProfileSet& s, std::size_t u, std::size_t v, std::size_t j);
// j is noncomparable through one-sided absence, everyone else strictly better in u.
bool veto_antecedent(const ProfileSet& s, std::size_t u, std::size_t v, std::size_t j);

bool is_pareto_family(Axiom a);

// What a Pareto-family axiom forces on the ordered pair (u, v), if anything.
// For MAWP the recorded pivot is the unique non-strict individual when there
// is one, otherwise individual 0.
std::optional<AxiomInstance> forcing(Axiom a, const ProfileSet& s, std::size_t u, std::size_t v,
                                     const AxiomOptions& opts = {});
// All instances over ordered pairs u != v, in (u, v) order.
std::vector<AxiomInstance> forced_instances(Axiom a, const ProfileSet& s, const AxiomOptions& opts = {});

// Sorted (u_i, v_i) columns. Two ordered pairs are related by a relabelling of
// individuals exactly when their keys are equal.
using AnonymityKey = std::vector<std::pair<Welfare, Welfare>>;
AnonymityKey anonymity_key(const Profile& u, const Profile& v);
// A bijection pi with permute(u) == x and permute(v) == y entry-wise, if any.
std::optional<Permutation> matching_permutation(const Profile& u, const Profile& v, const Profile& x,
                                                const Profile& y);
// Signature of a profile against itself carries only EQ and BothAbsent.
bool is_reflexive_signature(const PairSignature& s);

// --- checkers ---------------------------------------------------------------

AxiomReport check_acyclicity(const Ranking& r, const AxiomOptions& opts = {});
AxiomReport check_indifference_transitivity(const Ranking& r, const AxiomOptions& opts = {});
AxiomReport check_weak_pareto(const Ranking& r, const AxiomOptions& opts = {});
AxiomReport check_extended_pareto(const Ranking& r, const AxiomOptions& opts = {});
AxiomReport check_minimal_almost_weak_pareto(const Ranking& r, const AxiomOptions& opts = {});
AxiomReport check_minimal_almost_pareto_indifference(const Ranking& r, const AxiomOptions& opts = {});
AxiomReport check_weak_anonymity(const Ranking& r, const AxiomOptions& opts = {});
// Throws UnsupportedDomainError on outcome profiles.
AxiomReport check_ordinal_noncomparability(const Ranking& r, const AxiomOptions& opts = {});
// j is 0-based. Throws ArgumentError when out of range.
AxiomReport check_veto(const Ranking& r, std::size_t j, const AxiomOptions& opts = {});

// Dispatch for every set axiom. Throws ArgumentError for Axiom::Veto.
AxiomReport check(Axiom a, const Ranking& r, const AxiomOptions& opts = {});
std::vector<AxiomReport> check_all(const AxiomSet& axioms, const Ranking& r, const AxiomOptions& opts = {});

}  // namespace pareto
