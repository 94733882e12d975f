#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pareto/rational.hpp"

namespace pareto {

// An individual's standing in a profile: a utility level, an outcome from a
// partially ordered domain, or non-existence.
class Welfare {
 public:
  Welfare() = default;  // Absent

  static Welfare absent() { return Welfare(); }
  static Welfare level(Rational value) { return Welfare(Storage(std::in_place_index<1>, std::move(value))); }
  static Welfare outcome(std::string id) { return Welfare(Storage(std::in_place_index<2>, std::move(id))); }

  bool is_absent() const { return value_.index() == 0; }
  bool is_level() const { return value_.index() == 1; }
  bool is_outcome() const { return value_.index() == 2; }

  const Rational& level_value() const { return std::get<1>(value_); }
  const std::string& outcome_id() const { return std::get<2>(value_); }

  // "∅" for Absent.
  std::string to_string() const;

  friend bool operator==(const Welfare&, const Welfare&) = default;
  // Structural order used for keys and sorting. Not a welfare comparison.
  friend bool operator<(const Welfare& a, const Welfare& b) { return a.value_ < b.value_; }

 private:
  struct None {
    friend bool operator==(None, None) { return true; }
    friend bool operator<(None, None) { return false; }
  };
  using Storage = std::variant<None, Rational, std::string>;
  explicit Welfare(Storage s) : value_(std::move(s)) {}
  Storage value_;
};

// Finite set of outcomes with a strict partial order. Identical ids are the
// only indifference.
class OutcomeDomain {
 public:
  using StrictPair = std::pair<std::string, std::string>;

  // Throws ArgumentError unless strict_pairs is irreflexive, transitive and
  // mentions only listed outcomes.
  OutcomeDomain(std::vector<std::string> outcomes, std::vector<StrictPair> strict_pairs);

  // Builds the transitive closure of `generators` first.
  static OutcomeDomain from_generators(std::vector<std::string> outcomes,
                                       const std::vector<StrictPair>& generators);

  bool contains(const std::string& id) const { return index_of(id).has_value(); }
  // Throws DomainError for unknown ids.
  bool strictly_better(const std::string& a, const std::string& b) const;

  const std::vector<std::string>& outcomes() const { return outcomes_; }
  // Sorted, deduplicated.
  const std::vector<StrictPair>& strict_pairs() const { return strict_pairs_; }

  friend bool operator==(const OutcomeDomain& a, const OutcomeDomain& b) {
    return a.outcomes_ == b.outcomes_ && a.strict_pairs_ == b.strict_pairs_;
  }

 private:
  std::optional<std::size_t> index_of(const std::string& id) const;
  std::size_t require(const std::string& id) const;

  std::vector<std::string> outcomes_;
  std::vector<StrictPair> strict_pairs_;
  std::vector<std::vector<bool>> better_;
};

class Profile {
 public:
  // Throws ArgumentError for an empty name or when every entry is Absent.
  Profile(std::string name, std::vector<Welfare> entries);

  const std::string& name() const { return name_; }
  const std::vector<Welfare>& entries() const { return entries_; }
  const Welfare& operator[](std::size_t i) const { return entries_[i]; }
  std::size_t size() const { return entries_.size(); }

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  std::string name_;
  std::vector<Welfare> entries_;
};

// Convenience for levels: nullopt is Absent.
Profile make_level_profile(std::string name, const std::vector<std::optional<Rational>>& levels);

// Profiles over one fixed potential population N.
class ProfileSet {
 public:
  // Throws ArgumentError on a malformed shape or on outcomes without a domain,
  // DomainError for unknown outcomes.
  ProfileSet(std::vector<std::string> individuals, std::optional<OutcomeDomain> domain,
             std::vector<Profile> profiles);

  std::size_t population() const { return individuals_.size(); }
  std::size_t size() const { return profiles_.size(); }
  const std::vector<std::string>& individuals() const { return individuals_; }
  const std::optional<OutcomeDomain>& domain() const { return domain_; }
  const OutcomeDomain* domain_ptr() const { return domain_ ? &*domain_ : nullptr; }
  const std::vector<Profile>& profiles() const { return profiles_; }
  const Profile& operator[](std::size_t i) const { return profiles_[i]; }

  std::optional<std::size_t> index_of(const std::string& name) const;
  // Every entry is Level or Absent.
  bool level_only() const;

  friend bool operator==(const ProfileSet&, const ProfileSet&) = default;

 private:
  std::vector<std::string> individuals_;
  std::optional<OutcomeDomain> domain_;
  std::vector<Profile> profiles_;
};

// Individuals labelled "1".."n".
std::vector<std::string> numbered_individuals(std::size_t n);

enum class IndividualComparison { Better, Worse, Equal, Noncomparable };

IndividualComparison mirror(IndividualComparison c);
const char* to_string(IndividualComparison c);

// How individual a's standing compares with b's. Anything involving Absent is
// Noncomparable, including (Absent, Absent). Throws ArgumentError when an
// outcome is compared without a domain, DomainError for unknown ids.
IndividualComparison compare_individual(const Welfare& a, const Welfare& b,
                                        const OutcomeDomain* domain = nullptr);

enum class SignatureToken : unsigned char { LT, EQ, GT, LeftAbsent, RightAbsent, BothAbsent };

using PairSignature = std::vector<SignatureToken>;

const char* to_string(SignatureToken t);

// Ordinal information of a pair of Level profiles, per individual. Throws
// UnsupportedDomainError on outcome entries, ArgumentError on size mismatch.
PairSignature pair_signature(const Profile& u, const Profile& v);
// The signature of the swapped pair.
PairSignature reversed(const PairSignature& s);

// 0-based bijection: individual i goes to perm[i].
using Permutation = std::vector<std::size_t>;

bool is_bijection(std::span<const std::size_t> perm, std::size_t n);
// (sigma ∘ pi)(i) = sigma(pi(i)).
Permutation compose(std::span<const std::size_t> sigma, std::span<const std::size_t> pi);
// Entry of individual perm[i] in the result is entry i of `u`. The name gets
// a "@pi(...)" suffix with 1-based images. Throws ArgumentError.
Profile permute_profile(const Profile& u, std::span<const std::size_t> perm);
std::vector<Welfare> permute_entries(std::span<const Welfare> entries, std::span<const std::size_t> perm);

}  // namespace pareto
