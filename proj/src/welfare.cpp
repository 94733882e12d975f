#include "pareto/welfare.hpp"

#include <algorithm>
#include <string_view>
#include <unordered_set>

#include "pareto/error.hpp"

namespace pareto {

std::string Welfare::to_string() const {
  if (is_absent()) return "∅";
  if (is_level()) return level_value().str();
  return outcome_id();
}

// ---------------------------------------------------------------------------

OutcomeDomain::OutcomeDomain(std::vector<std::string> outcomes, std::vector<StrictPair> strict_pairs)
    : outcomes_(std::move(outcomes)) {
  for (std::size_t i = 0; i < outcomes_.size(); ++i) {
    if (outcomes_[i].empty()) throw ArgumentError("outcome identifiers must be non-empty");
    for (std::size_t j = 0; j < i; ++j) {
      if (outcomes_[i] == outcomes_[j]) throw ArgumentError("duplicate outcome \"" + outcomes_[i] + "\"");
    }
  }
  const std::size_t k = outcomes_.size();
  better_.assign(k, std::vector<bool>(k, false));
  for (const auto& [a, b] : strict_pairs) {
    auto ia = index_of(a);
    auto ib = index_of(b);
    if (!ia || !ib) {
      throw ArgumentError("strict pair (" + a + ", " + b + ") mentions an unknown outcome");
    }
    if (*ia == *ib) throw ArgumentError("strict pair (" + a + ", " + a + ") is reflexive");
    better_[*ia][*ib] = true;
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (!better_[a][b]) continue;
      if (better_[b][a]) {
        throw ArgumentError("strict pairs contain both (" + outcomes_[a] + ", " + outcomes_[b] +
                            ") and its reverse");
      }
      for (std::size_t c = 0; c < k; ++c) {
        if (better_[b][c] && !better_[a][c]) {
          throw ArgumentError("strict pairs are not transitive: missing (" + outcomes_[a] + ", " +
                              outcomes_[c] + ")");
        }
      }
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (better_[a][b]) strict_pairs_.emplace_back(outcomes_[a], outcomes_[b]);
    }
  }
  std::sort(strict_pairs_.begin(), strict_pairs_.end());
}

OutcomeDomain OutcomeDomain::from_generators(std::vector<std::string> outcomes,
                                             const std::vector<StrictPair>& generators) {
  const std::size_t k = outcomes.size();
  auto find = [&](const std::string& id) -> std::size_t {
    auto it = std::find(outcomes.begin(), outcomes.end(), id);
    if (it == outcomes.end()) throw ArgumentError("generator mentions unknown outcome \"" + id + "\"");
    return static_cast<std::size_t>(it - outcomes.begin());
  };
  std::vector<std::vector<bool>> reach(k, std::vector<bool>(k, false));
  for (const auto& [a, b] : generators) reach[find(a)][find(b)] = true;
  for (std::size_t m = 0; m < k; ++m) {
    for (std::size_t a = 0; a < k; ++a) {
      if (!reach[a][m]) continue;
      for (std::size_t b = 0; b < k; ++b) {
        if (reach[m][b]) reach[a][b] = true;
      }
    }
  }
  std::vector<StrictPair> pairs;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (reach[a][b]) pairs.emplace_back(outcomes[a], outcomes[b]);
    }
  }
  return OutcomeDomain(std::move(outcomes), std::move(pairs));
}

std::optional<std::size_t> OutcomeDomain::index_of(const std::string& id) const {
  auto it = std::find(outcomes_.begin(), outcomes_.end(), id);
  if (it == outcomes_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - outcomes_.begin());
}

std::size_t OutcomeDomain::require(const std::string& id) const {
  auto i = index_of(id);
  if (!i) throw DomainError("outcome \"" + id + "\" is not in the domain");
  return *i;
}

bool OutcomeDomain::strictly_better(const std::string& a, const std::string& b) const {
  return better_[require(a)][require(b)];
}

// ---------------------------------------------------------------------------

Profile::Profile(std::string name, std::vector<Welfare> entries)
    : name_(std::move(name)), entries_(std::move(entries)) {
  if (name_.empty()) throw ArgumentError("profile names must be non-empty");
  if (std::all_of(entries_.begin(), entries_.end(), [](const Welfare& w) { return w.is_absent(); })) {
    throw ArgumentError("profile \"" + name_ + "\" describes an empty society");
  }
}

Profile make_level_profile(std::string name, const std::vector<std::optional<Rational>>& levels) {
  std::vector<Welfare> entries;
  entries.reserve(levels.size());
  for (const auto& l : levels) entries.push_back(l ? Welfare::level(*l) : Welfare::absent());
  return Profile(std::move(name), std::move(entries));
}

ProfileSet::ProfileSet(std::vector<std::string> individuals, std::optional<OutcomeDomain> domain,
                       std::vector<Profile> profiles)
    : individuals_(std::move(individuals)), domain_(std::move(domain)), profiles_(std::move(profiles)) {
  if (individuals_.size() < 2) throw ArgumentError("the potential population needs at least 2 individuals");
  std::unordered_set<std::string_view> labels;
  for (const std::string& label : individuals_) {
    if (!labels.insert(label).second) throw ArgumentError("duplicate individual label \"" + label + "\"");
  }
  for (std::size_t p = 0; p < profiles_.size(); ++p) {
    const Profile& prof = profiles_[p];
    for (std::size_t q = 0; q < p; ++q) {
      if (profiles_[q].name() == prof.name()) {
        throw ArgumentError("duplicate profile name \"" + prof.name() + "\"");
      }
    }
    if (prof.size() != individuals_.size()) {
      throw ArgumentError("profile \"" + prof.name() + "\" has " + std::to_string(prof.size()) +
                          " entries, expected " + std::to_string(individuals_.size()));
    }
    for (const Welfare& w : prof.entries()) {
      if (!w.is_outcome()) continue;
      if (!domain_) throw ArgumentError("profile \"" + prof.name() + "\" has outcome entries but no domain");
      if (!domain_->contains(w.outcome_id())) {
        throw DomainError("profile \"" + prof.name() + "\": outcome \"" + w.outcome_id() +
                          "\" is not in the domain");
      }
    }
  }
}

std::optional<std::size_t> ProfileSet::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < profiles_.size(); ++i) {
    if (profiles_[i].name() == name) return i;
  }
  return std::nullopt;
}

bool ProfileSet::level_only() const {
  for (const Profile& p : profiles_) {
    for (const Welfare& w : p.entries()) {
      if (w.is_outcome()) return false;
    }
  }
  return true;
}

std::vector<std::string> numbered_individuals(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

// ---------------------------------------------------------------------------

IndividualComparison mirror(IndividualComparison c) {
  switch (c) {
    case IndividualComparison::Better: return IndividualComparison::Worse;
    case IndividualComparison::Worse: return IndividualComparison::Better;
    default: return c;
  }
}

const char* to_string(IndividualComparison c) {
  switch (c) {
    case IndividualComparison::Better: return "better";
    case IndividualComparison::Worse: return "worse";
    case IndividualComparison::Equal: return "equal";
    case IndividualComparison::Noncomparable: return "noncomparable";
  }
  return "?";
}

IndividualComparison compare_individual(const Welfare& a, const Welfare& b, const OutcomeDomain* domain) {
  if ((a.is_outcome() || b.is_outcome()) && domain == nullptr) {
    throw ArgumentError("comparing outcomes requires an outcome domain");
  }
  if (a.is_outcome() && !domain->contains(a.outcome_id())) {
    throw DomainError("outcome \"" + a.outcome_id() + "\" is not in the domain");
  }
  if (b.is_outcome() && !domain->contains(b.outcome_id())) {
    throw DomainError("outcome \"" + b.outcome_id() + "\" is not in the domain");
  }
  if (a.is_absent() || b.is_absent()) return IndividualComparison::Noncomparable;
  if (a.is_level() && b.is_level()) {
    auto c = a.level_value() <=> b.level_value();
    if (c > 0) return IndividualComparison::Better;
    if (c < 0) return IndividualComparison::Worse;
    return IndividualComparison::Equal;
  }
  if (a.is_outcome() && b.is_outcome()) {
    if (a.outcome_id() == b.outcome_id()) return IndividualComparison::Equal;
    if (domain->strictly_better(a.outcome_id(), b.outcome_id())) return IndividualComparison::Better;
    if (domain->strictly_better(b.outcome_id(), a.outcome_id())) return IndividualComparison::Worse;
    return IndividualComparison::Noncomparable;
  }
  // A level against an outcome: different domains, never ranked.
  return IndividualComparison::Noncomparable;
}

// ---------------------------------------------------------------------------

const char* to_string(SignatureToken t) {
  switch (t) {
    case SignatureToken::LT: return "LT";
    case SignatureToken::EQ: return "EQ";
    case SignatureToken::GT: return "GT";
    case SignatureToken::LeftAbsent: return "LeftAbsent";
    case SignatureToken::RightAbsent: return "RightAbsent";
    case SignatureToken::BothAbsent: return "BothAbsent";
  }
  return "?";
}

PairSignature pair_signature(const Profile& u, const Profile& v) {
  if (u.size() != v.size()) throw ArgumentError("profiles range over different populations");
  PairSignature sig;
  sig.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Welfare& a = u[i];
    const Welfare& b = v[i];
    if (a.is_outcome() || b.is_outcome()) {
      throw UnsupportedDomainError("pair signatures are defined for utility levels only");
    }
    if (a.is_absent() && b.is_absent()) {
      sig.push_back(SignatureToken::BothAbsent);
    } else if (a.is_absent()) {
      sig.push_back(SignatureToken::LeftAbsent);
    } else if (b.is_absent()) {
      sig.push_back(SignatureToken::RightAbsent);
    } else {
      auto c = a.level_value() <=> b.level_value();
      sig.push_back(c < 0 ? SignatureToken::LT : c > 0 ? SignatureToken::GT : SignatureToken::EQ);
    }
  }
  return sig;
}

PairSignature reversed(const PairSignature& s) {
  PairSignature out;
  out.reserve(s.size());
  for (SignatureToken t : s) {
    switch (t) {
      case SignatureToken::LT: out.push_back(SignatureToken::GT); break;
      case SignatureToken::GT: out.push_back(SignatureToken::LT); break;
      case SignatureToken::LeftAbsent: out.push_back(SignatureToken::RightAbsent); break;
      case SignatureToken::RightAbsent: out.push_back(SignatureToken::LeftAbsent); break;
      default: out.push_back(t); break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

bool is_bijection(std::span<const std::size_t> perm, std::size_t n) {
  if (perm.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t x : perm) {
    if (x >= n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Permutation compose(std::span<const std::size_t> sigma, std::span<const std::size_t> pi) {
  if (!is_bijection(sigma, sigma.size()) || !is_bijection(pi, sigma.size())) {
    throw ArgumentError("compose needs two bijections on the same set");
  }
  Permutation out(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) out[i] = sigma[pi[i]];
  return out;
}

std::vector<Welfare> permute_entries(std::span<const Welfare> entries, std::span<const std::size_t> perm) {
  if (!is_bijection(perm, entries.size())) {
    throw ArgumentError("permutation is not a bijection on the population");
  }
  std::vector<Welfare> out(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) out[perm[i]] = entries[i];
  return out;
}

Profile permute_profile(const Profile& u, std::span<const std::size_t> perm) {
  auto entries = permute_entries(u.entries(), perm);
  std::string name = u.name() + "@pi(";
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (i) name += ",";
    name += std::to_string(perm[i] + 1);
  }
  name += ")";
  return Profile(std::move(name), std::move(entries));
}

}  // namespace pareto
