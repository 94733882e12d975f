#pragma once

#include <string>
#include <vector>

#include "pareto/axioms.hpp"
#include "pareto/rational.hpp"
#include "pareto/welfare.hpp"

namespace pareto {

// Linear critical-level utilitarianism, total utilitarianism (critical level
// zero) and average utilitarianism over existing individuals.
struct Ordering {
  enum class Kind { CriticalLevel, Total, Average };

  Kind kind = Kind::Total;
  Rational c;

  static Ordering clu(Rational c) { return {Kind::CriticalLevel, std::move(c)}; }
  static Ordering total() { return {Kind::Total, Rational(0)}; }
  static Ordering average() { return {Kind::Average, Rational(0)}; }

  std::string name() const;
};

// Sum over existing individuals of (level - c). Throws UnsupportedDomainError
// on outcome entries.
Rational clu_value(const Profile& p, const Rational& c);
// Mean level of the existing individuals.
Rational average_value(const Profile& p);
Rational ordering_value(const Profile& p, const Ordering& o);

// Complete ranking by value; equal values are indifferent.
Ranking rank_profiles(const std::shared_ptr<const ProfileSet>& s, const Ordering& o);

struct AuditResult {
  Ordering ordering;
  Ranking ranking;
  std::vector<AxiomReport> reports;

  bool all_hold() const;
  const AxiomReport* report(Axiom a) const;
};

AuditResult audit(const std::shared_ptr<const ProfileSet>& s, const Ordering& o, const AxiomSet& axioms,
                  const AxiomOptions& opts = {});

}  // namespace pareto
