#include "pareto/orderings.hpp"

#include <algorithm>

#include "pareto/error.hpp"

namespace pareto {

std::string Ordering::name() const {
  switch (kind) {
    case Kind::CriticalLevel: return "clu(" + c.str() + ")";
    case Kind::Total: return "total";
    case Kind::Average: return "average";
  }
  return "?";
}

Rational clu_value(const Profile& p, const Rational& c) {
  Rational sum(0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_absent()) continue;
    if (!p[i].is_level()) throw UnsupportedDomainError("utilitarian orderings need utility levels, got an outcome in " + p.name());
    sum = sum + (p[i].level_value() - c);
  }
  return sum;
}

Rational average_value(const Profile& p) {
  std::int64_t alive = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p[i].is_absent()) ++alive;
  }
  return clu_value(p, Rational(0)) / Rational(alive);
}

Rational ordering_value(const Profile& p, const Ordering& o) {
  switch (o.kind) {
    case Ordering::Kind::CriticalLevel: return clu_value(p, o.c);
    case Ordering::Kind::Total: return clu_value(p, Rational(0));
    case Ordering::Kind::Average: return average_value(p);
  }
  return Rational(0);
}

Ranking rank_profiles(const std::shared_ptr<const ProfileSet>& s, const Ordering& o) {
  std::vector<Rational> values;
  for (const Profile& p : s->profiles()) values.push_back(ordering_value(p, o));
  Ranking r(s);
  for (std::size_t a = 0; a < s->size(); ++a) {
    for (std::size_t b = a + 1; b < s->size(); ++b) {
      RelValue rel = RelValue::Indifferent;
      if (values[a] > values[b]) rel = RelValue::LeftStrict;
      if (values[a] < values[b]) rel = RelValue::RightStrict;
      r.set(a, b, rel);
    }
  }
  return r;
}

bool AuditResult::all_hold() const {
  return std::all_of(reports.begin(), reports.end(), [](const AxiomReport& r) { return r.holds; });
}

const AxiomReport* AuditResult::report(Axiom a) const {
  for (const AxiomReport& r : reports) {
    if (r.axiom == a) return &r;
  }
  return nullptr;
}

AuditResult audit(const std::shared_ptr<const ProfileSet>& s, const Ordering& o, const AxiomSet& axioms,
                  const AxiomOptions& opts) {
  AuditResult result{o, rank_profiles(s, o), {}};
  for (Axiom a : axioms.members()) result.reports.push_back(check(a, result.ranking, opts));
  return result;
}

}  // namespace pareto
