#include "pareto/axioms.hpp"

#include <algorithm>
#include <map>

#include "pareto/error.hpp"

namespace pareto {

RelValue mirror(RelValue r) {
  switch (r) {
    case RelValue::LeftStrict: return RelValue::RightStrict;
    case RelValue::RightStrict: return RelValue::LeftStrict;
    default: return r;
  }
}

const char* to_string(RelValue r) {
  switch (r) {
    case RelValue::LeftStrict: return "left_strict";
    case RelValue::RightStrict: return "right_strict";
    case RelValue::Indifferent: return "indifferent";
    case RelValue::Noncomparable: return "noncomparable";
  }
  return "?";
}

std::optional<RelValue> parse_rel(std::string_view name) {
  for (RelValue r : kAllRelValues) {
    if (name == to_string(r)) return r;
  }
  return std::nullopt;
}

const char* symbol(RelValue r) {
  switch (r) {
    case RelValue::LeftStrict: return "≻";
    case RelValue::RightStrict: return "≺";
    case RelValue::Indifferent: return "∼";
    case RelValue::Noncomparable: return "⋈";
  }
  return "?";
}

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::Acyclicity: return "acyclicity";
    case Axiom::IndifferenceTransitivity: return "indiff-trans";
    case Axiom::WeakPareto: return "weak-pareto";
    case Axiom::ExtendedPareto: return "extended-pareto";
    case Axiom::MinimalAlmostWeakPareto: return "mawp";
    case Axiom::MinimalAlmostParetoIndifference: return "mapi";
    case Axiom::WeakAnonymity: return "weak-anonymity";
    case Axiom::OrdinalNoncomparability: return "onc";
    case Axiom::Veto: return "veto";
  }
  return "?";
}

std::optional<Axiom> parse_axiom(std::string_view name) {
  for (Axiom a : kSetAxioms) {
    if (name == axiom_name(a)) return a;
  }
  if (name == axiom_name(Axiom::Veto)) return Axiom::Veto;
  return std::nullopt;
}

std::string valid_axiom_names() {
  std::string out;
  for (Axiom a : kSetAxioms) {
    if (!out.empty()) out += ", ";
    out += axiom_name(a);
  }
  return out;
}

// ---------------------------------------------------------------------------

AxiomSet::AxiomSet(std::initializer_list<Axiom> axioms) {
  for (Axiom a : axioms) insert(a);
}

AxiomSet AxiomSet::all() {
  AxiomSet s;
  for (Axiom a : kSetAxioms) s.insert(a);
  return s;
}

AxiomSet AxiomSet::parse(std::string_view comma_list) {
  AxiomSet s;
  std::size_t start = 0;
  while (start <= comma_list.size()) {
    auto end = comma_list.find(',', start);
    if (end == std::string_view::npos) end = comma_list.size();
    auto name = comma_list.substr(start, end - start);
    auto a = parse_axiom(name);
    if (!a || *a == Axiom::Veto) {
      throw ArgumentError("unknown axiom \"" + std::string(name) + "\"; valid names: " + valid_axiom_names());
    }
    s.insert(*a);
    start = end + 1;
  }
  return s;
}

void AxiomSet::insert(Axiom a) {
  if (a == Axiom::Veto) throw ArgumentError("veto is checked per individual, not as a set axiom");
  bits_ |= 1U << static_cast<unsigned>(a);
}

AxiomSet AxiomSet::with(Axiom a) const {
  AxiomSet s = *this;
  s.insert(a);
  return s;
}

AxiomSet AxiomSet::without(Axiom a) const {
  AxiomSet s = *this;
  s.erase(a);
  return s;
}

std::vector<Axiom> AxiomSet::members() const {
  std::vector<Axiom> out;
  for (Axiom a : kSetAxioms) {
    if (contains(a)) out.push_back(a);
  }
  return out;
}

std::string AxiomSet::str() const {
  std::string out;
  for (Axiom a : members()) {
    if (!out.empty()) out += ",";
    out += axiom_name(a);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::size_t pair_count(std::size_t m) { return m < 2 ? 0 : m * (m - 1) / 2; }

std::size_t pair_index(std::size_t a, std::size_t b, std::size_t m) {
  // Row a holds pairs (a, a+1..m-1); rows before it hold sum_{k<a} (m-1-k).
  return a * (2 * m - a - 1) / 2 + (b - a - 1);
}

Ranking::Ranking(std::shared_ptr<const ProfileSet> base, RelValue fill) : base_(std::move(base)) {
  if (!base_) throw ArgumentError("ranking needs a profile set");
  assignment_.assign(pareto::pair_count(base_->size()), fill);
}

RelValue Ranking::relation(std::size_t a, std::size_t b) const {
  const std::size_t m = size();
  if (a >= m || b >= m) throw ArgumentError("profile index out of range");
  if (a == b) return RelValue::Indifferent;
  if (a < b) return assignment_[pair_index(a, b, m)];
  return mirror(assignment_[pair_index(b, a, m)]);
}

void Ranking::set(std::size_t a, std::size_t b, RelValue r) {
  const std::size_t m = size();
  if (a >= m || b >= m) throw ArgumentError("profile index out of range");
  if (a == b) throw ArgumentError("a profile is always indifferent to itself");
  if (a < b) {
    assignment_[pair_index(a, b, m)] = r;
  } else {
    assignment_[pair_index(b, a, m)] = mirror(r);
  }
}

std::size_t Ranking::require(const std::string& name) const {
  auto i = base_->index_of(name);
  if (!i) throw ArgumentError("no profile named \"" + name + "\"");
  return *i;
}

RelValue Ranking::relation(const std::string& a, const std::string& b) const {
  return relation(require(a), require(b));
}

void Ranking::set(const std::string& a, const std::string& b, RelValue r) { set(require(a), require(b), r); }

// ---------------------------------------------------------------------------

namespace {

using Cmp = IndividualComparison;

Cmp cmp(const ProfileSet& s, std::size_t u, std::size_t v, std::size_t i) {
  return compare_individual(s[u][i], s[v][i], s.domain_ptr());
}

// "v_j is at least u_j" fails, i.e. comparison of v_j to u_j is neither
// Better nor Equal. Under pivot_weak only Better is excluded.
bool pivot_ok(Cmp v_vs_u, const AxiomOptions& opts) {
  if (opts.pivot_weak) return v_vs_u != Cmp::Better;
  return v_vs_u != Cmp::Better && v_vs_u != Cmp::Equal;
}

}  // namespace

bool weak_pareto_antecedent(const ProfileSet& s, std::size_t u, std::size_t v) {
  for (std::size_t i = 0; i < s.population(); ++i) {
    if (cmp(s, u, v, i) != Cmp::Better) return false;
  }
  return true;
}

bool extended_pareto_antecedent(const ProfileSet& s, std::size_t u, std::size_t v) {
  for (std::size_t i = 0; i < s.population(); ++i) {
    Cmp c = cmp(s, v, u, i);
    if (c == Cmp::Better || c == Cmp::Equal) return false;
  }
  return true;
}

bool mawp_antecedent(const ProfileSet& s, std::size_t u, std::size_t v, std::size_t j, const AxiomOptions& opts) {
  if (j >= s.population()) return false;
  if (!pivot_ok(cmp(s, v, u, j), opts)) return false;
  for (std::size_t i = 0; i < s.population(); ++i) {
    if (i != j && cmp(s, u, v, i) != Cmp::Better) return false;
  }
  return true;
}

bool mapi_antecedent(const ProfileSet& s, std::size_t u, std::size_t v, std::size_t j) {
  if (j >= s.population()) return false;
  if (cmp(s, u, v, j) != Cmp::Noncomparable) return false;
  for (std::size_t i = 0; i < s.population(); ++i) {
    if (i != j && cmp(s, u, v, i) != Cmp::Equal) return false;
  }
  return true;
}

bool veto_antecedent(const ProfileSet& s, std::size_t u, std::size_t v, std::size_t j) {
  if (j >= s.population()) return false;
  const Welfare& a = s[u][j];
  const Welfare& b = s[v][j];
  if (a.is_absent() == b.is_absent()) return false;
  for (std::size_t i = 0; i < s.population(); ++i) {
    if (i != j && cmp(s, u, v, i) != Cmp::Better) return false;
  }
  return true;
}

bool is_pareto_family(Axiom a) {
  return a == Axiom::WeakPareto || a == Axiom::ExtendedPareto || a == Axiom::MinimalAlmostWeakPareto ||
         a == Axiom::MinimalAlmostParetoIndifference;
}

std::optional<AxiomInstance> forcing(Axiom a, const ProfileSet& s, std::size_t u, std::size_t v,
                                     const AxiomOptions& opts) {
  if (u == v) return std::nullopt;
  const std::size_t n = s.population();
  switch (a) {
    case Axiom::WeakPareto:
      if (weak_pareto_antecedent(s, u, v)) return AxiomInstance{a, u, v, RelValue::LeftStrict, std::nullopt};
      return std::nullopt;

    case Axiom::ExtendedPareto: {
      if (!extended_pareto_antecedent(s, u, v)) return std::nullopt;
      for (std::size_t i = 0; i < n; ++i) {
        if (cmp(s, u, v, i) == Cmp::Better) return AxiomInstance{a, u, v, RelValue::LeftStrict, std::nullopt};
      }
      // Nobody strictly better: every individual is noncomparable, so the
      // antecedent holds in both directions and u ≽ v ≽ u.
      return AxiomInstance{a, u, v, RelValue::Indifferent, std::nullopt};
    }

    case Axiom::MinimalAlmostWeakPareto: {
      std::optional<std::size_t> odd;
      std::size_t non_strict = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (cmp(s, u, v, i) != Cmp::Better) {
          ++non_strict;
          odd = i;
        }
      }
      if (non_strict > 1) return std::nullopt;
      std::size_t j = odd.value_or(0);
      if (!mawp_antecedent(s, u, v, j, opts)) return std::nullopt;
      return AxiomInstance{a, u, v, RelValue::LeftStrict, j};
    }

    case Axiom::MinimalAlmostParetoIndifference: {
      for (std::size_t j = 0; j < n; ++j) {
        if (mapi_antecedent(s, u, v, j)) return AxiomInstance{a, u, v, RelValue::Indifferent, j};
      }
      return std::nullopt;
    }

    default:
      return std::nullopt;
  }
}

std::vector<AxiomInstance> forced_instances(Axiom a, const ProfileSet& s, const AxiomOptions& opts) {
  std::vector<AxiomInstance> out;
  for (std::size_t u = 0; u < s.size(); ++u) {
    for (std::size_t v = 0; v < s.size(); ++v) {
      if (auto inst = forcing(a, s, u, v, opts)) out.push_back(*inst);
    }
  }
  return out;
}

AnonymityKey anonymity_key(const Profile& u, const Profile& v) {
  if (u.size() != v.size()) throw ArgumentError("profiles range over different populations");
  AnonymityKey key;
  key.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) key.emplace_back(u[i], v[i]);
  std::sort(key.begin(), key.end());
  return key;
}

std::optional<Permutation> matching_permutation(const Profile& u, const Profile& v, const Profile& x,
                                                const Profile& y) {
  const std::size_t n = u.size();
  if (v.size() != n || x.size() != n || y.size() != n) return std::nullopt;
  Permutation perm(n);
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (std::size_t k = 0; k < n; ++k) {
      if (!used[k] && x[k] == u[i] && y[k] == v[i]) {
        perm[i] = k;
        used[k] = true;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return perm;
}

bool is_reflexive_signature(const PairSignature& s) {
  return std::all_of(s.begin(), s.end(), [](SignatureToken t) {
    return t == SignatureToken::EQ || t == SignatureToken::BothAbsent;
  });
}

// ---------------------------------------------------------------------------

namespace {

class ReportBuilder {
 public:
  ReportBuilder(Axiom a, const AxiomOptions& opts) : opts_(opts) { report_.axiom = a; }

  void add(std::vector<std::string> profiles, std::string why) {
    ++report_.violation_count;
    if (report_.violations.size() < opts_.max_violations) {
      report_.violations.push_back({std::move(profiles), std::move(why)});
    }
  }

  AxiomReport finish() {
    report_.holds = report_.violation_count == 0;
    return std::move(report_);
  }

 private:
  const AxiomOptions& opts_;
  AxiomReport report_;
};

const std::string& name_of(const Ranking& r, std::size_t i) { return r.base()[i].name(); }

std::string describe(const Ranking& r, std::size_t u, std::size_t v, RelValue required) {
  return std::string("required ") + name_of(r, u) + " " + symbol(required) + " " + name_of(r, v) + ", found " +
         to_string(r.relation(u, v));
}

AxiomReport check_forcing_axiom(Axiom a, const Ranking& r, const AxiomOptions& opts) {
  ReportBuilder rb(a, opts);
  const ProfileSet& s = r.base();
  for (const AxiomInstance& inst : forced_instances(a, s, opts)) {
    if (r.relation(inst.left, inst.right) == inst.forced) continue;
    // Symmetric instances appear twice; report indifference once.
    if (inst.forced == RelValue::Indifferent && inst.left > inst.right &&
        forcing(a, s, inst.right, inst.left, opts)) {
      continue;
    }
    std::string why = describe(r, inst.left, inst.right, inst.forced);
    if (inst.pivot) why += " (pivot " + s.individuals()[*inst.pivot] + ")";
    rb.add({name_of(r, inst.left), name_of(r, inst.right)}, std::move(why));
  }
  return rb.finish();
}

// Ordered pairs grouped by `key`; every member of a group must carry the same
// oriented relation, and groups matching the reflexive key must be Indifferent.
template <class Key, class KeyFn, class ReflexiveFn>
AxiomReport check_grouped(Axiom a, const Ranking& r, const AxiomOptions& opts, KeyFn key_of,
                          ReflexiveFn reflexive) {
  ReportBuilder rb(a, opts);
  const ProfileSet& s = r.base();
  std::map<Key, std::vector<std::pair<std::size_t, std::size_t>>> groups;
  for (std::size_t u = 0; u < s.size(); ++u) {
    for (std::size_t v = 0; v < s.size(); ++v) {
      if (u != v) groups[key_of(s[u], s[v])].emplace_back(u, v);
    }
  }
  for (const auto& [key, members] : groups) {
    if (reflexive(key)) {
      for (auto [u, v] : members) {
        if (u < v && r.relation(u, v) != RelValue::Indifferent) {
          rb.add({name_of(r, u), name_of(r, v)},
                 "identical standing for everyone requires indifference, found " +
                     std::string(to_string(r.relation(u, v))));
        }
      }
      continue;
    }
    for (std::size_t p = 0; p < members.size(); ++p) {
      for (std::size_t q = p + 1; q < members.size(); ++q) {
        auto [u1, v1] = members[p];
        auto [u2, v2] = members[q];
        // Each mismatch shows up again with both pairs reversed; keep the
        // lexicographically smaller copy.
        auto lo = std::min(members[p], members[q]);
        auto rev_lo = std::min(std::pair{v1, u1}, std::pair{v2, u2});
        if (rev_lo < lo) continue;
        RelValue r1 = r.relation(u1, v1);
        RelValue r2 = r.relation(u2, v2);
        if (r1 == r2) continue;
        rb.add({name_of(r, u1), name_of(r, v1), name_of(r, u2), name_of(r, v2)},
               std::string(to_string(r1)) + " vs " + to_string(r2));
      }
    }
  }
  return rb.finish();
}

}  // namespace

AxiomReport check_acyclicity(const Ranking& r, const AxiomOptions& opts) {
  ReportBuilder rb(Axiom::Acyclicity, opts);
  const std::size_t m = r.size();
  enum Color : unsigned char { White, Grey, Black };
  std::vector<Color> color(m, White);
  std::vector<std::size_t> stack;
  std::vector<std::size_t> cycle;

  // Iterative DFS keeping the grey path on `stack`.
  for (std::size_t root = 0; root < m && cycle.empty(); ++root) {
    if (color[root] != White) continue;
    std::vector<std::size_t> next_child{0};
    stack = {root};
    color[root] = Grey;
    while (!stack.empty() && cycle.empty()) {
      std::size_t node = stack.back();
      std::size_t& child = next_child.back();
      bool descended = false;
      for (; child < m; ++child) {
        if (child == node || r.relation(node, child) != RelValue::LeftStrict) continue;
        if (color[child] == Grey) {
          auto it = std::find(stack.begin(), stack.end(), child);
          cycle.assign(it, stack.end());
          break;
        }
        if (color[child] == White) {
          color[child] = Grey;
          std::size_t c = child++;
          stack.push_back(c);
          next_child.push_back(0);
          descended = true;
          break;
        }
      }
      if (!cycle.empty() || descended) continue;
      color[node] = Black;
      stack.pop_back();
      next_child.pop_back();
    }
  }
  if (!cycle.empty()) {
    std::vector<std::string> names;
    std::string why;
    for (std::size_t c : cycle) {
      names.push_back(name_of(r, c));
      why += name_of(r, c) + " ≻ ";
    }
    why += name_of(r, cycle.front());
    rb.add(std::move(names), "strict cycle " + why);
  }
  return rb.finish();
}

AxiomReport check_indifference_transitivity(const Ranking& r, const AxiomOptions& opts) {
  ReportBuilder rb(Axiom::IndifferenceTransitivity, opts);
  const std::size_t m = r.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t c = a + 1; c < m; ++c) {
      if (r.relation(a, c) == RelValue::Indifferent) continue;
      for (std::size_t b = 0; b < m; ++b) {
        if (b == a || b == c) continue;
        if (r.relation(a, b) == RelValue::Indifferent && r.relation(b, c) == RelValue::Indifferent) {
          rb.add({name_of(r, a), name_of(r, b), name_of(r, c)},
                 name_of(r, a) + " ∼ " + name_of(r, b) + " ∼ " + name_of(r, c) + " but " + name_of(r, a) + " " +
                     symbol(r.relation(a, c)) + " " + name_of(r, c));
        }
      }
    }
  }
  return rb.finish();
}

AxiomReport check_weak_pareto(const Ranking& r, const AxiomOptions& opts) {
  return check_forcing_axiom(Axiom::WeakPareto, r, opts);
}

AxiomReport check_extended_pareto(const Ranking& r, const AxiomOptions& opts) {
  return check_forcing_axiom(Axiom::ExtendedPareto, r, opts);
}

AxiomReport check_minimal_almost_weak_pareto(const Ranking& r, const AxiomOptions& opts) {
  return check_forcing_axiom(Axiom::MinimalAlmostWeakPareto, r, opts);
}

AxiomReport check_minimal_almost_pareto_indifference(const Ranking& r, const AxiomOptions& opts) {
  return check_forcing_axiom(Axiom::MinimalAlmostParetoIndifference, r, opts);
}

AxiomReport check_weak_anonymity(const Ranking& r, const AxiomOptions& opts) {
  return check_grouped<AnonymityKey>(
      Axiom::WeakAnonymity, r, opts, [](const Profile& u, const Profile& v) { return anonymity_key(u, v); },
      [](const AnonymityKey& key) {
        return std::all_of(key.begin(), key.end(), [](const auto& col) { return col.first == col.second; });
      });
}

AxiomReport check_ordinal_noncomparability(const Ranking& r, const AxiomOptions& opts) {
  if (!r.base().level_only()) {
    throw UnsupportedDomainError("ordinal noncomparability is defined for utility levels only");
  }
  return check_grouped<PairSignature>(
      Axiom::OrdinalNoncomparability, r, opts,
      [](const Profile& u, const Profile& v) { return pair_signature(u, v); }, is_reflexive_signature);
}

AxiomReport check_veto(const Ranking& r, std::size_t j, const AxiomOptions& opts) {
  const ProfileSet& s = r.base();
  if (j >= s.population()) throw ArgumentError("individual index out of range");
  ReportBuilder rb(Axiom::Veto, opts);
  for (std::size_t u = 0; u < s.size(); ++u) {
    for (std::size_t v = 0; v < s.size(); ++v) {
      if (u == v || !veto_antecedent(s, u, v, j)) continue;
      if (r.relation(u, v) == RelValue::LeftStrict) {
        rb.add({name_of(r, u), name_of(r, v)},
               name_of(r, u) + " ≻ " + name_of(r, v) + " overrides individual " + s.individuals()[j]);
      }
    }
  }
  return rb.finish();
}

AxiomReport check(Axiom a, const Ranking& r, const AxiomOptions& opts) {
  switch (a) {
    case Axiom::Acyclicity: return check_acyclicity(r, opts);
    case Axiom::IndifferenceTransitivity: return check_indifference_transitivity(r, opts);
    case Axiom::WeakPareto: return check_weak_pareto(r, opts);
    case Axiom::ExtendedPareto: return check_extended_pareto(r, opts);
    case Axiom::MinimalAlmostWeakPareto: return check_minimal_almost_weak_pareto(r, opts);
    case Axiom::MinimalAlmostParetoIndifference: return check_minimal_almost_pareto_indifference(r, opts);
    case Axiom::WeakAnonymity: return check_weak_anonymity(r, opts);
    case Axiom::OrdinalNoncomparability: return check_ordinal_noncomparability(r, opts);
    case Axiom::Veto: break;
  }
  throw ArgumentError("veto needs an individual; use check_veto");
}

std::vector<AxiomReport> check_all(const AxiomSet& axioms, const Ranking& r, const AxiomOptions& opts) {
  std::vector<AxiomReport> out;
  for (Axiom a : axioms.members()) out.push_back(check(a, r, opts));
  return out;
}

}  // namespace pareto
