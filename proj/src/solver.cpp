#include "pareto/solver.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <limits>
#include <map>
#include <stdexcept>

#include "pareto/error.hpp"
#include "pareto/witnesses.hpp"

namespace pareto {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::WeakPareto: return "weak-pareto";
    case Rule::ExtendedPareto: return "extended-pareto";
    case Rule::MinimalAlmostWeakPareto: return "mawp";
    case Rule::MinimalAlmostParetoIndifference: return "mapi";
    case Rule::WeakAnonymity: return "weak-anonymity";
    case Rule::OrdinalNoncomparability: return "onc";
    case Rule::IndifferenceTransitivity: return "indiff-trans";
    case Rule::Requirement: return "requirement";
    case Rule::Decision: return "decision";
  }
  return "?";
}

std::optional<Rule> parse_rule(std::string_view name) {
  for (Rule r : {Rule::WeakPareto, Rule::ExtendedPareto, Rule::MinimalAlmostWeakPareto,
                 Rule::MinimalAlmostParetoIndifference, Rule::WeakAnonymity, Rule::OrdinalNoncomparability,
                 Rule::IndifferenceTransitivity, Rule::Requirement, Rule::Decision}) {
    if (name == rule_name(r)) return r;
  }
  return std::nullopt;
}

const char* to_string(Verdict v) { return v == Verdict::Sat ? "sat" : "unsat"; }

const char* to_string(ConflictKind k) {
  switch (k) {
    case ConflictKind::None: return "none";
    case ConflictKind::StrictCycle: return "strict_cycle";
    case ConflictKind::IndifferenceChain: return "indifference_chain";
    case ConflictKind::PairClash: return "pair_clash";
    case ConflictKind::Exhaustion: return "exhaustion";
  }
  return "?";
}

std::optional<RelValue> PropagationResult::relation(std::size_t a, std::size_t b) const {
  if (a == b) return RelValue::Indifferent;
  if (a < b) return assignment[pair_index(a, b, profile_count)];
  auto r = assignment[pair_index(b, a, profile_count)];
  if (!r) return std::nullopt;
  return mirror(*r);
}

std::size_t PropagationResult::forced_count() const {
  return static_cast<std::size_t>(
      std::count_if(assignment.begin(), assignment.end(), [](const auto& r) { return r.has_value(); }));
}

namespace {

Rule rule_of(Axiom a) {
  switch (a) {
    case Axiom::WeakPareto: return Rule::WeakPareto;
    case Axiom::ExtendedPareto: return Rule::ExtendedPareto;
    case Axiom::MinimalAlmostWeakPareto: return Rule::MinimalAlmostWeakPareto;
    case Axiom::MinimalAlmostParetoIndifference: return Rule::MinimalAlmostParetoIndifference;
    case Axiom::WeakAnonymity: return Rule::WeakAnonymity;
    case Axiom::OrdinalNoncomparability: return Rule::OrdinalNoncomparability;
    case Axiom::IndifferenceTransitivity: return Rule::IndifferenceTransitivity;
    default: throw std::logic_error("axiom has no forcing rule");
  }
}

std::optional<Axiom> axiom_of(Rule r) {
  switch (r) {
    case Rule::WeakPareto: return Axiom::WeakPareto;
    case Rule::ExtendedPareto: return Axiom::ExtendedPareto;
    case Rule::MinimalAlmostWeakPareto: return Axiom::MinimalAlmostWeakPareto;
    case Rule::MinimalAlmostParetoIndifference: return Axiom::MinimalAlmostParetoIndifference;
    case Rule::WeakAnonymity: return Axiom::WeakAnonymity;
    case Rule::OrdinalNoncomparability: return Axiom::OrdinalNoncomparability;
    case Rule::IndifferenceTransitivity: return Axiom::IndifferenceTransitivity;
    default: return std::nullopt;
  }
}

constexpr int kUnset = -1;
constexpr RelValue kValueOrder[] = {RelValue::Noncomparable, RelValue::Indifferent, RelValue::LeftStrict,
                                    RelValue::RightStrict};

struct Clash {
  std::size_t pair;
  std::size_t existing;
  std::size_t incoming;
};

// Propagation state with a trail for backtracking. Relations are stored per
// unordered pair, oriented from the lower to the higher profile index.
class Engine {
 public:
  explicit Engine(const Query& q)
      : q_(q), s_(*q.profiles), m_(s_.size()),
        use_acyclicity_(q.axioms.contains(Axiom::Acyclicity)),
        use_transitivity_(q.axioms.contains(Axiom::IndifferenceTransitivity)) {
    for (std::size_t a = 0; a < m_; ++a) {
      for (std::size_t b = a + 1; b < m_; ++b) ends_.emplace_back(a, b);
    }
    val_.assign(ends_.size(), kUnset);
    reason_.assign(ends_.size(), 0);
    groups_of_.assign(m_ * m_, {});
    for (const Requirement& r : q.extra) {
      if (r.left >= m_ || r.right >= m_ || r.left == r.right) {
        throw ArgumentError("requirement must name two different profiles of the set");
      }
    }
    if (q.axioms.contains(Axiom::WeakAnonymity)) {
      build_groups<AnonymityKey>(
          Rule::WeakAnonymity, [](const Profile& u, const Profile& v) { return anonymity_key(u, v); },
          [](const AnonymityKey& k) {
            return std::all_of(k.begin(), k.end(), [](const auto& c) { return c.first == c.second; });
          });
    }
    if (q.axioms.contains(Axiom::OrdinalNoncomparability)) {
      if (!s_.level_only()) {
        throw UnsupportedDomainError("ordinal noncomparability is defined for utility levels only");
      }
      build_groups<PairSignature>(
          Rule::OrdinalNoncomparability, [](const Profile& u, const Profile& v) { return pair_signature(u, v); },
          is_reflexive_signature);
    }
  }

  std::size_t pairs() const { return ends_.size(); }

  std::optional<RelValue> rel(std::size_t a, std::size_t b) const {
    if (a == b) return RelValue::Indifferent;
    if (a < b) {
      int v = val_[pair_index(a, b, m_)];
      if (v == kUnset) return std::nullopt;
      return static_cast<RelValue>(v);
    }
    int v = val_[pair_index(b, a, m_)];
    if (v == kUnset) return std::nullopt;
    return mirror(static_cast<RelValue>(v));
  }

  bool strict(std::size_t a, std::size_t b) const { return a != b && rel(a, b) == RelValue::LeftStrict; }

  std::size_t reason(std::size_t a, std::size_t b) const {
    return reason_[a < b ? pair_index(a, b, m_) : pair_index(b, a, m_)];
  }

  // Unary facts at the root, then closure. Conflicts are collected, not fatal.
  void root() {
    for (const Requirement& r : q_.extra) {
      assign(r.left, r.right, r.rel, Step{Rule::Requirement, r.left, r.right, r.rel, std::nullopt, {}, {}}, true);
    }
    for (Axiom a : q_.axioms.members()) {
      if (!is_pareto_family(a)) continue;
      for (const AxiomInstance& inst : forced_instances(a, s_, q_.options)) {
        assign(inst.left, inst.right, inst.forced,
               Step{rule_of(a), inst.left, inst.right, inst.forced, inst.pivot, {}, {}}, true);
      }
    }
    for (const auto& [pair, rule] : reflexive_units_) {
      auto [a, b] = pair;
      assign(a, b, RelValue::Indifferent, Step{rule, a, b, RelValue::Indifferent, std::nullopt, {}, {}}, true);
    }
    run(true);
  }

  bool root_conflict() const {
    return !clashes_.empty() || (use_acyclicity_ && find_strict_cycle().has_value());
  }

  std::size_t open_pairs() const {
    return static_cast<std::size_t>(std::count(val_.begin(), val_.end(), kUnset));
  }

  PropagationResult snapshot() const {
    PropagationResult r;
    r.profile_count = m_;
    for (int v : val_) {
      r.assignment.push_back(v == kUnset ? std::nullopt : std::optional<RelValue>(static_cast<RelValue>(v)));
    }
    return r;
  }

  // Picks the preferred conflict and packages it with its support.
  void explain_root_conflict(ConflictKind& kind, std::vector<Step>& derivation,
                             std::vector<CycleEdge>& edges) const {
    kind = ConflictKind::None;
    edges.clear();
    if (use_acyclicity_) {
      if (auto cycle = find_strict_cycle()) {
        kind = ConflictKind::StrictCycle;
        for (std::size_t k = 0; k < cycle->size(); ++k) {
          std::size_t from = (*cycle)[k];
          std::size_t to = (*cycle)[(k + 1) % cycle->size()];
          edges.push_back({reason(from, to), from, to, RelValue::LeftStrict});
        }
      }
    }
    if (kind == ConflictKind::None && use_transitivity_) {
      auto chain = find_indifference_chain(true);
      if (!chain) chain = find_indifference_chain(false);
      if (chain) {
        kind = ConflictKind::IndifferenceChain;
        edges = std::move(*chain);
      }
    }
    if (kind == ConflictKind::None && !clashes_.empty()) {
      const Clash& c = clashes_.front();
      auto [a, b] = ends_[c.pair];
      kind = ConflictKind::PairClash;
      edges.push_back({c.existing, a, b, oriented(steps_[c.existing], a, b)});
      edges.push_back({c.incoming, a, b, oriented(steps_[c.incoming], a, b)});
    }
    package(edges, derivation);
  }

  // Kahn's order over the root's strict edges; the root is acyclic here.
  void init_order() {
    order_.assign(m_, 0);
    std::vector<bool> placed(m_, false);
    for (std::size_t slot = 0; slot < m_; ++slot) {
      for (std::size_t x = 0; x < m_; ++x) {
        if (placed[x]) continue;
        bool source = true;
        for (std::size_t w = 0; w < m_ && source; ++w) {
          if (!placed[w] && strict(w, x)) source = false;
        }
        if (source) {
          placed[x] = true;
          order_[x] = slot;
          break;
        }
      }
    }
    // Branching order: most strict individual comparisons first, then names.
    branch_order_.clear();
    std::vector<std::pair<std::size_t, std::size_t>> keyed;
    for (std::size_t p = 0; p < ends_.size(); ++p) {
      auto [a, b] = ends_[p];
      std::size_t strict_count = 0;
      for (std::size_t i = 0; i < s_.population(); ++i) {
        auto c = compare_individual(s_[a][i], s_[b][i], s_.domain_ptr());
        if (c == IndividualComparison::Better || c == IndividualComparison::Worse) ++strict_count;
      }
      keyed.emplace_back(strict_count, p);
    }
    std::sort(keyed.begin(), keyed.end(), [&](const auto& x, const auto& y) {
      if (x.first != y.first) return x.first > y.first;
      return name_key(x.second) < name_key(y.second);
    });
    for (const auto& kp : keyed) branch_order_.push_back(kp.second);
  }

  bool search(std::size_t idx) {
    while (idx < branch_order_.size() && val_[branch_order_[idx]] != kUnset) ++idx;
    if (idx == branch_order_.size()) return true;
    const std::size_t p = branch_order_[idx];
    auto [a, b] = ends_[p];
    for (RelValue v : kValueOrder) {
      ++nodes_;
      const std::size_t trail_mark = trail_.size();
      const std::size_t step_mark = steps_.size();
      if (assign(a, b, v, Step{Rule::Decision, a, b, v, std::nullopt, {}, {}}, false) && run(false) &&
          search(idx + 1)) {
        return true;
      }
      undo(trail_mark, step_mark);
    }
    return false;
  }

  Ranking ranking() const {
    Ranking r(q_.profiles);
    for (std::size_t p = 0; p < ends_.size(); ++p) {
      if (val_[p] != kUnset) r.set(ends_[p].first, ends_[p].second, static_cast<RelValue>(val_[p]));
    }
    return r;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  struct Group {
    Rule rule;
    std::vector<std::pair<std::size_t, std::size_t>> members;
  };

  template <class Key, class KeyFn, class ReflexiveFn>
  void build_groups(Rule rule, KeyFn key_of, ReflexiveFn reflexive) {
    std::map<Key, std::vector<std::pair<std::size_t, std::size_t>>> by_key;
    for (std::size_t a = 0; a < m_; ++a) {
      for (std::size_t b = 0; b < m_; ++b) {
        if (a != b) by_key[key_of(s_[a], s_[b])].emplace_back(a, b);
      }
    }
    for (auto& [key, members] : by_key) {
      if (reflexive(key)) {
        for (auto [a, b] : members) {
          if (a < b) reflexive_units_.push_back({{a, b}, rule});
        }
        continue;
      }
      if (members.size() < 2) continue;
      const std::size_t gid = groups_.size();
      for (auto [a, b] : members) groups_of_[a * m_ + b].push_back(gid);
      groups_.push_back({rule, std::move(members)});
    }
  }

  std::pair<std::string, std::string> name_key(std::size_t p) const {
    const std::string& x = s_[ends_[p].first].name();
    const std::string& y = s_[ends_[p].second].name();
    return x < y ? std::pair{x, y} : std::pair{y, x};
  }

  static RelValue oriented(const Step& st, std::size_t from, std::size_t to) {
    if (st.left == from && st.right == to) return st.rel;
    (void)to;
    return mirror(st.rel);
  }

  bool assign(std::size_t a, std::size_t b, RelValue r, Step step, bool collect) {
    std::size_t p;
    RelValue v;
    if (a < b) {
      p = pair_index(a, b, m_);
      v = r;
    } else {
      p = pair_index(b, a, m_);
      v = mirror(r);
    }
    if (val_[p] == kUnset) {
      reason_[p] = steps_.size();
      steps_.push_back(std::move(step));
      val_[p] = static_cast<int>(v);
      trail_.push_back(p);
      queue_.push_back(p);
      return true;
    }
    if (val_[p] == static_cast<int>(v)) return true;
    if (collect) {
      steps_.push_back(std::move(step));
      clashes_.push_back({p, reason_[p], steps_.size() - 1});
    }
    return false;
  }

  bool run(bool collect) {
    while (!queue_.empty()) {
      std::size_t p = queue_.front();
      queue_.pop_front();
      if (!process(p, collect) && !collect) return false;
    }
    return true;
  }

  bool process(std::size_t p, bool collect) {
    auto [a, b] = ends_[p];
    const RelValue v = static_cast<RelValue>(val_[p]);
    const std::size_t why = reason_[p];
    bool ok = true;

    const std::pair<std::size_t, std::size_t> sides[2] = {{a, b}, {b, a}};
    for (int o = 0; o < 2; ++o) {
      auto [x, y] = sides[o];
      const RelValue r = o == 0 ? v : mirror(v);
      for (std::size_t gid : groups_of_[x * m_ + y]) {
        for (auto [c, d] : groups_[gid].members) {
          if (c == x && d == y) continue;
          if (!assign(c, d, r, Step{groups_[gid].rule, c, d, r, std::nullopt, {why}, {}}, collect)) {
            if (!collect) return false;
            ok = false;
          }
        }
      }
    }

    if (v == RelValue::Indifferent && use_transitivity_) {
      for (std::size_t c = 0; c < m_; ++c) {
        if (c == a || c == b) continue;
        if (rel(b, c) == RelValue::Indifferent) {
          Step st{Rule::IndifferenceTransitivity, a, c, RelValue::Indifferent, std::nullopt, {why, reason(b, c)}, {}};
          if (!assign(a, c, RelValue::Indifferent, std::move(st), collect)) {
            if (!collect) return false;
            ok = false;
          }
        }
        if (rel(a, c) == RelValue::Indifferent) {
          Step st{Rule::IndifferenceTransitivity, b, c, RelValue::Indifferent, std::nullopt, {why, reason(a, c)}, {}};
          if (!assign(b, c, RelValue::Indifferent, std::move(st), collect)) {
            if (!collect) return false;
            ok = false;
          }
        }
      }
    }

    if (!collect && use_acyclicity_ && (v == RelValue::LeftStrict || v == RelValue::RightStrict)) {
      if (v == RelValue::LeftStrict ? !add_edge(a, b) : !add_edge(b, a)) return false;
    }
    return ok;
  }

  // Incremental topological order (Pearce and Kelly). Removing edges keeps the
  // order valid, so backtracking needs no undo here.
  bool add_edge(std::size_t x, std::size_t y) {
    if (order_[x] < order_[y]) return true;
    const std::size_t lb = order_[y];
    const std::size_t ub = order_[x];
    std::vector<bool> seen(m_, false);
    std::vector<std::size_t> forward, backward, stack{y};
    seen[y] = true;
    while (!stack.empty()) {
      std::size_t node = stack.back();
      stack.pop_back();
      forward.push_back(node);
      for (std::size_t w = 0; w < m_; ++w) {
        if (!strict(node, w)) continue;
        if (w == x) return false;
        if (!seen[w] && order_[w] < ub) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    stack = {x};
    seen[x] = true;
    while (!stack.empty()) {
      std::size_t node = stack.back();
      stack.pop_back();
      backward.push_back(node);
      for (std::size_t w = 0; w < m_; ++w) {
        if (!strict(w, node)) continue;
        if (!seen[w] && order_[w] > lb) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    auto by_order = [&](std::size_t p, std::size_t q) { return order_[p] < order_[q]; };
    std::sort(forward.begin(), forward.end(), by_order);
    std::sort(backward.begin(), backward.end(), by_order);
    std::vector<std::size_t> nodes = backward;
    nodes.insert(nodes.end(), forward.begin(), forward.end());
    std::vector<std::size_t> slots;
    for (std::size_t node : nodes) slots.push_back(order_[node]);
    std::sort(slots.begin(), slots.end());
    for (std::size_t k = 0; k < nodes.size(); ++k) order_[nodes[k]] = slots[k];
    return true;
  }

  void undo(std::size_t trail_mark, std::size_t step_mark) {
    while (trail_.size() > trail_mark) {
      val_[trail_.back()] = kUnset;
      trail_.pop_back();
    }
    steps_.resize(step_mark);
    queue_.clear();
  }

  // Shortest cycle of strict edges, by breadth-first search from each node.
  std::optional<std::vector<std::size_t>> find_strict_cycle() const {
    std::optional<std::vector<std::size_t>> best;
    for (std::size_t src = 0; src < m_; ++src) {
      std::vector<std::size_t> dist(m_, std::numeric_limits<std::size_t>::max()), parent(m_, m_);
      std::deque<std::size_t> bfs{src};
      dist[src] = 0;
      while (!bfs.empty()) {
        std::size_t node = bfs.front();
        bfs.pop_front();
        for (std::size_t w = 0; w < m_; ++w) {
          if (strict(node, w) && dist[w] == std::numeric_limits<std::size_t>::max()) {
            dist[w] = dist[node] + 1;
            parent[w] = node;
            bfs.push_back(w);
          }
        }
      }
      for (std::size_t t = 0; t < m_; ++t) {
        if (dist[t] == std::numeric_limits<std::size_t>::max() || !strict(t, src)) continue;
        if (best && best->size() <= dist[t] + 1) continue;
        std::vector<std::size_t> path;
        for (std::size_t node = t; node != src; node = parent[node]) path.push_back(node);
        path.push_back(src);
        std::reverse(path.begin(), path.end());
        best = std::move(path);
      }
    }
    return best;
  }

  // Shortest path of ∼ edges between the ends of a pair fixed to something else.
  std::optional<std::vector<CycleEdge>> find_indifference_chain(bool base_only) const {
    std::optional<std::vector<CycleEdge>> best;
    auto usable = [&](std::size_t x, std::size_t y) {
      if (rel(x, y) != RelValue::Indifferent) return false;
      return !base_only || steps_[reason(x, y)].rule != Rule::IndifferenceTransitivity;
    };
    for (std::size_t p = 0; p < ends_.size(); ++p) {
      if (val_[p] == kUnset || val_[p] == static_cast<int>(RelValue::Indifferent)) continue;
      auto [a, b] = ends_[p];
      std::vector<std::size_t> dist(m_, std::numeric_limits<std::size_t>::max()), parent(m_, m_);
      std::deque<std::size_t> bfs{a};
      dist[a] = 0;
      while (!bfs.empty()) {
        std::size_t node = bfs.front();
        bfs.pop_front();
        for (std::size_t w = 0; w < m_; ++w) {
          if (w != node && dist[w] == std::numeric_limits<std::size_t>::max() && usable(node, w)) {
            dist[w] = dist[node] + 1;
            parent[w] = node;
            bfs.push_back(w);
          }
        }
      }
      if (dist[b] == std::numeric_limits<std::size_t>::max()) continue;
      if (best && best->size() <= dist[b] + 1) continue;
      std::vector<std::size_t> path;
      for (std::size_t node = b; node != a; node = parent[node]) path.push_back(node);
      path.push_back(a);
      std::reverse(path.begin(), path.end());
      std::vector<CycleEdge> edges;
      for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        edges.push_back({reason(path[k], path[k + 1]), path[k], path[k + 1], RelValue::Indifferent});
      }
      edges.push_back({reason(b, a), b, a, *rel(b, a)});
      best = std::move(edges);
    }
    return best;
  }

  // Keeps only the steps the edges depend on, renumbered in derivation order,
  // and fills in anonymity permutations.
  void package(std::vector<CycleEdge>& edges, std::vector<Step>& derivation) const {
    std::vector<bool> keep(steps_.size(), false);
    std::vector<std::size_t> stack;
    for (const CycleEdge& e : edges) stack.push_back(e.step);
    while (!stack.empty()) {
      std::size_t id = stack.back();
      stack.pop_back();
      if (keep[id]) continue;
      keep[id] = true;
      for (std::size_t prem : steps_[id].premises) stack.push_back(prem);
    }
    std::vector<std::size_t> renumber(steps_.size(), 0);
    derivation.clear();
    for (std::size_t id = 0; id < steps_.size(); ++id) {
      if (!keep[id]) continue;
      renumber[id] = derivation.size();
      Step st = steps_[id];
      for (std::size_t& prem : st.premises) prem = renumber[prem];
      if (st.rule == Rule::WeakAnonymity && st.premises.size() == 1) {
        const Step& src = derivation[st.premises[0]];
        if (src.rel == st.rel) {
          st.permutation = matching_permutation(s_[src.left], s_[src.right], s_[st.left], s_[st.right]);
        }
        if (!st.permutation && mirror(src.rel) == st.rel) {
          st.permutation = matching_permutation(s_[src.right], s_[src.left], s_[st.left], s_[st.right]);
        }
      }
      derivation.push_back(std::move(st));
    }
    for (CycleEdge& e : edges) e.step = renumber[e.step];
  }

  const Query& q_;
  const ProfileSet& s_;
  const std::size_t m_;
  const bool use_acyclicity_;
  const bool use_transitivity_;

  std::vector<std::pair<std::size_t, std::size_t>> ends_;
  std::vector<int> val_;
  std::vector<std::size_t> reason_;
  std::vector<Step> steps_;
  std::vector<std::size_t> trail_;
  std::deque<std::size_t> queue_;
  std::vector<Clash> clashes_;

  std::vector<Group> groups_;
  std::vector<std::vector<std::size_t>> groups_of_;
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Rule>> reflexive_units_;

  std::vector<std::size_t> order_;
  std::vector<std::size_t> branch_order_;
  std::uint64_t nodes_ = 0;
};

bool fact_matches(const Step& st, std::size_t from, std::size_t to, RelValue rel) {
  if (st.left == from && st.right == to) return st.rel == rel;
  if (st.left == to && st.right == from) return st.rel == mirror(rel);
  return false;
}

std::optional<std::string> validate_step(const Query& q, const std::vector<Step>& steps, std::size_t id) {
  const ProfileSet& s = *q.profiles;
  const Step& st = steps[id];
  const std::string where = "step " + std::to_string(id) + " (" + rule_name(st.rule) + ")";
  if (st.left >= s.size() || st.right >= s.size() || st.left == st.right) return where + ": bad pair";
  for (std::size_t prem : st.premises) {
    if (prem >= id) return where + ": premise does not precede its use";
  }
  if (auto ax = axiom_of(st.rule); ax && !q.axioms.contains(*ax)) {
    return where + ": axiom not in the query";
  }
  switch (st.rule) {
    case Rule::WeakPareto:
    case Rule::ExtendedPareto:
    case Rule::MinimalAlmostWeakPareto:
    case Rule::MinimalAlmostParetoIndifference: {
      const Axiom ax = *axiom_of(st.rule);
      auto inst = forcing(ax, s, st.left, st.right, q.options);
      if (!inst || inst->forced != st.rel) return where + ": antecedent does not hold";
      if (st.pivot) {
        bool ok = true;
        if (ax == Axiom::MinimalAlmostWeakPareto) ok = mawp_antecedent(s, st.left, st.right, *st.pivot, q.options);
        if (ax == Axiom::MinimalAlmostParetoIndifference) ok = mapi_antecedent(s, st.left, st.right, *st.pivot);
        if (!ok) return where + ": antecedent fails for the recorded pivot";
      }
      return std::nullopt;
    }
    case Rule::Requirement:
      for (const Requirement& r : q.extra) {
        if (fact_matches(st, r.left, r.right, r.rel)) return std::nullopt;
      }
      return where + ": no such requirement";
    case Rule::WeakAnonymity: {
      if (st.premises.empty()) {
        if (st.rel == RelValue::Indifferent && s[st.left].entries() == s[st.right].entries()) return std::nullopt;
        return where + ": unsupported reflexive image";
      }
      if (st.premises.size() != 1 || !st.permutation) return where + ": needs one premise and a permutation";
      const Step& src = steps[st.premises[0]];
      const Permutation& pi = *st.permutation;
      if (!is_bijection(pi, s.population())) return where + ": permutation is not a bijection";
      auto image = [&](std::size_t p) { return permute_entries(s[p].entries(), pi); };
      if (image(src.left) == s[st.left].entries() && image(src.right) == s[st.right].entries() &&
          src.rel == st.rel) {
        return std::nullopt;
      }
      if (image(src.right) == s[st.left].entries() && image(src.left) == s[st.right].entries() &&
          mirror(src.rel) == st.rel) {
        return std::nullopt;
      }
      return where + ": permutation does not carry the premise onto this pair";
    }
    case Rule::OrdinalNoncomparability: {
      const PairSignature sig = pair_signature(s[st.left], s[st.right]);
      if (st.premises.empty()) {
        if (st.rel == RelValue::Indifferent && is_reflexive_signature(sig)) return std::nullopt;
        return where + ": unsupported reflexive signature";
      }
      if (st.premises.size() != 1) return where + ": needs one premise";
      const Step& src = steps[st.premises[0]];
      if (pair_signature(s[src.left], s[src.right]) == sig && src.rel == st.rel) return std::nullopt;
      if (pair_signature(s[src.right], s[src.left]) == sig && mirror(src.rel) == st.rel) return std::nullopt;
      return where + ": signatures differ";
    }
    case Rule::IndifferenceTransitivity: {
      if (st.premises.size() != 2 || st.rel != RelValue::Indifferent) return where + ": malformed";
      const Step& p1 = steps[st.premises[0]];
      const Step& p2 = steps[st.premises[1]];
      if (p1.rel != RelValue::Indifferent || p2.rel != RelValue::Indifferent) {
        return where + ": premises are not indifferences";
      }
      // The premises share one profile; their other ends are this pair.
      for (std::size_t x : {p1.left, p1.right}) {
        for (std::size_t y : {p2.left, p2.right}) {
          if (x != y) continue;
          std::size_t e1 = p1.left == x ? p1.right : p1.left;
          std::size_t e2 = p2.left == y ? p2.right : p2.left;
          if ((e1 == st.left && e2 == st.right) || (e1 == st.right && e2 == st.left)) return std::nullopt;
        }
      }
      return where + ": premises do not chain to this pair";
    }
    case Rule::Decision:
      return where + ": decisions cannot appear in a certificate";
  }
  return where + ": unknown rule";
}

}  // namespace

PropagationResult propagate(const Query& q) {
  if (!q.profiles) throw ArgumentError("query has no profiles");
  Engine e(q);
  e.root();
  PropagationResult r = e.snapshot();
  if (e.root_conflict()) e.explain_root_conflict(r.conflict, r.derivation, r.forced_cycle);
  return r;
}

bool satisfies(const Query& q, const Ranking& r) {
  for (const Requirement& req : q.extra) {
    if (r.relation(req.left, req.right) != req.rel) return false;
  }
  AxiomOptions opts = q.options;
  opts.max_violations = 1;
  for (Axiom a : q.axioms.members()) {
    if (!check(a, r, opts).holds) return false;
  }
  return true;
}

Certificate solve(const Query& q, const SolverOptions& opts) {
  if (!q.profiles) throw ArgumentError("query has no profiles");
  const auto start = std::chrono::steady_clock::now();
  Engine e(q);
  e.root();

  Certificate cert;
  cert.stats.pairs = e.pairs();
  cert.stats.forced_pairs = e.pairs() - e.open_pairs();
  auto finish = [&]() {
    cert.stats.nodes = e.nodes();
    cert.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (auto err = validate_certificate(q, cert)) {
      throw std::logic_error("solver produced an invalid certificate: " + *err);
    }
    return cert;
  };

  if (e.root_conflict()) {
    cert.verdict = Verdict::Unsat;
    e.explain_root_conflict(cert.conflict, cert.derivation, cert.forced_cycle);
    return finish();
  }
  if (e.open_pairs() > opts.pair_budget) {
    throw ResourceError(std::to_string(e.open_pairs()) + " open pairs exceed the search budget of " +
                        std::to_string(opts.pair_budget) + "; use fewer profiles (smaller n)");
  }
  e.init_order();
  if (e.search(0)) {
    cert.verdict = Verdict::Sat;
    cert.witness = e.ranking();
  } else {
    cert.verdict = Verdict::Unsat;
    cert.conflict = ConflictKind::Exhaustion;
  }
  return finish();
}

std::uint64_t enumerate_all(const Query& q, std::size_t max_pairs) {
  if (!q.profiles) throw ArgumentError("query has no profiles");
  const std::size_t k = pair_count(q.profiles->size());
  if (k > max_pairs) {
    throw ResourceError(std::to_string(k) + " pairs exceed the enumeration limit of " + std::to_string(max_pairs));
  }
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= 4;
  const std::size_t m = q.profiles->size();
  std::uint64_t count = 0;
  Ranking r(q.profiles);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a + 1; b < m; ++b) {
        r.set(a, b, kAllRelValues[c % 4]);
        c /= 4;
      }
    }
    if (satisfies(q, r)) ++count;
  }
  return count;
}

std::optional<std::string> validate_certificate(const Query& q, const Certificate& c) {
  if (c.verdict == Verdict::Sat) {
    if (!c.witness) return "sat certificate without a witness";
    if (!satisfies(q, *c.witness)) return "witness violates the query";
    return std::nullopt;
  }
  if (c.witness) return "unsat certificate carries a witness";
  if (c.conflict == ConflictKind::Exhaustion) {
    if (!c.forced_cycle.empty()) return "exhaustion certificate lists a cycle";
    return std::nullopt;
  }
  if (c.conflict == ConflictKind::None) return "unsat certificate without a conflict";

  for (std::size_t id = 0; id < c.derivation.size(); ++id) {
    if (auto err = validate_step(q, c.derivation, id)) return err;
  }
  const auto& edges = c.forced_cycle;
  for (const CycleEdge& e : edges) {
    if (e.step >= c.derivation.size()) return "cycle edge refers to a missing step";
    if (!fact_matches(c.derivation[e.step], e.from, e.to, e.rel)) return "cycle edge disagrees with its step";
  }
  auto chained = [&]() {
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (edges[k].to != edges[(k + 1) % edges.size()].from) return false;
    }
    return true;
  };
  switch (c.conflict) {
    case ConflictKind::StrictCycle:
      if (!q.axioms.contains(Axiom::Acyclicity)) return "strict cycle without acyclicity";
      if (edges.size() < 3 || !chained()) return "strict cycle does not close";
      for (const CycleEdge& e : edges) {
        if (e.rel != RelValue::LeftStrict) return "strict cycle has a non-strict edge";
      }
      return std::nullopt;
    case ConflictKind::IndifferenceChain:
      if (!q.axioms.contains(Axiom::IndifferenceTransitivity)) return "indifference chain without transitivity";
      if (edges.size() < 3 || !chained()) return "indifference chain does not close";
      for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
        if (edges[k].rel != RelValue::Indifferent) return "indifference chain has a non-indifferent link";
      }
      if (edges.back().rel == RelValue::Indifferent) return "indifference chain closes with indifference";
      return std::nullopt;
    case ConflictKind::PairClash:
      if (edges.size() != 2) return "pair clash needs two edges";
      if (edges[0].from != edges[1].from || edges[0].to != edges[1].to) return "pair clash edges differ in pair";
      if (edges[0].rel == edges[1].rel) return "pair clash edges agree";
      return std::nullopt;
    default:
      return "unexpected conflict kind";
  }
}

// ---------------------------------------------------------------------------

std::shared_ptr<const ProfileSet> theorem3_family(std::size_t n) {
  WitnessBundle base = gen_theorem1(n);
  std::vector<Profile> profiles = base.profiles->profiles();
  const std::size_t originals = profiles.size();
  Permutation pi(n);
  for (std::size_t i = 0; i < n; ++i) pi[i] = i;
  while (std::next_permutation(pi.begin(), pi.end())) {
    for (std::size_t k = 0; k < originals; ++k) {
      Profile image = permute_profile(profiles[k], pi);
      bool known = std::any_of(profiles.begin(), profiles.end(),
                               [&](const Profile& p) { return p.entries() == image.entries(); });
      if (!known) profiles.push_back(std::move(image));
    }
  }
  return std::make_shared<const ProfileSet>(base.profiles->individuals(), std::nullopt, std::move(profiles));
}

std::vector<VetoPair> veto_candidates(const ProfileSet& s, std::size_t j) {
  std::vector<VetoPair> out;
  for (std::size_t u = 0; u < s.size(); ++u) {
    for (std::size_t v = 0; v < s.size(); ++v) {
      if (u == v || !veto_antecedent(s, u, v, j)) continue;
      out.push_back({j, s[u][j].is_absent() ? VetoSide::AbsentInLeft : VetoSide::AbsentInRight, u, v});
    }
  }
  return out;
}

bool Theorem3Report::all_unsat() const {
  return !queries.empty() && sat_count() == 0;
}

std::size_t Theorem3Report::sat_count() const {
  return static_cast<std::size_t>(std::count_if(queries.begin(), queries.end(), [](const VetoQuery& vq) {
    return vq.certificate.verdict == Verdict::Sat;
  }));
}

namespace {

// Individual i's levels shifted into a band of their own, so the copy keeps
// every ordinal comparison but has no relabelled image among the profiles.
Profile transported(const Profile& p) {
  std::vector<Welfare> entries;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_absent()) {
      entries.push_back(Welfare::absent());
    } else {
      entries.push_back(Welfare::level(p[i].level_value() + Rational(static_cast<std::int64_t>(1000 * (i + 1)))));
    }
  }
  return Profile("t:" + p.name(), std::move(entries));
}

}  // namespace

Theorem3Report verify_theorem3(std::size_t n, const AxiomSet& axioms, const SolverOptions& opts) {
  if (n < 2 || n > 3) throw ResourceError("veto certification runs for n = 2 or 3 only");
  Theorem3Report report;
  report.n = n;
  report.family = theorem3_family(n);
  report.axioms = axioms;
  const ProfileSet& fam = *report.family;

  for (std::size_t j = 0; j < n; ++j) {
    std::vector<VetoPair> left_side, right_side;
    for (const VetoPair& vp : veto_candidates(fam, j)) {
      (vp.side == VetoSide::AbsentInLeft ? left_side : right_side).push_back(vp);
    }
    if (left_side.empty() || right_side.empty()) continue;

    std::vector<std::pair<VetoPair, VetoPair>> combos;
    for (const VetoPair& a : left_side) combos.emplace_back(a, right_side.front());
    for (std::size_t k = 1; k < right_side.size(); ++k) combos.emplace_back(left_side.front(), right_side[k]);

    for (const auto& [a, b] : combos) {
      std::vector<Profile> profiles = fam.profiles();
      auto add = [&](std::size_t idx) {
        Profile t = transported(fam[idx]);
        for (std::size_t k = 0; k < profiles.size(); ++k) {
          if (profiles[k].name() == t.name()) return k;
        }
        profiles.push_back(std::move(t));
        return profiles.size() - 1;
      };
      std::size_t al = add(a.left), ar = add(a.right), bl = add(b.left), br = add(b.right);

      VetoQuery vq;
      vq.individual = j;
      vq.absent_in_left = {fam[a.left].name(), fam[a.right].name()};
      vq.absent_in_right = {fam[b.left].name(), fam[b.right].name()};
      vq.query.profiles = std::make_shared<const ProfileSet>(fam.individuals(), std::nullopt, std::move(profiles));
      vq.query.axioms = axioms;
      vq.query.extra = {{al, ar, RelValue::LeftStrict}, {bl, br, RelValue::LeftStrict}};
      vq.certificate = solve(vq.query, opts);
      report.queries.push_back(std::move(vq));
    }
  }
  return report;
}

}  // namespace pareto
