#include "pareto/witnesses.hpp"

#include <algorithm>
#include <stdexcept>

#include "pareto/error.hpp"

namespace pareto {

namespace {

using Levels = std::vector<std::optional<Rational>>;

std::string numbered(const char* prefix, std::size_t k) { return prefix + std::to_string(k); }

// Checks that every edge's antecedent holds with the recorded pivot. A failure
// means the family was built wrong, not that the caller did anything wrong.
void self_check(const WitnessBundle& b) {
  const ProfileSet& s = *b.profiles;
  for (const WitnessEdge& e : b.edges) {
    auto u = s.index_of(e.left);
    auto v = s.index_of(e.right);
    if (!u || !v) throw std::logic_error("witness edge names an unknown profile");
    auto inst = forcing(e.axiom, s, *u, *v);
    bool ok = inst && inst->forced == e.forced;
    if (ok && e.pivot) {
      if (e.axiom == Axiom::MinimalAlmostWeakPareto) ok = mawp_antecedent(s, *u, *v, *e.pivot);
      if (e.axiom == Axiom::MinimalAlmostParetoIndifference) ok = mapi_antecedent(s, *u, *v, *e.pivot);
    }
    if (!ok) {
      throw std::logic_error(std::string("witness self-check failed: ") + axiom_name(e.axiom) +
                             " does not force " + e.left + " " + symbol(e.forced) + " " + e.right);
    }
  }
}

// Cycle over all profiles in order, every edge forced strictly by `axiom`
// with the single pivot found by the forcing rule.
WitnessBundle strict_cycle_bundle(std::shared_ptr<const ProfileSet> s, Axiom axiom, AxiomSet contradicts) {
  WitnessBundle b;
  b.profiles = std::move(s);
  b.forcing_axiom = axiom;
  b.contradicts = contradicts;
  const std::size_t m = b.profiles->size();
  for (std::size_t k = 0; k < m; ++k) {
    b.expected_cycle.push_back((*b.profiles)[k].name());
    std::size_t next = (k + 1) % m;
    auto inst = forcing(axiom, *b.profiles, k, next);
    std::optional<std::size_t> pivot = inst ? inst->pivot : std::nullopt;
    b.pivot_schedule.push_back(pivot);
    b.edges.push_back({(*b.profiles)[k].name(), (*b.profiles)[next].name(), axiom, RelValue::LeftStrict, pivot});
  }
  self_check(b);
  return b;
}

}  // namespace

Ranking WitnessBundle::forced_ranking(const AxiomOptions& opts) const {
  Ranking r(profiles);
  for (Axiom a : contradicts.members()) {
    if (!is_pareto_family(a)) continue;
    for (const AxiomInstance& inst : forced_instances(a, *profiles, opts)) {
      r.set(inst.left, inst.right, inst.forced);
    }
  }
  return r;
}

WitnessBundle gen_temkin() {
  std::vector<Profile> ps;
  ps.push_back(make_level_profile("u", Levels{Rational(2), Rational(1), std::nullopt}));
  ps.push_back(make_level_profile("v", Levels{Rational(1), std::nullopt, Rational(2)}));
  ps.push_back(make_level_profile("w", Levels{std::nullopt, Rational(2), Rational(1)}));
  auto s = std::make_shared<const ProfileSet>(numbered_individuals(3), std::nullopt, std::move(ps));
  return strict_cycle_bundle(std::move(s), Axiom::ExtendedPareto, {Axiom::ExtendedPareto, Axiom::Acyclicity});
}

WitnessBundle gen_theorem1(std::size_t n, const std::optional<LevelGrid>& levels) {
  if (n < 2) throw ArgumentError("the first impossibility family needs n >= 2");
  const std::size_t top = 2 * n - 1;
  LevelGrid grid;
  if (levels) {
    grid = *levels;
    if (grid.size() != n) throw ArgumentError("level grid needs one row per individual");
    for (std::size_t i = 0; i < n; ++i) {
      if (grid[i].size() != top) {
        throw ArgumentError("level grid rows need 2n-1 = " + std::to_string(top) + " levels");
      }
      for (std::size_t t = 1; t < top; ++t) {
        if (!(grid[i][t] > grid[i][t - 1])) {
          throw ArgumentError("level grid must be strictly increasing for individual " + std::to_string(i + 1));
        }
      }
    }
  } else {
    grid.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t t = 1; t <= top; ++t) grid[i].push_back(Rational(static_cast<std::int64_t>(t)));
    }
  }

  const std::size_t len = 2 * n;
  std::vector<Profile> ps;
  for (std::size_t k = 1; k <= len; ++k) {
    Levels row;
    for (std::size_t i = 1; i <= n; ++i) {
      // (2n - 2i + 2 - k) mod 2n, kept non-negative.
      std::size_t sup = (2 * len + len - 2 * i + 2 - k) % len;
      if (sup == 0) {
        row.push_back(std::nullopt);
      } else {
        row.push_back(grid[i - 1][sup - 1]);
      }
    }
    ps.push_back(make_level_profile(numbered("u", k), row));
  }
  auto s = std::make_shared<const ProfileSet>(numbered_individuals(n), std::nullopt, std::move(ps));
  return strict_cycle_bundle(std::move(s), Axiom::MinimalAlmostWeakPareto,
                             {Axiom::MinimalAlmostWeakPareto, Axiom::Acyclicity});
}

WitnessBundle gen_theorem2(std::size_t n, const Rational& u, const Rational& eps) {
  if (n < 2) throw ArgumentError("the second impossibility family needs n >= 2");
  if (u.sign() <= 0) throw ArgumentError("base level u must be positive");
  if (eps.sign() <= 0) throw ArgumentError("increment eps must be positive");
  const Rational high = u + eps;

  std::vector<Profile> ps;
  Levels row(n, u);
  ps.push_back(make_level_profile("u1", row));
  for (std::size_t k = 1; k <= n; ++k) {
    row[k - 1] = std::nullopt;
    ps.push_back(make_level_profile(numbered("u", 2 * k), row));
    row[k - 1] = high;
    ps.push_back(make_level_profile(numbered("u", 2 * k + 1), row));
  }
  auto s = std::make_shared<const ProfileSet>(numbered_individuals(n), std::nullopt, std::move(ps));

  WitnessBundle b;
  b.profiles = s;
  b.forcing_axiom = Axiom::MinimalAlmostParetoIndifference;
  b.contradicts = {Axiom::WeakPareto, Axiom::MinimalAlmostParetoIndifference, Axiom::IndifferenceTransitivity};
  const std::size_t m = s->size();
  for (std::size_t k = 0; k < m; ++k) b.expected_cycle.push_back((*s)[k].name());
  for (std::size_t k = 0; k + 1 < m; ++k) {
    // Profiles 2j-1 -> 2j and 2j -> 2j+1 (1-based) both pivot on individual j.
    std::size_t pivot = k / 2;
    b.pivot_schedule.push_back(pivot);
    b.edges.push_back({(*s)[k].name(), (*s)[k + 1].name(), Axiom::MinimalAlmostParetoIndifference,
                       RelValue::Indifferent, pivot});
  }
  b.pivot_schedule.push_back(std::nullopt);
  b.edges.push_back({(*s)[m - 1].name(), (*s)[0].name(), Axiom::WeakPareto, RelValue::LeftStrict, std::nullopt});
  self_check(b);
  return b;
}

namespace {

WitnessBundle application_careers() {
  const std::vector<std::string> careers{"scholar", "artisan", "artist"};
  const std::vector<std::string> ranks{"A+", "A", "A-"};
  std::vector<std::string> outcomes;
  std::vector<OutcomeDomain::StrictPair> gens;
  for (const auto& c : careers) {
    for (const auto& r : ranks) outcomes.push_back(c + " " + r);
    gens.emplace_back(c + " A+", c + " A");
    gens.emplace_back(c + " A", c + " A-");
  }
  auto domain = OutcomeDomain::from_generators(outcomes, gens);
  auto row = [](std::string name, std::vector<std::string> ids) {
    std::vector<Welfare> w;
    for (auto& id : ids) w.push_back(Welfare::outcome(std::move(id)));
    return Profile(std::move(name), std::move(w));
  };
  std::vector<Profile> ps;
  ps.push_back(row("u1", {"scholar A", "artisan A+", "artist A-"}));
  ps.push_back(row("u2", {"scholar A-", "artisan A", "scholar A+"}));
  ps.push_back(row("u3", {"artist A+", "artisan A-", "scholar A"}));
  ps.push_back(row("u4", {"artist A", "artist A+", "scholar A-"}));
  ps.push_back(row("u5", {"artist A-", "artist A", "artist A+"}));
  ps.push_back(row("u6", {"scholar A+", "artist A-", "artist A"}));
  auto s = std::make_shared<const ProfileSet>(numbered_individuals(3), std::move(domain), std::move(ps));
  return strict_cycle_bundle(std::move(s), Axiom::MinimalAlmostWeakPareto,
                             {Axiom::MinimalAlmostWeakPareto, Axiom::Acyclicity});
}

WitnessBundle application_wellbeing() {
  // Families whose members are mutually comparable, best first.
  const std::vector<std::vector<std::string>> families{
      {"EE Top 18%", "EE Top 19%", "EE Top 20%"},
      {"ME Top 18%", "ME Top 19%", "ME Top 20%"},
      {"Low Vision VA 0.1", "Low Vision VA 0.07", "Low Vision VA 0.05"},
      {"Stiff Neck Range 70deg", "Stiff Neck Range 65deg", "Stiff Neck Range 60deg"},
      {"London 110 m2", "London 105 m2", "London 100 m2"},
      {"Boston 110 m2", "Boston 105 m2", "Boston 100 m2"},
  };
  std::vector<std::string> outcomes;
  std::vector<OutcomeDomain::StrictPair> gens;
  for (const auto& f : families) {
    for (std::size_t k = 0; k < f.size(); ++k) {
      outcomes.push_back(f[k]);
      if (k + 1 < f.size()) gens.emplace_back(f[k], f[k + 1]);
    }
  }
  auto domain = OutcomeDomain::from_generators(outcomes, gens);
  auto row = [](std::string name, std::vector<std::string> ids) {
    std::vector<Welfare> w;
    for (auto& id : ids) w.push_back(Welfare::outcome(std::move(id)));
    return Profile(std::move(name), std::move(w));
  };
  std::vector<Profile> ps;
  ps.push_back(row("u1", {"EE Top 19%", "Low Vision VA 0.1", "London 100 m2"}));
  ps.push_back(row("u2", {"EE Top 20%", "Low Vision VA 0.07", "Boston 110 m2"}));
  ps.push_back(row("u3", {"ME Top 18%", "Low Vision VA 0.05", "Boston 105 m2"}));
  ps.push_back(row("u4", {"ME Top 19%", "Stiff Neck Range 70deg", "Boston 100 m2"}));
  ps.push_back(row("u5", {"ME Top 20%", "Stiff Neck Range 65deg", "London 110 m2"}));
  ps.push_back(row("u6", {"EE Top 18%", "Stiff Neck Range 60deg", "London 105 m2"}));
  auto s = std::make_shared<const ProfileSet>(std::vector<std::string>{"education", "health", "housing"},
                                              std::move(domain), std::move(ps));
  return strict_cycle_bundle(std::move(s), Axiom::MinimalAlmostWeakPareto,
                             {Axiom::MinimalAlmostWeakPareto, Axiom::Acyclicity});
}

WitnessBundle application_generations() {
  const std::optional<Rational> none;
  auto r = [](std::int64_t x) { return std::optional<Rational>(Rational(x)); };
  std::vector<Profile> ps;
  ps.push_back(make_level_profile("u1", {r(6), r(4), r(2), none}));
  ps.push_back(make_level_profile("u2", {r(5), r(3), r(1), r(7)}));
  ps.push_back(make_level_profile("u3", {r(4), r(2), none, r(6)}));
  ps.push_back(make_level_profile("u4", {r(3), r(1), r(7), r(5)}));
  ps.push_back(make_level_profile("u5", {r(2), none, r(6), r(4)}));
  ps.push_back(make_level_profile("u6", {r(1), r(7), r(5), r(3)}));
  ps.push_back(make_level_profile("u7", {none, r(6), r(4), r(2)}));
  ps.push_back(make_level_profile("u8", {r(7), r(5), r(3), r(1)}));
  auto s = std::make_shared<const ProfileSet>(numbered_individuals(4), std::nullopt, std::move(ps));
  return strict_cycle_bundle(std::move(s), Axiom::MinimalAlmostWeakPareto,
                             {Axiom::MinimalAlmostWeakPareto, Axiom::Acyclicity});
}

}  // namespace

WitnessBundle gen_application(int k) {
  switch (k) {
    case 1: return application_careers();
    case 2: return application_wellbeing();
    case 3: return application_generations();
    default: throw ArgumentError("application must be 1, 2 or 3");
  }
}

// ---------------------------------------------------------------------------

VotingProfile gen_latin_square(std::size_t n) {
  if (n < 3) throw ArgumentError("a Latin square profile needs n >= 3");
  VotingProfile vp;
  for (std::size_t k = 0; k < n; ++k) {
    vp.voters.push_back(numbered("voter", k + 1));
    vp.alternatives.push_back(numbered("a", k + 1));
    std::vector<std::size_t> order;
    for (std::size_t t = 0; t < n; ++t) order.push_back((k + t) % n);
    vp.rankings.push_back(std::move(order));
  }
  return vp;
}

std::size_t tally(const VotingProfile& vp, std::size_t a, std::size_t b) {
  std::size_t votes = 0;
  for (const auto& order : vp.rankings) {
    for (std::size_t x : order) {
      if (x == a) {
        ++votes;
        break;
      }
      if (x == b) break;
    }
  }
  return votes;
}

std::optional<std::vector<std::size_t>> supermajority_cycle(const VotingProfile& vp, std::size_t threshold) {
  const std::size_t k = vp.alternatives.size();
  std::vector<std::vector<bool>> beats(k, std::vector<bool>(k, false));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (a != b && tally(vp, a, b) >= threshold) beats[a][b] = true;
    }
  }
  // Depth-first search for a back edge.
  std::vector<int> state(k, 0);
  std::vector<std::size_t> path;
  std::optional<std::vector<std::size_t>> found;
  auto dfs = [&](auto&& self, std::size_t a) -> void {
    state[a] = 1;
    path.push_back(a);
    for (std::size_t b = 0; b < k && !found; ++b) {
      if (!beats[a][b]) continue;
      if (state[b] == 1) {
        auto it = std::find(path.begin(), path.end(), b);
        found = std::vector<std::size_t>(it, path.end());
      } else if (state[b] == 0) {
        self(self, b);
      }
    }
    path.pop_back();
    state[a] = 2;
  };
  for (std::size_t a = 0; a < k && !found; ++a) {
    if (state[a] == 0) dfs(dfs, a);
  }
  return found;
}

// ---------------------------------------------------------------------------

RepugnantParams default_repugnant_params(RepugnantVariant variant, const Rational& c) {
  RepugnantParams p;
  p.delta = Rational(1, 10);
  if (variant == RepugnantVariant::Weak) {
    p.crowd = 100000;
    p.elite = 10;
    p.high = c + Rational(100);
  } else {
    p.crowd = 1000;
    p.elite = 1;
    p.high = c;
  }
  return p;
}

RepugnantDemo gen_repugnant_demo(const Rational& c, RepugnantVariant variant,
                                 const std::optional<RepugnantParams>& params) {
  RepugnantParams p = params.value_or(default_repugnant_params(variant, c));
  if (p.delta.sign() <= 0) throw ArgumentError("delta must be positive");
  if (p.crowd == 0 || p.elite == 0) throw ArgumentError("both societies need at least one individual");
  if (variant == RepugnantVariant::Reverse) {
    if (p.elite != 1 || p.high != c) throw ArgumentError("the reverse conclusion compares against one individual at c");
  }

  const Rational crowd_level = variant == RepugnantVariant::Weak ? c + p.delta : c - p.delta;
  const Rational crowd_value = Rational(static_cast<std::int64_t>(p.crowd)) * (crowd_level - c);
  const Rational other_value = Rational(static_cast<std::int64_t>(p.elite)) * (p.high - c);

  RelValue expected;
  if (variant == RepugnantVariant::Weak) {
    if (!(crowd_value > other_value)) {
      throw ArgumentError("weak variant needs crowd * delta > elite * (high - c)");
    }
    expected = RelValue::LeftStrict;
  } else {
    expected = RelValue::RightStrict;  // crowd_value < 0 == other_value
  }

  const std::size_t n = std::max<std::size_t>({p.crowd, p.elite, 2});
  std::vector<Welfare> crowd(n), other(n);
  for (std::size_t i = 0; i < p.crowd; ++i) crowd[i] = Welfare::level(crowd_level);
  for (std::size_t i = 0; i < p.elite; ++i) other[i] = Welfare::level(p.high);
  std::vector<Profile> ps;
  ps.emplace_back("crowd", std::move(crowd));
  ps.emplace_back(variant == RepugnantVariant::Weak ? "elite" : "solitary", std::move(other));

  RepugnantDemo demo;
  demo.profiles = std::make_shared<const ProfileSet>(numbered_individuals(n), std::nullopt, std::move(ps));
  demo.variant = variant;
  demo.critical_level = c;
  demo.params = p;
  demo.crowd_value = crowd_value;
  demo.other_value = other_value;
  demo.expected = expected;
  return demo;
}

}  // namespace pareto
