#include "pareto/io.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "pareto/error.hpp"

namespace pareto {
namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ParseError(field + ": " + what);
}

const Json& member(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string string_at(const Json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "expected a string");
  return v.get<std::string>();
}

const Json& array_at(const Json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array");
  return v;
}

Welfare welfare_from_json(const Json& v, const std::optional<OutcomeDomain>& domain, const std::string& where) {
  if (v.is_null()) return Welfare::absent();
  if (v.is_number_integer()) return Welfare::level(Rational(v.get<std::int64_t>()));
  if (v.is_number()) fail(where, "floating-point levels are not exact; write them as strings like \"1/10\"");
  if (!v.is_string()) fail(where, "expected a level string, an outcome id or null");
  const std::string text = v.get<std::string>();
  if (domain && domain->contains(text)) return Welfare::outcome(text);
  try {
    return Welfare::level(Rational::parse(text));
  } catch (const std::exception&) {
    fail(where, "\"" + text + "\" is neither a rational level nor a known outcome");
  }
}

Json welfare_to_json(const Welfare& w) {
  if (w.is_absent()) return nullptr;
  if (w.is_level()) return w.level_value().str();
  return w.outcome_id();
}

}  // namespace

Json profiles_to_json(const ProfileSet& s) {
  Json j;
  j["individuals"] = s.individuals();
  if (s.domain()) {
    Json pairs = Json::array();
    for (const auto& [a, b] : s.domain()->strict_pairs()) pairs.push_back({a, b});
    j["domain"] = {{"outcomes", s.domain()->outcomes()}, {"strict_pairs", pairs}};
  } else {
    j["domain"] = nullptr;
  }
  Json profiles = Json::array();
  for (const Profile& p : s.profiles()) {
    Json welfare = Json::array();
    for (const Welfare& w : p.entries()) welfare.push_back(welfare_to_json(w));
    profiles.push_back({{"name", p.name()}, {"welfare", welfare}});
  }
  j["profiles"] = profiles;
  return j;
}

std::shared_ptr<const ProfileSet> profiles_from_json(const Json& j) {
  std::vector<std::string> individuals;
  const Json& ind = array_at(member(j, "individuals", "$"), "individuals");
  for (std::size_t i = 0; i < ind.size(); ++i) {
    individuals.push_back(string_at(ind[i], "individuals[" + std::to_string(i) + "]"));
  }

  std::optional<OutcomeDomain> domain;
  if (auto it = j.find("domain"); it != j.end() && !it->is_null()) {
    std::vector<std::string> outcomes;
    const Json& outs = array_at(member(*it, "outcomes", "domain"), "domain.outcomes");
    for (std::size_t i = 0; i < outs.size(); ++i) {
      outcomes.push_back(string_at(outs[i], "domain.outcomes[" + std::to_string(i) + "]"));
    }
    std::vector<OutcomeDomain::StrictPair> pairs;
    const Json& sp = array_at(member(*it, "strict_pairs", "domain"), "domain.strict_pairs");
    for (std::size_t i = 0; i < sp.size(); ++i) {
      const std::string where = "domain.strict_pairs[" + std::to_string(i) + "]";
      if (!sp[i].is_array() || sp[i].size() != 2) fail(where, "expected a two-element array");
      pairs.emplace_back(string_at(sp[i][0], where + "[0]"), string_at(sp[i][1], where + "[1]"));
    }
    try {
      domain.emplace(std::move(outcomes), std::move(pairs));
    } catch (const std::exception& e) {
      fail("domain", e.what());
    }
  }

  std::vector<Profile> profiles;
  const Json& ps = array_at(member(j, "profiles", "$"), "profiles");
  for (std::size_t k = 0; k < ps.size(); ++k) {
    const std::string where = "profiles[" + std::to_string(k) + "]";
    const std::string name = string_at(member(ps[k], "name", where), where + ".name");
    const Json& ws = array_at(member(ps[k], "welfare", where), where + ".welfare");
    if (ws.size() != individuals.size()) {
      fail(where + ".welfare", "has " + std::to_string(ws.size()) + " entries for " +
                                   std::to_string(individuals.size()) + " individuals");
    }
    std::vector<Welfare> entries;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      entries.push_back(welfare_from_json(ws[i], domain, where + ".welfare[" + std::to_string(i) + "]"));
    }
    try {
      profiles.emplace_back(name, std::move(entries));
    } catch (const std::exception& e) {
      fail(where, e.what());
    }
  }
  try {
    return std::make_shared<const ProfileSet>(std::move(individuals), std::move(domain), std::move(profiles));
  } catch (const std::exception& e) {
    fail("profiles", e.what());
  }
}

Json ranking_to_json(const Ranking& r) {
  Json pairs = Json::array();
  const ProfileSet& s = r.base();
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      pairs.push_back({{"left", s[a].name()}, {"right", s[b].name()}, {"rel", to_string(r.relation(a, b))}});
    }
  }
  return Json{{"pairs", pairs}};
}

Ranking ranking_from_json(const Json& j, std::shared_ptr<const ProfileSet> s) {
  Ranking r(s);
  std::vector<bool> seen(pair_count(s->size()), false);
  const Json& pairs = array_at(member(j, "pairs", "$"), "pairs");
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const std::string where = "pairs[" + std::to_string(k) + "]";
    const std::string left = string_at(member(pairs[k], "left", where), where + ".left");
    const std::string right = string_at(member(pairs[k], "right", where), where + ".right");
    const std::string rel = string_at(member(pairs[k], "rel", where), where + ".rel");
    auto a = s->index_of(left);
    auto b = s->index_of(right);
    if (!a) fail(where + ".left", "unknown profile \"" + left + "\"");
    if (!b) fail(where + ".right", "unknown profile \"" + right + "\"");
    if (*a == *b) fail(where, "a profile cannot be paired with itself");
    auto value = parse_rel(rel);
    if (!value) fail(where + ".rel", "unknown relation \"" + rel + "\"");
    const std::size_t idx = *a < *b ? pair_index(*a, *b, s->size()) : pair_index(*b, *a, s->size());
    if (seen[idx]) fail(where, "pair listed twice");
    seen[idx] = true;
    r.set(*a, *b, *value);
  }
  for (std::size_t a = 0; a < s->size(); ++a) {
    for (std::size_t b = a + 1; b < s->size(); ++b) {
      if (!seen[pair_index(a, b, s->size())]) {
        fail("pairs", "missing pair (" + (*s)[a].name() + ", " + (*s)[b].name() + ")");
      }
    }
  }
  return r;
}

Json report_to_json(const AxiomReport& r) {
  Json violations = Json::array();
  for (const Violation& v : r.violations) {
    violations.push_back({{"profiles", v.profiles}, {"explanation", v.explanation}});
  }
  return Json{{"axiom", axiom_name(r.axiom)},
              {"holds", r.holds},
              {"violation_count", r.violation_count},
              {"violations", violations}};
}

Json certificate_to_json(const Query& q, const Certificate& c, bool with_timing) {
  const ProfileSet& s = *q.profiles;
  auto pivot_json = [](const std::optional<std::size_t>& p) -> Json {
    if (!p) return nullptr;
    return *p + 1;
  };
  Json j;
  j["verdict"] = to_string(c.verdict);
  j["conflict"] = c.verdict == Verdict::Sat ? Json(nullptr) : Json(to_string(c.conflict));
  j["witness"] = c.witness ? ranking_to_json(*c.witness) : Json(nullptr);
  if (c.forced_cycle.empty()) {
    j["forced_cycle"] = nullptr;
  } else {
    Json cycle = Json::array();
    for (const CycleEdge& e : c.forced_cycle) {
      const Step& st = c.derivation[e.step];
      cycle.push_back({{"axiom", rule_name(st.rule)},
                       {"left", s[e.from].name()},
                       {"right", s[e.to].name()},
                       {"pivot", pivot_json(st.pivot)},
                       {"rel", to_string(e.rel)},
                       {"step", e.step}});
    }
    j["forced_cycle"] = cycle;
  }
  Json derivation = Json::array();
  for (const Step& st : c.derivation) {
    Json step{{"rule", rule_name(st.rule)},
              {"left", s[st.left].name()},
              {"right", s[st.right].name()},
              {"rel", to_string(st.rel)},
              {"pivot", pivot_json(st.pivot)},
              {"premises", st.premises}};
    if (st.permutation) {
      std::vector<std::size_t> one_based;
      for (std::size_t x : *st.permutation) one_based.push_back(x + 1);
      step["permutation"] = one_based;
    }
    derivation.push_back(step);
  }
  j["derivation"] = derivation;
  Json stats{{"nodes", c.stats.nodes},
             {"pairs", c.stats.pairs},
             {"forced_pairs", c.stats.forced_pairs},
             {"free_pairs", c.stats.pairs - c.stats.forced_pairs}};
  if (with_timing) stats["elapsed_ms"] = c.stats.elapsed_ms;
  j["stats"] = stats;
  return j;
}

Json parse_json_text(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + end, '\n'));
    const std::size_t last_nl = text.substr(0, end).rfind('\n');
    const std::size_t column = end - (last_nl == std::string_view::npos ? 0 : last_nl + 1) + 1;
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": malformed JSON");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  return parse_json_text(text, path);
}

std::shared_ptr<const ProfileSet> parse_profiles(std::string_view text) {
  return profiles_from_json(parse_json_text(text, "<profiles>"));
}

Ranking parse_ranking(std::string_view text, std::shared_ptr<const ProfileSet> s) {
  return ranking_from_json(parse_json_text(text, "<ranking>"), std::move(s));
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string welfare_label(const Welfare& w) { return w.to_string(); }

std::string profile_label(const Profile& p) {
  std::string out = p.name() + " (";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += welfare_label(p[i]);
  }
  return out + ")";
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string emit_dot(const ProfileSet& s, const Ranking& r) {
  std::vector<std::size_t> order(s.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return s[a].name() < s[b].name(); });

  std::ostringstream out;
  out << "digraph ranking {\n";
  for (std::size_t k : order) {
    out << "  " << dot_quote(s[k].name()) << " [label=" << dot_quote(profile_label(s[k])) << "];\n";
  }
  for (std::size_t x = 0; x < order.size(); ++x) {
    for (std::size_t y = x + 1; y < order.size(); ++y) {
      const std::size_t a = order[x];
      const std::size_t b = order[y];
      switch (r.relation(a, b)) {
        case RelValue::LeftStrict:
          out << "  " << dot_quote(s[a].name()) << " -> " << dot_quote(s[b].name()) << ";\n";
          break;
        case RelValue::RightStrict:
          out << "  " << dot_quote(s[b].name()) << " -> " << dot_quote(s[a].name()) << ";\n";
          break;
        case RelValue::Indifferent:
          out << "  " << dot_quote(s[a].name()) << " -> " << dot_quote(s[b].name())
              << " [style=dashed, dir=none];\n";
          break;
        case RelValue::Noncomparable:
          break;
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace pareto
