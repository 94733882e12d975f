#include "pareto/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "pareto/error.hpp"
#include "pareto/io.hpp"
#include "pareto/orderings.hpp"
#include "pareto/solver.hpp"
#include "pareto/witnesses.hpp"

namespace pareto::cli {
namespace {

struct RunConfig {
  std::string command;
  std::string demo;
  std::string gen;
  std::string profiles_path;
  std::string ranking_path;
  std::string axioms;
  std::optional<std::size_t> n;
  std::string u = "1";
  std::string eps = "1";
  std::string c = "0";
  std::string variant = "weak";
  std::string format = "text";
  std::string ordering;
  std::vector<std::string> require;
  std::optional<std::size_t> veto;
  std::size_t budget = SolverOptions{}.pair_budget;
  std::size_t max_violations = AxiomOptions{}.max_violations;
  bool pivot_weak = false;
  bool timing = false;

  bool json() const { return format == "json"; }
  AxiomOptions axiom_options() const { return {pivot_weak, max_violations}; }
};

struct Generated {
  std::shared_ptr<const ProfileSet> profiles;
  std::optional<WitnessBundle> bundle;
  std::optional<RepugnantDemo> repugnant;
};

const std::vector<std::string> kGenerators = {"temkin", "theorem1", "theorem2", "latin",
                                              "app1",   "app2",     "app3",     "repugnant"};

Rational rational_arg(const std::string& text, const char* flag) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw ArgumentError(std::string(flag) + ": \"" + text + "\" is not a rational number");
  }
}

RepugnantVariant variant_arg(const std::string& v) {
  if (v == "weak") return RepugnantVariant::Weak;
  if (v == "reverse") return RepugnantVariant::Reverse;
  throw ArgumentError("--variant must be weak or reverse");
}

Generated generate(const RunConfig& cfg) {
  const std::string& g = cfg.gen;
  Generated out;
  if (g == "temkin") {
    out.bundle = gen_temkin();
  } else if (g == "theorem1") {
    out.bundle = gen_theorem1(cfg.n.value_or(2));
  } else if (g == "theorem2") {
    out.bundle = gen_theorem2(cfg.n.value_or(2), rational_arg(cfg.u, "--u"), rational_arg(cfg.eps, "--eps"));
  } else if (g == "app1" || g == "app2" || g == "app3") {
    out.bundle = gen_application(g.back() - '0');
  } else if (g == "repugnant") {
    out.repugnant = gen_repugnant_demo(rational_arg(cfg.c, "--c"), variant_arg(cfg.variant));
    out.profiles = out.repugnant->profiles;
    return out;
  } else if (g == "latin") {
    throw ArgumentError("latin produces voting profiles, not welfare profiles; use `demo latin`");
  } else {
    std::string names;
    for (const auto& k : kGenerators) names += (names.empty() ? "" : ", ") + k;
    throw ArgumentError("unknown generator \"" + g + "\"; valid: " + names);
  }
  out.profiles = out.bundle->profiles;
  return out;
}

Generated load(const RunConfig& cfg) {
  if (!cfg.gen.empty() && !cfg.profiles_path.empty()) throw ArgumentError("give either --gen or --profiles, not both");
  if (!cfg.gen.empty()) return generate(cfg);
  if (cfg.profiles_path.empty()) throw ArgumentError("an input is required: --gen NAME or --profiles FILE");
  Generated out;
  out.profiles = profiles_from_json(read_json_file(cfg.profiles_path));
  return out;
}

AxiomSet axioms_arg(const RunConfig& cfg, const std::optional<AxiomSet>& fallback = std::nullopt) {
  if (cfg.axioms.empty()) {
    if (fallback) return *fallback;
    throw ArgumentError("--axioms is required; valid names: " + valid_axiom_names());
  }
  return AxiomSet::parse(cfg.axioms);
}

std::vector<Requirement> requirements(const RunConfig& cfg, const ProfileSet& s) {
  std::vector<Requirement> out;
  for (const std::string& text : cfg.require) {
    const auto last = text.rfind(':');
    const auto first = text.find(':');
    if (last == std::string::npos || first == last) {
      throw ArgumentError("--require expects LEFT:RIGHT:REL, got \"" + text + "\"");
    }
    const std::string left = text.substr(0, first);
    const std::string right = text.substr(first + 1, last - first - 1);
    auto rel = parse_rel(text.substr(last + 1));
    auto a = s.index_of(left);
    auto b = s.index_of(right);
    if (!rel) throw ArgumentError("--require: unknown relation in \"" + text + "\"");
    if (!a || !b) throw ArgumentError("--require: unknown profile in \"" + text + "\"");
    out.push_back({*a, *b, *rel});
  }
  return out;
}

// --- text rendering ---------------------------------------------------------

std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char ch) {
    return (static_cast<unsigned char>(ch) & 0xC0) != 0x80;
  }));
}

std::string pad(const std::string& s, std::size_t width) {
  const std::size_t w = display_width(s);
  return s + std::string(width > w ? width - w : 0, ' ');
}

void print_table(std::ostream& out, const ProfileSet& s) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"profile"};
  for (const auto& name : s.individuals()) header.push_back(name);
  rows.push_back(header);
  for (const Profile& p : s.profiles()) {
    std::vector<std::string> row{p.name()};
    for (const Welfare& w : p.entries()) row.push_back(welfare_label(w));
    rows.push_back(row);
  }
  std::vector<std::size_t> widths(header.size(), 0);
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) widths[k] = std::max(widths[k], display_width(row[k]));
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t k = 0; k < row.size(); ++k) line += pad(row[k], widths[k] + 2);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
}

std::string chain_text(const ProfileSet& s, const std::vector<CycleEdge>& edges) {
  if (edges.empty()) return "";
  std::string text;
  for (const CycleEdge& e : edges) text += s[e.from].name() + " " + symbol(e.rel) + " ";
  return text + s[edges.back().to].name();
}

std::string pivot_text(const std::optional<std::size_t>& p) {
  return p ? "  pivot " + std::to_string(*p + 1) : "";
}

void print_certificate(std::ostream& out, const Query& q, const Certificate& c, bool timing) {
  const ProfileSet& s = *q.profiles;
  out << "verdict: " << to_string(c.verdict);
  if (c.verdict == Verdict::Unsat) out << " (" << to_string(c.conflict) << ")";
  out << '\n';
  if (c.conflict == ConflictKind::PairClash) {
    const CycleEdge& a = c.forced_cycle[0];
    const CycleEdge& b = c.forced_cycle[1];
    out << "clash: " << s[a.from].name() << ' ' << symbol(a.rel) << ' ' << s[a.to].name() << " and "
        << s[b.from].name() << ' ' << symbol(b.rel) << ' ' << s[b.to].name() << '\n';
  } else if (!c.forced_cycle.empty()) {
    out << "forced cycle: " << chain_text(s, c.forced_cycle) << '\n';
  }
  for (const CycleEdge& e : c.forced_cycle) {
    const Step& st = c.derivation[e.step];
    out << "  " << s[e.from].name() << ' ' << symbol(e.rel) << ' ' << s[e.to].name() << "  by "
        << rule_name(st.rule) << pivot_text(st.pivot) << '\n';
  }
  if (c.witness) {
    out << "witness:\n";
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t b = a + 1; b < s.size(); ++b) {
        out << "  " << s[a].name() << ' ' << symbol(c.witness->relation(a, b)) << ' ' << s[b].name() << '\n';
      }
    }
  }
  if (!c.derivation.empty()) out << "derivation: " << c.derivation.size() << " steps\n";
  out << "stats: nodes " << c.stats.nodes << ", pairs " << c.stats.pairs << ", forced " << c.stats.forced_pairs;
  if (timing) out << ", elapsed " << c.stats.elapsed_ms << " ms";
  out << '\n';
}

void print_report(std::ostream& out, const AxiomReport& r, const ProfileSet& s) {
  (void)s;
  out << axiom_name(r.axiom) << ": " << (r.holds ? "pass" : "fail");
  if (!r.holds) out << " (" << r.violation_count << " violation" << (r.violation_count == 1 ? "" : "s") << ")";
  out << '\n';
  for (const Violation& v : r.violations) {
    out << "  [";
    for (std::size_t k = 0; k < v.profiles.size(); ++k) out << (k ? ", " : "") << v.profiles[k];
    out << "] " << v.explanation << '\n';
  }
}

int verdict_code(const Certificate& c) { return c.verdict == Verdict::Sat ? kPass : kFail; }

Json edges_json(const WitnessBundle& b) {
  Json edges = Json::array();
  for (const WitnessEdge& e : b.edges) {
    edges.push_back({{"left", e.left},
                     {"right", e.right},
                     {"axiom", axiom_name(e.axiom)},
                     {"rel", to_string(e.forced)},
                     {"pivot", e.pivot ? Json(*e.pivot + 1) : Json(nullptr)}});
  }
  return edges;
}

// --- commands ---------------------------------------------------------------

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  Generated g = load(cfg);
  Query q{g.profiles, axioms_arg(cfg), requirements(cfg, *g.profiles), cfg.axiom_options()};
  Certificate c = solve(q, SolverOptions{cfg.budget});
  if (cfg.json()) {
    out << dump(certificate_to_json(q, c, cfg.timing));
  } else {
    print_certificate(out, q, c, cfg.timing);
  }
  return verdict_code(c);
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  Generated g = load(cfg);
  if (cfg.ranking_path.empty()) throw ArgumentError("check needs --ranking FILE");
  Ranking r = ranking_from_json(read_json_file(cfg.ranking_path), g.profiles);
  std::vector<AxiomReport> reports;
  if (!cfg.axioms.empty() || !cfg.veto) reports = check_all(axioms_arg(cfg), r, cfg.axiom_options());
  if (cfg.veto) {
    if (*cfg.veto == 0 || *cfg.veto > g.profiles->population()) {
      throw ArgumentError("--veto takes an individual number from 1 to " + std::to_string(g.profiles->population()));
    }
    reports.push_back(check_veto(r, *cfg.veto - 1, cfg.axiom_options()));
  }
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const AxiomReport& x) { return x.holds; });
  if (cfg.json()) {
    Json j{{"verdict", ok ? "pass" : "fail"}, {"reports", Json::array()}};
    for (const AxiomReport& x : reports) j["reports"].push_back(report_to_json(x));
    out << dump(j);
  } else {
    for (const AxiomReport& x : reports) print_report(out, x, *g.profiles);
    out << "verdict: " << (ok ? "pass" : "fail") << '\n';
  }
  return ok ? kPass : kFail;
}

Ordering ordering_arg(const RunConfig& cfg) {
  const std::string kind = cfg.ordering.empty() ? "clu" : cfg.ordering;
  if (kind == "clu") return Ordering::clu(rational_arg(cfg.c, "--c"));
  if (kind == "total") return Ordering::total();
  if (kind == "average") return Ordering::average();
  throw ArgumentError("--ordering must be clu, total or average");
}

int cmd_audit(const RunConfig& cfg, std::ostream& out) {
  Generated g = load(cfg);
  const Ordering o = ordering_arg(cfg);
  AuditResult a = audit(g.profiles, o, axioms_arg(cfg), cfg.axiom_options());
  const ProfileSet& s = *g.profiles;
  if (cfg.json()) {
    Json values = Json::array();
    for (const Profile& p : s.profiles()) {
      values.push_back({{"name", p.name()}, {"value", ordering_value(p, o).str()}});
    }
    Json j{{"ordering", o.name()},
           {"verdict", a.all_hold() ? "pass" : "fail"},
           {"values", values},
           {"ranking", ranking_to_json(a.ranking)},
           {"reports", Json::array()}};
    for (const AxiomReport& r : a.reports) j["reports"].push_back(report_to_json(r));
    out << dump(j);
  } else {
    out << "ordering: " << o.name() << '\n';
    for (const Profile& p : s.profiles()) out << "  " << p.name() << " = " << ordering_value(p, o).str() << '\n';
    for (const AxiomReport& r : a.reports) print_report(out, r, s);
    out << "verdict: " << (a.all_hold() ? "pass" : "fail") << '\n';
  }
  return a.all_hold() ? kPass : kFail;
}

int cmd_dot(const RunConfig& cfg, std::ostream& out) {
  Generated g = load(cfg);
  const std::shared_ptr<const ProfileSet>& s = g.profiles;
  Ranking r(s);
  if (!cfg.ranking_path.empty()) {
    r = ranking_from_json(read_json_file(cfg.ranking_path), s);
  } else if (!cfg.ordering.empty()) {
    r = rank_profiles(s, ordering_arg(cfg));
  } else if (!cfg.axioms.empty()) {
    PropagationResult p = propagate(Query{s, axioms_arg(cfg), requirements(cfg, *s), cfg.axiom_options()});
    for (std::size_t a = 0; a < s->size(); ++a) {
      for (std::size_t b = a + 1; b < s->size(); ++b) {
        if (auto rel = p.relation(a, b)) r.set(a, b, *rel);
      }
    }
  } else if (g.bundle) {
    r = g.bundle->forced_ranking(cfg.axiom_options());
  }
  out << emit_dot(*s, r);
  return kPass;
}

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
  if (cfg.gen.empty()) throw ArgumentError("generate needs --gen NAME");
  out << dump(profiles_to_json(*generate(cfg).profiles));
  return kPass;
}

int demo_bundle(const RunConfig& cfg, const WitnessBundle& b, std::ostream& out) {
  Query q{b.profiles, axioms_arg(cfg, b.contradicts), {}, cfg.axiom_options()};
  Certificate c = solve(q, SolverOptions{cfg.budget});
  if (cfg.json()) {
    Json j{{"demo", cfg.demo},
           {"axioms", q.axioms.str()},
           {"profiles", profiles_to_json(*b.profiles)},
           {"expected_cycle", b.expected_cycle},
           {"edges", edges_json(b)},
           {"certificate", certificate_to_json(q, c, cfg.timing)}};
    out << dump(j);
    return verdict_code(c);
  }
  print_table(out, *b.profiles);
  out << '\n' << "axioms: " << q.axioms.str() << '\n';
  out << "witness edges:\n";
  for (const WitnessEdge& e : b.edges) {
    out << "  " << e.left << ' ' << symbol(e.forced) << ' ' << e.right << "  by " << axiom_name(e.axiom)
        << pivot_text(e.pivot) << '\n';
  }
  print_certificate(out, q, c, cfg.timing);
  return verdict_code(c);
}

int demo_latin(const RunConfig& cfg, std::ostream& out) {
  const std::size_t n = cfg.n.value_or(3);
  VotingProfile vp = gen_latin_square(n);
  auto cycle = supermajority_cycle(vp, n - 1);
  Json tallies = Json::array();
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t a = k;
    const std::size_t b = (k + 1) % n;
    tallies.push_back({{"winner", vp.alternatives[a]}, {"loser", vp.alternatives[b]}, {"votes", tally(vp, a, b)}});
  }
  if (cfg.json()) {
    Json rankings = Json::array();
    for (const auto& r : vp.rankings) {
      Json row = Json::array();
      for (std::size_t x : r) row.push_back(vp.alternatives[x]);
      rankings.push_back(row);
    }
    Json cyc = nullptr;
    if (cycle) {
      cyc = Json::array();
      for (std::size_t x : *cycle) cyc.push_back(vp.alternatives[x]);
    }
    out << dump(Json{{"demo", "latin"},
                     {"n", n},
                     {"threshold", n - 1},
                     {"voters", vp.voters},
                     {"rankings", rankings},
                     {"tallies", tallies},
                     {"cycle", cyc}});
  } else {
    for (std::size_t v = 0; v < vp.voters.size(); ++v) {
      out << vp.voters[v] << ':';
      for (std::size_t k = 0; k < vp.rankings[v].size(); ++k) {
        out << (k ? " ≻ " : " ") << vp.alternatives[vp.rankings[v][k]];
      }
      out << '\n';
    }
    for (const auto& t : tallies) {
      out << "  " << t["winner"].get<std::string>() << " beats " << t["loser"].get<std::string>() << ": "
          << t["votes"].get<std::size_t>() << " of " << n << '\n';
    }
    if (cycle) {
      out << "cycle at threshold " << n - 1 << ':';
      for (std::size_t x : *cycle) out << ' ' << vp.alternatives[x] << " ≻";
      out << ' ' << vp.alternatives[cycle->front()] << '\n';
    } else {
      out << "no cycle at threshold " << n - 1 << '\n';
    }
  }
  return cycle ? kPass : kFail;
}

int demo_repugnant(const RunConfig& cfg, std::ostream& out) {
  RepugnantDemo d = gen_repugnant_demo(rational_arg(cfg.c, "--c"), variant_arg(cfg.variant));
  Ranking r = rank_profiles(d.profiles, Ordering::clu(d.critical_level));
  const RelValue got = r.relation(0, 1);
  const bool ok = got == d.expected;
  const ProfileSet& s = *d.profiles;
  if (cfg.json()) {
    out << dump(Json{{"demo", "repugnant"},
                     {"variant", cfg.variant},
                     {"critical_level", d.critical_level.str()},
                     {"params",
                      {{"delta", d.params.delta.str()},
                       {"crowd", d.params.crowd},
                       {"elite", d.params.elite},
                       {"high", d.params.high.str()}}},
                     {"population", s.population()},
                     {"left", s[0].name()},
                     {"right", s[1].name()},
                     {"left_value", d.crowd_value.str()},
                     {"right_value", d.other_value.str()},
                     {"expected", to_string(d.expected)},
                     {"ranked", to_string(got)}});
  } else {
    out << "critical level " << d.critical_level.str() << ", population " << s.population() << '\n';
    out << "  " << s[0].name() << ": value " << d.crowd_value.str() << '\n';
    out << "  " << s[1].name() << ": value " << d.other_value.str() << '\n';
    out << "clu(" << d.critical_level.str() << "): " << s[0].name() << ' ' << symbol(got) << ' ' << s[1].name()
        << (ok ? "" : "  (unexpected)") << '\n';
  }
  return ok ? kPass : kFail;
}

int demo_theorem3(const RunConfig& cfg, std::ostream& out) {
  const AxiomSet axioms = axioms_arg(
      cfg, AxiomSet{Axiom::WeakAnonymity, Axiom::OrdinalNoncomparability, Axiom::Acyclicity});
  Theorem3Report rep = verify_theorem3(cfg.n.value_or(2), axioms, SolverOptions{cfg.budget});
  if (cfg.json()) {
    Json queries = Json::array();
    for (const VetoQuery& vq : rep.queries) {
      queries.push_back({{"individual", vq.individual + 1},
                         {"absent_in_left", {vq.absent_in_left.first, vq.absent_in_left.second}},
                         {"absent_in_right", {vq.absent_in_right.first, vq.absent_in_right.second}},
                         {"verdict", to_string(vq.certificate.verdict)},
                         {"conflict", to_string(vq.certificate.conflict)}});
    }
    out << dump(Json{{"demo", "theorem3"},
                     {"n", rep.n},
                     {"axioms", axioms.str()},
                     {"family_size", rep.family->size()},
                     {"queries", queries},
                     {"sat_count", rep.sat_count()}});
  } else {
    out << "family: " << rep.family->size() << " profiles, axioms: " << axioms.str() << '\n';
    for (const VetoQuery& vq : rep.queries) {
      out << "  individual " << vq.individual + 1 << ": override on (" << vq.absent_in_left.first << ", "
          << vq.absent_in_left.second << ") and (" << vq.absent_in_right.first << ", "
          << vq.absent_in_right.second << "): " << to_string(vq.certificate.verdict) << '\n';
    }
    out << (rep.all_unsat() ? "every individual holds a veto" : "some override is consistent") << '\n';
  }
  return rep.all_unsat() ? kFail : kPass;
}

int cmd_demo(RunConfig cfg, std::ostream& out) {
  const std::string& d = cfg.demo;
  if (d == "latin") return demo_latin(cfg, out);
  if (d == "repugnant") return demo_repugnant(cfg, out);
  if (d == "theorem3") return demo_theorem3(cfg, out);
  cfg.gen = d;
  Generated g = generate(cfg);
  return demo_bundle(cfg, *g.bundle, out);
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--axioms", cfg.axioms, "comma list: " + valid_axiom_names());
  sub->add_flag("--pivot-weak", cfg.pivot_weak, "read the almost-Pareto pivot as \"not better\"");
  sub->add_option("--max-violations", cfg.max_violations, "violations listed per axiom");
}

void add_generator(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--n", cfg.n, "family size parameter");
  sub->add_option("--u", cfg.u, "base level");
  sub->add_option("--eps", cfg.eps, "increment");
  sub->add_option("--c", cfg.c, "critical level");
  sub->add_option("--variant", cfg.variant, "weak or reverse");
}

void add_input(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--gen", cfg.gen, "generator name");
  sub->add_option("--profiles", cfg.profiles_path, "profiles JSON file");
  add_generator(sub, cfg);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Checks Pareto-style axioms for social rankings over variable populations."};
  app.name("pareto_verify");
  app.require_subcommand(1);

  auto* demo = app.add_subcommand("demo", "run a named witness family end to end");
  demo->add_option("name", cfg.demo, "temkin, theorem1, theorem2, theorem3, latin, app1, app2, app3, repugnant")
      ->required();
  add_common(demo, cfg);
  add_generator(demo, cfg);
  demo->add_option("--budget", cfg.budget, "maximum open pairs for search");
  demo->add_flag("--timing", cfg.timing, "report elapsed time");

  auto* solve_cmd = app.add_subcommand("solve", "decide whether any ranking satisfies the axioms");
  add_common(solve_cmd, cfg);
  add_input(solve_cmd, cfg);
  solve_cmd->add_option("--require", cfg.require, "extra constraint LEFT:RIGHT:REL (repeatable)");
  solve_cmd->add_option("--budget", cfg.budget, "maximum open pairs for search");
  solve_cmd->add_flag("--timing", cfg.timing, "report elapsed time");

  auto* check_cmd = app.add_subcommand("check", "check a ranking against axioms");
  add_common(check_cmd, cfg);
  add_input(check_cmd, cfg);
  check_cmd->add_option("--ranking", cfg.ranking_path, "ranking JSON file");
  check_cmd->add_option("--veto", cfg.veto, "also check that individual J (1-based) holds a veto");

  auto* audit_cmd = app.add_subcommand("audit", "audit a utilitarian ordering");
  add_common(audit_cmd, cfg);
  add_input(audit_cmd, cfg);
  audit_cmd->add_option("--ordering", cfg.ordering, "clu, total or average");

  auto* dot_cmd = app.add_subcommand("dot", "emit a Graphviz graph of a ranking");
  add_common(dot_cmd, cfg);
  add_input(dot_cmd, cfg);
  dot_cmd->add_option("--ranking", cfg.ranking_path, "ranking JSON file");
  dot_cmd->add_option("--ordering", cfg.ordering, "rank by clu, total or average instead");
  dot_cmd->add_option("--require", cfg.require, "extra constraint LEFT:RIGHT:REL (repeatable)");

  auto* gen_cmd = app.add_subcommand("generate", "write a generated profile set as JSON");
  gen_cmd->add_option("--gen", cfg.gen, "generator name")->required();
  add_generator(gen_cmd, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (demo->parsed()) return cmd_demo(cfg, out);
    if (solve_cmd->parsed()) return cmd_solve(cfg, out);
    if (check_cmd->parsed()) return cmd_check(cfg, out);
    if (audit_cmd->parsed()) return cmd_audit(cfg, out);
    if (dot_cmd->parsed()) return cmd_dot(cfg, out);
    if (gen_cmd->parsed()) return cmd_generate(cfg, out);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace pareto::cli
