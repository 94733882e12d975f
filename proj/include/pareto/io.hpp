#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "json.hpp"
#include "pareto/axioms.hpp"
#include "pareto/solver.hpp"
#include "pareto/welfare.hpp"

namespace pareto {

using Json = nlohmann::ordered_json;

// Profiles file:
//   {"individuals": [...], "domain": null | {"outcomes": [...], "strict_pairs": [[a, b], ...]},
//    "profiles": [{"name": "u", "welfare": ["2", "1/2", null]}, ...]}
// Levels are "p" or "p/q" strings (decimals and JSON integers are accepted on
// input), outcomes are ids of the inline domain, Absent is null.
Json profiles_to_json(const ProfileSet& s);
std::shared_ptr<const ProfileSet> profiles_from_json(const Json& j);

// Ranking file: {"pairs": [{"left", "right", "rel"}, ...]} covering every pair.
Json ranking_to_json(const Ranking& r);
Ranking ranking_from_json(const Json& j, std::shared_ptr<const ProfileSet> s);

Json certificate_to_json(const Query& q, const Certificate& c, bool with_timing = false);
Json report_to_json(const AxiomReport& r);

// Parses JSON text; syntax errors become ParseError with line and column.
Json parse_json_text(std::string_view text, const std::string& source);
// Reads and parses a file; ArgumentError when it cannot be opened.
Json read_json_file(const std::string& path);

std::shared_ptr<const ProfileSet> parse_profiles(std::string_view text);
Ranking parse_ranking(std::string_view text, std::shared_ptr<const ProfileSet> s);

// Two-space indented, newline terminated.
std::string dump(const Json& j);

std::string welfare_label(const Welfare& w);
std::string profile_label(const Profile& p);  // "u (2, 1, ∅)"

// Nodes in name order; strict edges solid, indifference dashed and undirected.
std::string emit_dot(const ProfileSet& s, const Ranking& r);

}  // namespace pareto
