#include <cstdio>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "pareto/cli.hpp"
#include "pareto/io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "pareto_verify");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = pareto::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Cli, TemkinDemo) {
  Result r = run({"demo", "temkin", "--axioms", "extended-pareto,acyclicity"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("u        2  1  ∅"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("u ≻ v ≻ w ≻ u"), std::string::npos);
}

TEST(Cli, SolveMawpFamilyJson) {
  Result r = run({"solve", "--gen", "theorem1", "--n", "2", "--axioms", "mawp,acyclicity", "--format", "json"});
  EXPECT_EQ(r.code, 1);
  auto j = pareto::Json::parse(r.out);
  EXPECT_EQ(j["verdict"], "unsat");
  EXPECT_EQ(j["forced_cycle"].size(), 4u);
  EXPECT_EQ(j["forced_cycle"][0]["pivot"], 2);
  EXPECT_FALSE(j["stats"].contains("elapsed_ms"));
}

TEST(Cli, ExitCodesForControls) {
  EXPECT_EQ(run({"solve", "--gen", "theorem1", "--n", "3", "--axioms", "acyclicity"}).code, 0);
  EXPECT_EQ(run({"solve", "--gen", "theorem2", "--n", "2", "--axioms", "weak-pareto,mapi,indiff-trans"}).code, 1);
  EXPECT_EQ(run({"solve", "--gen", "theorem2", "--n", "2", "--axioms", "weak-pareto,mapi"}).code, 0);
  EXPECT_EQ(run({"solve", "--gen", "theorem1", "--n", "7", "--axioms", "acyclicity"}).code, 3);
}

TEST(Cli, UsageErrors) {
  Result bad = run({"solve", "--gen", "temkin", "--axioms", "acyclicity,pareto"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("weak-anonymity"), std::string::npos);
  EXPECT_EQ(run({"solve", "--gen", "nope", "--axioms", "acyclicity"}).code, 2);
  EXPECT_EQ(run({"solve", "--gen", "temkin"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"solve", "--gen", "temkin", "--axioms", "acyclicity", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"solve", "--gen", "app1", "--axioms", "onc"}).code, 2);
  EXPECT_EQ(run({"demo", "theorem2", "--eps", "0"}).code, 2);
  EXPECT_EQ(run({"solve", "--profiles", "/nonexistent/p.json", "--axioms", "acyclicity"}).code, 2);
}

TEST(Cli, CheckCompliantRanking) {
  const std::string p = temp_file("p.json", R"({"individuals": ["1", "2"], "domain": null,
    "profiles": [{"name": "u", "welfare": ["2", "2"]}, {"name": "v", "welfare": ["1", "1"]}]})");
  const std::string good = temp_file("good.json", R"({"pairs": [{"left": "u", "right": "v", "rel": "left_strict"}]})");
  const std::string bad = temp_file("bad.json", R"({"pairs": [{"left": "u", "right": "v", "rel": "indifferent"}]})");
  EXPECT_EQ(run({"check", "--profiles", p, "--ranking", good, "--axioms", "weak-pareto"}).code, 0);
  Result r = run({"check", "--profiles", p, "--ranking", bad, "--axioms", "weak-pareto"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("weak-pareto: fail"), std::string::npos);
  const std::string broken = temp_file("broken.json", R"({"pairs": [{"left": "u", "right": "v"}]})");
  Result e = run({"check", "--profiles", p, "--ranking", broken, "--axioms", "weak-pareto"});
  EXPECT_EQ(e.code, 2);
  EXPECT_NE(e.err.find("pairs[0]"), std::string::npos);
}

TEST(Cli, RequirementsAndVeto) {
  EXPECT_EQ(run({"solve", "--gen", "temkin", "--axioms", "acyclicity", "--require", "u:v:left_strict", "--require",
                 "v:w:left_strict", "--require", "w:u:left_strict"})
                .code,
            1);
  EXPECT_EQ(run({"solve", "--gen", "temkin", "--axioms", "acyclicity", "--require", "u:q:left_strict"}).code, 2);
  Result t3 = run({"demo", "theorem3"});
  EXPECT_EQ(t3.code, 1);
  EXPECT_NE(t3.out.find("every individual holds a veto"), std::string::npos);
}

TEST(Cli, OtherDemos) {
  Result latin = run({"demo", "latin", "--n", "5", "--format", "json"});
  EXPECT_EQ(latin.code, 0);
  auto j = pareto::Json::parse(latin.out);
  for (const auto& t : j["tallies"]) EXPECT_EQ(t["votes"], 4);
  EXPECT_EQ(run({"demo", "repugnant"}).code, 0);
  EXPECT_EQ(run({"demo", "repugnant", "--variant", "reverse", "--c", "10"}).code, 0);
  for (const char* d : {"theorem1", "theorem2", "app1", "app2", "app3"}) EXPECT_EQ(run({"demo", d}).code, 1) << d;
}

TEST(Cli, AuditAndDot) {
  Result a = run({"audit", "--gen", "theorem1", "--n", "2", "--ordering", "clu", "--c", "0", "--axioms",
                  "mawp,acyclicity"});
  EXPECT_EQ(a.code, 1);
  EXPECT_NE(a.out.find("acyclicity: pass"), std::string::npos);
  EXPECT_NE(a.out.find("mawp: fail"), std::string::npos);
  Result d = run({"dot", "--gen", "temkin"});
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(d.out.rfind("digraph", 0), 0u);
}

TEST(Cli, GenerateRoundTrips) {
  Result g = run({"generate", "--gen", "app1"});
  EXPECT_EQ(g.code, 0);
  const std::string p = temp_file("app1.json", g.out);
  Result s = run({"solve", "--profiles", p, "--axioms", "mawp,acyclicity"});
  EXPECT_EQ(s.code, 1);
}

TEST(Cli, JsonOutputIsByteIdentical) {
  const std::vector<std::vector<std::string>> invocations{
      {"solve", "--gen", "app3", "--axioms", "mawp,acyclicity", "--format", "json"},
      {"solve", "--gen", "theorem1", "--n", "3", "--axioms", "acyclicity,weak-anonymity", "--format", "json"},
      {"demo", "theorem3", "--format", "json"},
      {"audit", "--gen", "temkin", "--axioms", "extended-pareto", "--format", "json"},
  };
  for (const auto& args : invocations) EXPECT_EQ(run(args).out, run(args).out);
}
