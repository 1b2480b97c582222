#include <gtest/gtest.h>

#include <sstream>

#include "hadj/cli.hpp"
#include "hadj/context_json.hpp"
#include "hadj/fact_base.hpp"
#include "hadj/schema.hpp"
#include "hadj/tree_enum.hpp"
#include "sample_context.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = hadj::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  const Result r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc.at("command"), args[1]);
  return doc.at("result");
}

}  // namespace

TEST(Cli, Examples) {
  EXPECT_EQ(run({"tree-classes", "5"}).out, "4292864\n");
  const Result parity = run({"parity", "LLL", "RRR"});
  EXPECT_EQ(parity.out, "Nonparity\n");
  EXPECT_EQ(parity.code, 2);
  EXPECT_EQ(run({"parity", "LLR", "RRR"}).out, "Parity\n");
  const Result norm = run({"normalize", "LLR", "RRR"});
  EXPECT_EQ(norm.out, "[1]\n");
  EXPECT_EQ(norm.code, 0);
  EXPECT_EQ(run({"oppose", "RRR", "RLL", "1", "4"}).out, "iioi\n");
  EXPECT_EQ(run({"opbuild", "odd_op", "5"}).out, "oioio\n");
  EXPECT_EQ(run({"interchange", "RRL", "2"}).out, "RLR\n");
  EXPECT_EQ(run({"tree-equiv", "L(L,L)", "R(R,R)"}).out, "equivalent\n[\"\"]\n");
  EXPECT_EQ(run({"tree-equiv", "L(L,R)", "R(R,L)"}).out, "inequivalent\n");
  EXPECT_EQ(run({"schema", "f", "1", "RR"}).out,
            "records: 3\n[] level 1: (f -| f^R, u, c)\n[u] level 2: (u -| u^R, u_u, c_u)\n"
            "[c] level 2: (c -| c^R, u_c, c_c)\n");
}

TEST(Cli, TreeCountsAgreeAcrossMethods) {
  for (const char* n : {"1", "2", "3", "4"}) {
    const std::string brute = run({"tree-brute", n}).out;
    EXPECT_EQ(brute, run({"tree-classes", n}).out);
    EXPECT_EQ(brute, run({"wreath", n}).out);
  }
  EXPECT_EQ(run({"tree-brute", "4"}).out, "2064\n");
}

TEST(Cli, OrbitListing) {
  EXPECT_EQ(run({"tree-brute", "2", "--reps"}).out,
            "6\nL(L,L) 2\nL(L,R) 1\nL(R,L) 1\nL(R,R) 2\nR(L,R) 1\nR(R,L) 1\n");
  const json r = run_json({"tree-brute", "2", "--reps"});
  EXPECT_EQ(r.at("class_count"), "6");
  EXPECT_EQ(r.at("orbit_sizes"), json::parse("[2,1,1,2,1,1]"));
}

TEST(Cli, UsageErrorsExitOne) {
  for (std::vector<std::string> args : std::vector<std::vector<std::string>>{
           {}, {"frobnicate"}, {"parity", "LLL"}, {"parity", "LXL", "RRR"}, {"tree-classes", "x"},
           {"tree-equiv", "R(L,R,R)", "L"}, {"saturate", "/nonexistent.json"}, {"--fuel", "0", "parity", "L", "R"},
           {"opbuild", "weird", "3"}, {"verify-zigzag"}}) {
    const Result r = run(args);
    EXPECT_EQ(r.code, 1) << args.size();
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
  }
}

TEST(Cli, DomainErrorsExitTwo) {
  for (std::vector<std::string> args : std::vector<std::vector<std::string>>{
           {"normalize", "LRR", "RRR"}, {"interchange", "RR", "2"}, {"tree-brute", "5"}, {"wreath", "5"},
           {"--max-n", "3", "tree-brute", "4"}, {"tree-equiv", "R", "R(L,L)"}, {"schema", "f", "2", "RRR", "--dim", "4"},
           {"verify-zigzag", data_file("swapped.json")}, {"compare", data_file("adjunctions.json"), "F", "G"}}) {
    const Result r = run(args);
    EXPECT_EQ(r.code, 2) << args.front();
    EXPECT_FALSE(r.err.empty());
  }
}

TEST(Cli, ContextCommands) {
  const Result compose = run({"compose-adj", data_file("adjunctions.json")});
  EXPECT_EQ(compose.code, 0);
  EXPECT_NE(compose.out.find("left: (hcomp fL gL)\n"), std::string::npos);
  EXPECT_NE(compose.out.find("zigzag: Verified"), std::string::npos);
  const Result verify = run({"verify-zigzag", data_file("adjunctions.json")});
  EXPECT_EQ(verify.code, 0);
  EXPECT_EQ(verify.out.find("NotReduced"), std::string::npos);
  EXPECT_NE(verify.out.find("F2: Verified"), std::string::npos);
  const Result dual = run({"dualize", data_file("adjunctions.json"), "F", "op"});
  EXPECT_NE(dual.out.find("left: f\nright: fL\nunit: uf\ncounit: cf\n"), std::string::npos);
  const Result cmp = run({"compare", data_file("adjunctions.json"), "F", "Fnu"});
  EXPECT_NE(cmp.out.find("normal form: (inv w)\n"), std::string::npos);
  const Result seeded = run({"--seed", "3", "verify-zigzag"});
  EXPECT_EQ(seeded.code, 0);
  EXPECT_EQ(seeded.out.find("NotReduced"), std::string::npos);
}

TEST(Cli, OutputIsDeterministic) {
  for (std::vector<std::string> args : std::vector<std::vector<std::string>>{
           {"tree-brute", "3", "--reps"}, {"--json", "schema", "f", "1", "2", "--full"},
           {"--seed", "11", "verify-zigzag"}, {"saturate", data_file("facts.json")}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

TEST(CliJson, ResultsRoundTrip) {
  const json schema = run_json({"schema", "f", "1", "R(L(R,R),R(L,L))"});
  EXPECT_EQ(hadj::tower_from_json(schema),
            hadj::generate_schema("f", 1, hadj::DexterityTree::parse("R(L(R,R),R(L,L))")));
  const json full = run_json({"schema", "f", "1", "3", "--full"});
  EXPECT_EQ(full.at("records").size(), 42u);
  EXPECT_EQ(hadj::tower_from_json(full), hadj::generate_full_schema("f", 1, 3));

  const json facts = run_json({"saturate", data_file("facts.json")});
  const hadj::FactBase closure = hadj::fact_base_from_json(facts);
  EXPECT_EQ(hadj::saturate(closure), closure);

  EXPECT_EQ(run_json({"normalize", "LLR", "RRR"}), json::parse("[1]"));
  EXPECT_EQ(run_json({"oppose", "RRR", "RLL", "1", "4"}), json::parse(R"(["id","id","op","id"])"));
  EXPECT_EQ(run_json({"tree-classes", "6"}), hadj::class_count_recurrence(6).str());
  const json eq = run_json({"tree-equiv", "L(L,L)", "R(R,R)"});
  EXPECT_EQ(eq.at("equivalent"), true);

  const json verify = run_json({"verify-zigzag", data_file("adjunctions.json")});
  ASSERT_EQ(verify.size(), 5u);
  for (const auto& item : verify) EXPECT_EQ(item.at("outcome"), "Verified");

  const json composed = run_json({"compose-adj", data_file("adjunctions.json")});
  EXPECT_EQ(composed.at("record").at("status"), "verified");
  // The composite record reloads as a context entry.
  json ctx = hadj::to_json(*sample_document().context);
  json rec = composed.at("record");
  rec["name"] = "FG";
  ctx["adjunctions"].push_back(rec);
  const auto reloaded = hadj::load_context(ctx);
  EXPECT_EQ(hadj::verify_zigzag(reloaded.record("FG")).outcome, hadj::ZigzagOutcome::Verified);

  const json dual = run_json({"dualize", data_file("adjunctions.json"), "F", "co"});
  EXPECT_EQ(dual.at("duality"), "co");
  EXPECT_EQ(dual.at("unit"), "cf");
}

TEST(CliJson, ErrorsStayOffStdout) {
  const Result r = run({"--json", "parity", "LLL", "RRR"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json::parse(r.out).at("result"), "Nonparity");
  const Result bad = run({"--json", "tree-brute", "9"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_TRUE(bad.out.empty());
}
