#include "abduction/cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "abduction/instance_io.h"

namespace abduction {
namespace {

const std::string kFixtures = ABDUCTION_FIXTURES;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "abduce");
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

std::vector<std::string> fixture_files() {
  std::vector<std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(kFixtures)) {
    if (entry.path().extension() == ".abd") files.push_back(entry.path().string());
  }
  std::sort(files.begin(), files.end());
  return files;
}

TEST(CliTest, Examples) {
  EXPECT_EQ(run({"solve", fixture("tex.abd"), "--ordering", "card", "--query", "relevant",
                 "--var", "p"})
                .code,
            kExitYes);
  EXPECT_EQ(run({"solve", fixture("tex_penalty.abd"), "--ordering", "penalty", "--query",
                 "necessary", "--var", "v"})
                .code,
            kExitYes);
  const CliRun check = run({"check", fixture("tex.abd"), "--lemma", "basic"});
  EXPECT_EQ(check.code, kExitSuccess) << check.out;
  EXPECT_EQ(run({"solve", fixture("tex.abd"), "--ordering", "subset", "--query", "verify",
                 "--set", "a,v"})
                .code,
            kExitNo);
  EXPECT_EQ(run({"solve", fixture("candidate.abd"), "--ordering", "none", "--query", "verify"})
                .code,
            kExitYes);
}

TEST(CliTest, JsonMatchesExitCode) {
  for (const std::string& q : {"exists", "relevant", "necessary", "dispensable"}) {
    const CliRun r = run({"solve", fixture("tex.abd"), "--ordering", "card", "--query", q, "--var",
                       "a", "--json"});
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(r.code, j["answer"].get<bool>() ? kExitYes : kExitNo) << q;
    EXPECT_TRUE(j["stats"].contains("engine_calls"));
    EXPECT_TRUE(j["stats"].contains("subsets"));
  }
  const CliRun e = run({"solve", fixture("tex.abd"), "--ordering", "card", "--query", "enumerate",
                     "--json"});
  EXPECT_EQ(e.code, kExitSuccess);
  EXPECT_EQ(nlohmann::json::parse(e.out)["explanations"],
            nlohmann::json::parse(R"([["a"],["p"],["t"],["v"]])"));
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"solve", fixture("tex.abd"), "--query", "bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"solve", fixture("tex.abd"), "--query", "relevant"}).code, kExitUsage);
  EXPECT_EQ(run({"solve", fixture("tex.abd"), "--query", "relevant", "--var", "zz"}).code,
            kExitUsage);
  EXPECT_EQ(run({"solve", fixture("nosol.abd"), "--query", "exists"}).code, kExitNo);
  EXPECT_EQ(run({"solve", fixture("tex.abd"), "--query", "enumerate", "--max-explanations",
                 "2"})
                .code,
            kExitCap);
  EXPECT_EQ(run({"--help"}).code, kExitSuccess);

  const std::string bad = (std::filesystem::temp_directory_path() / "abduce_bad.abd").string();
  write_text_file(bad, "p abd 2\nh 1 1 0\n-1 2 0\n");
  const CliRun parse = run({"solve", bad, "--query", "exists"});
  EXPECT_EQ(parse.code, kExitParse);
  EXPECT_NE(parse.err.find("no manifestation line"), std::string::npos);
  std::filesystem::remove(bad);
}

TEST(CliTest, ReduceWritesParsableOutput) {
  const std::string out = (std::filesystem::temp_directory_path() / "abduce_fof.abd").string();
  EXPECT_EQ(run({"reduce", fixture("tex_prio.abd"), "--transform", "first-of-first", "--var",
                 "p", "-o", out})
                .code,
            kExitSuccess);
  const auto reduced = read_instance_file(out);
  EXPECT_EQ(reduced.classes.size(), 3u);
  EXPECT_EQ(run({"solve", out, "--ordering", "prio-subset", "--query", "relevant", "--var",
                 "t_2"})
                .code,
            kExitYes);
  std::filesystem::remove(out);

  const CliRun i = run({"reduce", fixture("tiny.abd"), "--transform", "i"});
  EXPECT_EQ(i.code, kExitSuccess);
  EXPECT_NE(i.out.find("c map forced"), std::string::npos);
  EXPECT_EQ(run({"reduce", fixture("tex.abd"), "--transform", "dh-replicate"}).code,
            kExitUsage);
}

TEST(CliTest, CheckFailureExitCode) {
  const CliRun r = run({"check", fixture("tiny.abd"), "--lemma", "first-of-first"});
  EXPECT_EQ(r.code, kExitCheckFailed);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

// Solver and oracle answer every fixture the same way.
TEST(CliProperty, SolveAgreesWithOracleOnFixtures) {
  for (const std::string& file : fixture_files()) {
    const auto inst = read_instance_file(file);
    for (const std::string& ord :
         {"none", "subset", "card", "prio-subset", "prio-card", "penalty"}) {
      std::vector<std::vector<std::string>> queries = {{"exists"}, {"enumerate"}};
      for (Var h : inst.hypotheses()) {
        for (const std::string& q : {"relevant", "necessary", "dispensable"}) {
          queries.push_back({q, "--var", inst.label(h)});
        }
        queries.push_back({"verify", "--set", inst.label(h)});
      }
      for (const auto& q : queries) {
        std::vector<std::string> args = {file, "--ordering", ord, "--json", "--query"};
        args.insert(args.end(), q.begin(), q.end());
        std::vector<std::string> s = args, o = args;
        s.insert(s.begin(), "solve");
        o.insert(o.begin(), "oracle");
        const CliRun a = run(s), b = run(o);
        EXPECT_EQ(a.code, b.code) << file << " " << ord << " " << q[0];
        if (a.code == kExitYes || a.code == kExitNo) {
          EXPECT_EQ(nlohmann::json::parse(a.out)["answer"],
                    nlohmann::json::parse(b.out)["answer"]);
        }
        if (q[0] == "enumerate" && a.code == kExitSuccess) {
          EXPECT_EQ(nlohmann::json::parse(a.out)["explanations"],
                    nlohmann::json::parse(b.out)["explanations"])
              << file << " " << ord;
        }
      }
    }
  }
}

}  // namespace
}  // namespace abduction
