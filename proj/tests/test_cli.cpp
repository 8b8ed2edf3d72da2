#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(BRACKETLAB_TEST_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (const auto n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string corpus(const std::string& rel) { return std::string(BRACKETLAB_TEST_CORPUS_DIR) + "/" + rel; }

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, VerifyCommands) {
  auto r = run("verify-biquandle " + corpus("biquandles/flip2.json"));
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(parse(r)["valid"].get<bool>());

  r = run("verify-biquandle " + corpus("biquandles/three_element_printed.json"));
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(parse(r)["failures"][0]["axiom"], "i");

  EXPECT_EQ(run("verify-bracket " + corpus("brackets/gf8_flip.json")).status, 0);
  EXPECT_EQ(run("verify-bracket --literal-axioms " + corpus("brackets/gf8_flip.json")).status, 0);
  EXPECT_EQ(run("verify-bracket " + corpus("brackets/gf8_perturbed.json")).status, 1);
  EXPECT_EQ(run("verify-cocycle " + corpus("cocycles/flip_ab.json")).status, 0);
  EXPECT_EQ(run("verify-cocycle " + corpus("cocycles/flip_broken.json")).status, 1);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run("verify-biquandle /nonexistent.json").status, 2);
  EXPECT_EQ(run("no-such-command").status, 2);
  EXPECT_EQ(run("").status, 2);
  const std::string bad = ::testing::TempDir() + "/bad.json";
  std::ofstream(bad) << "{not json";
  const auto r = run("verify-biquandle " + bad);
  EXPECT_EQ(r.status, 2);
  EXPECT_EQ(parse(r)["error"], "input");
  EXPECT_EQ(run("bh " + corpus("brackets/gf8_flip.json") + " " + corpus("diagrams/trefoil.json") + " --x0 5").status, 2);
  EXPECT_EQ(run("bh " + corpus("brackets/gf8_flip.json") + " " + corpus("diagrams/trefoil.json") + " --coloring 1,2").status, 2);
}

TEST(Cli, InvalidBracketForComputationExitsOne) {
  const auto r = run("bracket-value " + corpus("brackets/gf8_perturbed.json") + " " + corpus("diagrams/trefoil.json"));
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(parse(r)["error"], "verification");
}

TEST(Cli, ComputationCommands) {
  const auto gf8 = corpus("brackets/gf8_flip.json");
  const auto trefoil = corpus("diagrams/trefoil.json");
  auto r = run("colorings " + corpus("biquandles/flip2.json") + " " + corpus("diagrams/hopf.json"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(parse(r)["count"], 4);
  // Bracket files carry their biquandle and work here too.
  EXPECT_EQ(parse(run("colorings " + gf8 + " " + trefoil))["count"], 2);

  r = run("bracket-value " + gf8 + " " + trefoil);
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(parse(r)["values"].size(), 2u);
  EXPECT_EQ(run("bracket-invariant " + gf8 + " " + trefoil).status, 0);
  EXPECT_EQ(run("canonical-cocycle " + gf8 + " --x0 2").status, 0);
  EXPECT_EQ(run("z-invariant " + gf8 + " " + trefoil).status, 0);
  EXPECT_EQ(run("bh " + gf8 + " " + trefoil).status, 0);
  EXPECT_EQ(run("check-theorem " + gf8 + " " + trefoil).status, 0);
  EXPECT_EQ(run("check-euler " + corpus("brackets/z9_flip.json") + " " + trefoil).status, 0);

  r = run("khovanov " + trefoil);
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(parse(r)["entries"].size(), 5u);
}

TEST(Cli, SingleColoring) {
  const auto r = run("bracket-value " + corpus("brackets/gf8_flip.json") + " " + corpus("diagrams/hopf.json") +
                     " --coloring 1,1,2,2");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(parse(r)["values"].size(), 1u);
}

TEST(Cli, PrettyOutputIsATable) {
  const auto r = run("khovanov " + corpus("diagrams/trefoil.json") + " --pretty");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("degree"), std::string::npos);
  EXPECT_NE(r.out.find("------"), std::string::npos);
  EXPECT_EQ(run("khovanov " + corpus("diagrams/trefoil.json") + " --pretty --json").status, 2);
}

TEST(Cli, CheckAll) {
  auto r = run("check-all");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(parse(r)["passed"].get<bool>());
  r = run("check-all --manifest " + corpus("manifest.json"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(parse(r)["failed"], 0);
}

TEST(Cli, FromBraid) {
  const auto r = run("from-braid --strands 2 --word 1,1,1");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(parse(r)["crossings"].size(), 3u);
}
