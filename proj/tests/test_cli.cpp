#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "helpers.hpp"
#include "lotforge/io.hpp"
#include "lotforge/oracle.hpp"

using namespace lotforge;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome run(const std::string& args) {
  std::string cmd = std::string(LOTFORGE_CLI) + " " + args + " 2>/dev/null";
  Outcome r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::temp_directory_path() / ("lotforge_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }

  std::string write(const std::string& name, const std::string& text) {
    auto p = dir / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir;
};

}  // namespace

TEST_F(Cli, SolveTrivialInstance) {
  auto inst = write("toy.json", R"({"rows":2,"cols":2,"entrances":[[0,0]]})");
  Outcome r = run("solve " + inst + " --mode two-way --formulation bnc --time-limit 10");
  ASSERT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j["status"], "Optimal");
  EXPECT_EQ(j["lb"], 0);
  EXPECT_EQ(j["ub"], 0);
  EXPECT_TRUE(j["layout"].is_object());
}

TEST_F(Cli, MalformedInstanceIsAnInputError) {
  auto bad = write("bad.json", "{not json");
  EXPECT_EQ(run("solve " + bad).code, 3);
  auto invalid = write("invalid.json", R"({"rows":2,"cols":2,"entrances":[[9,9]]})");
  EXPECT_EQ(run("solve " + invalid).code, 3);
  EXPECT_EQ(run("solve " + (dir / "missing.json").string()).code, 3);
}

TEST_F(Cli, InfeasibleExitCode) {
  auto inst = write("line.json", R"({"rows":1,"cols":2,"mode":"one-way","entrances":[[0,0]],"exits":[[0,1]]})");
  EXPECT_EQ(run("solve " + inst + " --mode one-way --time-limit 10").code, 2);
}

TEST_F(Cli, SolveValidateRender) {
  auto inst = write("strip.json", R"({"rows":3,"cols":5,"entrances":[[0,0]]})");
  auto res = (dir / "res.json").string();
  ASSERT_EQ(run("solve " + inst + " --formulation flow --time-limit 20 --out " + res).code, 0);
  EXPECT_EQ(run("validate " + inst + " " + res).code, 0);
  Outcome txt = run("render " + res + " --instance " + inst);
  ASSERT_EQ(txt.code, 0);
  EXPECT_EQ(txt.out.substr(0, 1), "E");
  EXPECT_EQ(run("render " + res + " --instance " + inst + " --format png").code, 3);
  // an overlapping layout fails validation
  auto broken = write("broken.json", R"({"park0":[[0,0]],"park90":[],"drive":[[0,0]],"directions":[],"stall_count":1})");
  EXPECT_EQ(run("validate " + inst + " " + broken).code, 1);
}

TEST_F(Cli, OracleAgreesWithSolveOnFourByFourOneWay) {
  std::mt19937_64 rng(8);
  int compared = 0;
  for (int k = 0; k < 100 && compared < 3; ++k) {
    Instance I;
    if (!lotforge::testing::random_one_way(rng, 4, 4, 12, I)) continue;
    auto path = (dir / ("ow" + std::to_string(k) + ".json")).string();
    save_instance(I, path);
    Outcome o = run("oracle " + path);
    Outcome s = run("solve " + path + " --mode one-way --formulation bnc --time-limit 30");
    if (o.code == 2) {
      EXPECT_EQ(s.code, 2);
    } else {
      ASSERT_EQ(o.code, 0);
      ASSERT_EQ(s.code, 0);
      EXPECT_EQ(json::parse(o.out)["optimum"], json::parse(s.out)["lb"]);
    }
    ++compared;
  }
  EXPECT_EQ(compared, 3);
}

TEST_F(Cli, BenchWritesCsv) {
  write("a.json", R"({"rows":2,"cols":4,"entrances":[[0,0]]})");
  write("b.json", R"({"rows":3,"cols":3,"entrances":[[0,0]]})");
  auto manifest = write("m.json", R"({"instances":["a.json","b.json"],"kinds":[{"formulation":"flow"},{"formulation":"bnc"}]})");
  auto csv = (dir / "t.csv").string();
  ASSERT_EQ(run("bench " + manifest + " --budget 10 --out " + csv).code, 0);
  std::ifstream in(csv);
  std::string text((std::istreambuf_iterator<char>(in)), {});
  EXPECT_NE(text.find("instance,a,two-way,flow,I,Optimal"), std::string::npos);
  EXPECT_NE(text.find("instance,b,two-way,bnc,I,Optimal"), std::string::npos);
}

TEST_F(Cli, GenIsDeterministic) {
  Outcome a = run("gen --rows 6 --cols 6 --seed 3");
  Outcome b = run("gen --rows 6 --cols 6 --seed 3");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}
