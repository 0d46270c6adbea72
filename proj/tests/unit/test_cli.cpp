#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <nlohmann/json.hpp>

#include "ptrforge/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int rc;
  std::string out;
  std::string err;
};

Run run(const std::string& args) {
  const auto err_path = fs::temp_directory_path() / ("ptrforge-cli-stderr-" + std::to_string(getpid()) + ".txt");
  const std::string cmd = std::string("PTRFORGE_DATA_DIR='") + PTRFORGE_TEST_DATA_DIR + "' '" + PTRFORGE_CLI + "' " + args +
                          " 2>'" + err_path.string() + "'";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  char buf[4096];
  while (const auto n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  Run r{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ptrforge::read_file(err_path)};
  fs::remove(err_path);
  return r;
}

nlohmann::json run_json(const std::string& args, int expected_rc = 0) {
  const auto r = run(args);
  EXPECT_EQ(r.rc, expected_rc) << args << "\n" << r.err;
  return nlohmann::json::parse(r.out);
}

fs::path scratch(const std::string& name) {
  return fs::temp_directory_path() / ("ptrforge-cli-" + std::to_string(getpid()) + "-" + name);
}

}  // namespace

TEST(CliTest, PlaneBuildGolden) {
  const auto r = run("plane build --field 2,1");
  EXPECT_EQ(r.rc, 0);
  EXPECT_EQ(r.out,
            "{\"order\": 2, \"points\": 7, \"lines\": [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], "
            "[2, 4, 5]]}\n");
}

TEST(CliTest, BuildThenValidate) {
  const auto path = scratch("pg-2-5.json");
  EXPECT_EQ(run("plane build --field 5,1 --out '" + path.string() + "'").rc, 0);
  const auto v = run_json("plane validate --in '" + path.string() + "'");
  EXPECT_EQ(v["valid"], true);
  EXPECT_EQ(v["order"], 5);
  EXPECT_EQ(run_json("plane desargues --in '" + path.string() + "'")["desarguesian"], true);
  fs::remove(path);
}

TEST(CliTest, ValidateReportsAxiomViolation) {
  const auto path = scratch("bad-plane.json");
  ptrforge::write_file(path,
                       "{\"order\": 2, \"points\": 7, \"lines\": [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], "
                       "[2, 3, 6], [2, 4, 6]]}");
  const auto v = run_json("plane validate --in '" + path.string() + "'", 1);
  EXPECT_EQ(v["valid"], false);
  EXPECT_EQ(v["error"], "AxiomViolation");
  EXPECT_FALSE(v["witness"].empty());
  fs::remove(path);
}

TEST(CliTest, CoordinatiseDesarguesian) {
  const auto j = run_json("coordinatise --in catalog:pg-2-3");
  EXPECT_EQ(j["polynomial"], "X*Y + Z");
  EXPECT_EQ(j["t_equals_xy_plus_z"], true);
  EXPECT_EQ(j["note"], "T = XY + Z");
  EXPECT_EQ(j["linear"], true);
  for (const auto* mode : {"add", "mul"}) {
    const auto o = run_json(std::string("coordinatise --in catalog:pg-2-4 --optimal ") + mode);
    EXPECT_EQ(o["t_equals_xy_plus_z"], true) << mode;
  }
}

TEST(CliTest, CoordinatiseNearfieldErrors) {
  const auto j = run_json("coordinatise --in catalog:hall-9 --optimal mul", 1);
  EXPECT_EQ(j["error"], "GroupNotCyclic");
  const auto r = run("coordinatise --in catalog:pg-2-3 --quadrangle 0,1,2,3");
  EXPECT_EQ(r.rc, 2);
  EXPECT_NE(r.err.find("NotQuadrangle"), std::string::npos);
}

TEST(CliTest, FanoQueries) {
  EXPECT_EQ(run_json("fano find --in catalog:pg-2-9")["result"], "none");
  const auto f = run_json("fano find --in catalog:pg-2-4");
  EXPECT_EQ(f["result"], "found");
  EXPECT_EQ(f["witness"]["points"].size(), 7u);
}

TEST(CliTest, PtrAndAnalyzeCommands) {
  const auto p = run_json("ptr poly --in catalog:ptr-pg-2-3-standard");
  EXPECT_EQ(p["polynomial"], "X*Y + Z");
  const auto d = run_json("ptr decompose --in catalog:ptr-pg-2-3-standard");
  EXPECT_EQ(d["M1"], "0");
  EXPECT_EQ(d["M2"], "X*Y");
  const auto c = run_json("ptr check --in catalog:ptr-hall-9-quadrangle");
  EXPECT_EQ(c["properties"]["ptr"], true);
  EXPECT_EQ(c["linear"], false);
  for (const auto* sub : {"slices", "forms", "sab", "complete-mappings"})
    run_json(std::string("analyze ") + sub + " --in catalog:ptr-pg-2-5-standard");
  run_json("analyze kappa --field 5,1 --square");
}

TEST(CliTest, TransitivityCommands) {
  const auto prof = run_json("transitivity profile --in catalog:hall-9");
  EXPECT_EQ(prof["translation_lines"], nlohmann::json::array({90}));
  const auto flag = run_json("transitivity flag --in catalog:pg-2-3 --point 0 --line 0");
  EXPECT_EQ(flag["transitive"], true);
  EXPECT_EQ(flag["group_order"], 3);
}

TEST(CliTest, CatalogCommands) {
  const auto l = run_json("catalog list");
  EXPECT_GE(l["entries"].size(), 10u);
  const auto v = run_json("catalog verify --id pg-2-2");
  EXPECT_EQ(v["ok"], true);
}

TEST(CliTest, InputErrorsExitTwo) {
  for (const auto* args : {"--field 6,1 plane build", "bogus", "plane validate --in /nonexistent/x.json",
                           "plane validate --in catalog:nope", "transitivity flag --in catalog:pg-2-2 --point 99 --line 0",
                           "ptr check --in catalog:pg-2-2", "plane build"}) {
    const auto r = run(args);
    EXPECT_EQ(r.rc, 2) << args;
    EXPECT_TRUE(r.out.empty()) << args;
    EXPECT_FALSE(r.err.empty()) << args;
  }
}

TEST(CliTest, PrettyOutputIsSameDocument) {
  const auto a = run_json("ptr check --in catalog:ptr-pg-2-4-quadrangle");
  const auto b = run_json("ptr check --in catalog:ptr-pg-2-4-quadrangle --pretty");
  EXPECT_EQ(a, b);
}

TEST(CliTest, OutputIndependentOfThreads) {
  for (const auto* args : {"plane desargues --in catalog:hall-9", "transitivity profile --in catalog:pg-2-4",
                           "coordinatise --in catalog:hall-9 --optimal add", "fano find --in catalog:pg-2-8"}) {
    const auto one = run(std::string(args) + " --threads 1");
    const auto three = run(std::string(args) + " --threads 3");
    EXPECT_EQ(one.rc, three.rc) << args;
    EXPECT_EQ(one.out, three.out) << args;
  }
}
