// Copyright 2026 The tgrad Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "tgrad/io/edge_list.hpp"
#include "tgrad/io/json.hpp"
#include "tgrad/tgrad.hpp"

namespace tgrad {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("tgrad_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    write("c6.el", io::serialize_edge_list(cycle_graph(6)));
    write("k3.el", io::serialize_edge_list(complete_graph(3)));
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }
  std::string read(const std::string& name) const {
    std::ifstream in(path(name));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  // Runs the CLI with stdout/stderr captured to files; returns the exit code.
  int run(const std::string& args) const {
    const std::string cmd = std::string(TGRAD_CLI_PATH) + " " + args + " > " + path("stdout") + " 2> " + path("stderr");
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  fs::path dir_;
};

TEST_F(Cli, DensityCsv) {
  ASSERT_EQ(run("density " + path("c6.el") + " --kmax 1"), 0);
  EXPECT_EQ(read("stdout"),
            "k,nabla,nabla_induced,nabla_exact,nabla_is_exact,nabla_induced_is_exact,nabla_exact_is_exact\n"
            "0,2,2,2,true,true,true\n"
            "1,2,2,2,true,true,true\n");
  ASSERT_EQ(run("density " + path("c6.el") + " --kmax 0 --measure induced"), 0);
  EXPECT_EQ(read("stdout"), "k,nabla_induced,nabla_induced_is_exact\n0,2,true\n");
}

TEST_F(Cli, FindAndVerify) {
  ASSERT_EQ(run("find " + path("c6.el") + " --pattern " + path("k3.el") +
                " --k 1 --mode atmost --occurrence subgraph -o " + path("w.json")),
            0);
  auto doc = io::witness_from_json(io::read_json_file(path("w.json")));
  EXPECT_TRUE(verify_witness(cycle_graph(6), complete_graph(3), doc.spec, doc.witness).empty());
  EXPECT_EQ(run("verify --witness " + path("w.json") + " --graph " + path("c6.el") + " --pattern " + path("k3.el")), 0);

  doc.witness.paths[0][1] = doc.witness.paths[1][1];
  write("bad.json", io::witness_to_json(doc).dump());
  EXPECT_NE(run("verify --witness " + path("bad.json") + " --graph " + path("c6.el") + " --pattern " + path("k3.el")), 0);
  auto report = io::Json::parse(read("stdout"));
  EXPECT_FALSE(report["violations"].empty());

  ASSERT_EQ(run("find " + path("c6.el") + " --pattern " + path("k3.el") + " --k 0 --mode atmost"), 0);
  EXPECT_EQ(read("stdout"), "none\n");
}

TEST_F(Cli, PipelineExitCodes) {
  write("s10.el", io::serialize_edge_list(uniform_subdivision(complete_graph(10), 1)));
  EXPECT_EQ(run("pipeline " + path("s10.el") + " --k 1 --r 1 --s 4 --relaxed"), 0);
  auto cert = io::pipeline_from_json(io::Json::parse(read("stdout")));
  EXPECT_TRUE(cert.completed());
  const std::string first = read("stdout");
  EXPECT_EQ(run("--workers 3 pipeline " + path("s10.el") + " --k 1 --r 1 --s 4 --relaxed"), 0);
  EXPECT_EQ(read("stdout"), first);
  write("k10.el", io::serialize_edge_list(complete_graph(10)));
  EXPECT_EQ(run("pipeline " + path("s10.el") + " --k 1 --r 1 --s 4 --relaxed --seed-pattern " + path("k10.el")), 0);
  EXPECT_EQ(run("pipeline " + path("c6.el") + " --k 1 --r 3 --s 2 --relaxed"), 2);
}

TEST_F(Cli, ErrorsAreJsonOnStderr) {
  write("loop.el", "2\n0 0\n");
  EXPECT_EQ(run("density " + path("loop.el") + " --kmax 0"), 1);
  auto err = io::Json::parse(read("stderr"));
  EXPECT_EQ(err["error"], "ParseError");
  EXPECT_EQ(err["line"], 2);
  EXPECT_EQ(run("bounds --mode bexp --f '[0, 1]'"), 1);
  EXPECT_EQ(io::Json::parse(read("stderr"))["error"], "InvalidInput");
}

TEST_F(Cli, BoundsAreExactDecimal) {
  ASSERT_EQ(run("bounds --mode bexp --f '[1, 1]'"), 0);
  BoundTable t = io::bounds_from_json(io::Json::parse(read("stdout")));
  EXPECT_EQ(t.rows[1].value, Rational((BigInt(1) << 270) + 1));
  ASSERT_EQ(run("bounds --mode nd --f '{\"sizes\": [5], \"f\": [[2], [1]]}'"), 0);
  BoundTable nd = io::bounds_from_json(io::Json::parse(read("stdout")));
  EXPECT_EQ(nd.rows[1].value, 2 + d_constant(2, 1, 2, false));
  write("k5.el", io::serialize_edge_list(complete_graph(5)));
  ASSERT_EQ(run("bounds --mode main1 --pattern " + path("k5.el") + " --s 3 --c 1 --d 10 --kmax 2"), 0);
  auto j = io::Json::parse(read("stdout"));
  BoundTable f = io::bounds_from_json(j["f"]);
  EXPECT_EQ(f.rows[0].value, 10);
  EXPECT_EQ(f.rows[2].value, 25);
}

TEST_F(Cli, GeneratePlantedAndTrend) {
  write("k4.el", io::serialize_edge_list(complete_graph(4)));
  ASSERT_EQ(run("gen --kind planted --pattern " + path("k4.el") + " --k 2 --noise 0.05 --seed 9 -o " +
                path("g.el") + " --witness-out " + path("gw.json")),
            0);
  EXPECT_EQ(run("verify --witness " + path("gw.json") + " --graph " + path("g.el") + " --pattern " + path("k4.el")), 0);

  fs::create_directories(path("fam"));
  for (int n : {4, 6, 8}) {
    ASSERT_EQ(run("gen --kind cycle --n " + std::to_string(n) + " -o " + path("fam/c" + std::to_string(n) + ".el")), 0);
  }
  ASSERT_EQ(run("trend --family " + path("fam") + " --k 1"), 0);
  TrendEstimate t = io::trend_from_json(io::Json::parse(read("stdout")));
  EXPECT_EQ(t.points.size(), 3U);
  EXPECT_EQ(t.slope, 0.0);

  ASSERT_EQ(run("gen --kind family --pattern " + path("k4.el") + " --s 3 --n 6 --count 3 --seed 1 --outdir " +
                path("filtered")),
            0);
  std::size_t members = 0;
  for (const auto& e : fs::directory_iterator(path("filtered"))) members += e.path().extension() == ".el";
  EXPECT_EQ(members, 3U);
}

}  // namespace
}  // namespace tgrad
