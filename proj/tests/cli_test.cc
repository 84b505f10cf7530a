// Copyright 2026 The tlayer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "gtest/gtest.h"
#include "test_util.h"
#include "tlayer/generator.h"
#include "tlayer/serialize.h"

namespace fs = std::filesystem;
using namespace tlayer;

namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("tlayer_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Runs the CLI with stdout and stderr captured to files; returns the exit code.
  int run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + TLAYER_CLI_PATH + " " + args + " > " + (dir_ / "stdout").string() + " 2> " +
                      (dir_ / "stderr").string();
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  std::string out() const { return read_file(dir_ / "stdout"); }
  std::string err() const { return read_file(dir_ / "stderr"); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, reduce_never_grows_the_circuit) {
  save_circuit(path("a.tcir.json"), generate({6, 20, 40, 3}));
  ASSERT_EQ(run("reduce --algo lookahead --k 4 --in " + path("a.tcir.json") + " --out " + path("b.tcir.json") +
                " --log " + path("l.json")),
            0)
      << err();
  Circuit a = load_circuit(path("a.tcir.json"));
  Circuit b = load_circuit(path("b.tcir.json"));
  EXPECT_LE(b.depth(), a.depth());
  EXPECT_NE(out().find("lookahead"), std::string::npos);

  EXPECT_EQ(run("verify-log --in " + path("a.tcir.json") + " --log " + path("l.json") + " --expect " +
                path("b.tcir.json")),
            0)
      << err();
  // Expecting the input itself fails unless nothing merged.
  if (b.depth() < a.depth()) {
    EXPECT_EQ(run("verify-log --in " + path("a.tcir.json") + " --log " + path("l.json") + " --expect " +
                  path("a.tcir.json")),
              1);
    EXPECT_NE(err().find("FAIL"), std::string::npos);
  }
}

TEST_F(CliTest, exact_refuses_large_circuits) {
  save_circuit(path("big.tcir.json"), generate({10, 500, 500, 1}));
  EXPECT_EQ(run("reduce --algo exact --in " + path("big.tcir.json") + " --out " + path("o.tcir.json")), 1);
  EXPECT_NE(err().find("size cap"), std::string::npos) << err();
  EXPECT_FALSE(fs::exists(path("o.tcir.json")));
}

TEST_F(CliTest, malformed_and_missing_inputs) {
  write_file(path("bad.tcir.json"), R"({"version":1,"n_qubits":2,"columns":[{"phase":"+","letters":"XQ"}]})");
  EXPECT_EQ(run("reduce --algo greedy --in " + path("bad.tcir.json")), 1);
  EXPECT_NE(err().find("columns[0].letters"), std::string::npos) << err();
  EXPECT_EQ(run("reduce --algo greedy --in " + path("missing.tcir.json")), 1);
  EXPECT_NE(err().find("missing.tcir.json"), std::string::npos) << err();
  EXPECT_EQ(run("reduce --algo annealing --in " + path("bad.tcir.json")), 2);
  EXPECT_EQ(run("reduce --no-such-flag"), 2);
  EXPECT_EQ(run(""), 2);
}

TEST_F(CliTest, expand_and_classify) {
  save_circuit(path("a.tcir.json"), test::circuit({"+XZ", "-YI"}));
  ASSERT_EQ(run("expand --factor 2 --in " + path("a.tcir.json") + " --out " + path("e.tcir.json")), 0) << err();
  EXPECT_EQ(load_circuit(path("e.tcir.json")), test::circuit({"+XI", "+IZ", "-YI"}));
  ASSERT_EQ(run("--format json classify --in " + path("a.tcir.json")), 0) << err();
  nlohmann::json j = nlohmann::json::parse(out());
  EXPECT_EQ(j["n_columns"], 2);
  EXPECT_EQ(j["label"].get<std::string>().substr(0, 1), "S");
}

TEST_F(CliTest, bench_is_reproducible_and_echoes_config) {
  // Small dataset directory by hand to keep the test fast.
  ASSERT_EQ(run("generate --quick --out " + path("ds"), "TLAYER_SEED=11"), 0) << err();
  nlohmann::json manifest = nlohmann::json::parse(read_file(path("ds") + "/manifest.json"));
  EXPECT_EQ(manifest["master_seed"], 11);
  nlohmann::json gen_cfg = nlohmann::json::parse(read_file(path("ds") + "/run_config.json"));
  EXPECT_EQ(gen_cfg["seed_source"], "env");

  ASSERT_EQ(run("bench --dataset " + path("ds") + " --algos greedy,lookahead --k 4 --out " + path("r1")), 0)
      << err();
  ASSERT_EQ(run("bench --dataset " + path("ds") + " --algos greedy,lookahead --k 4 --jobs 3 --out " + path("r2")),
            0)
      << err();
  for (const char* f : {"records.jsonl", "table3.csv", "class_breakdown.csv", "report_meta.json"}) {
    ASSERT_TRUE(fs::exists(path("r1") + "/" + f)) << f;
    EXPECT_EQ(read_file(path("r1") + "/" + f), read_file(path("r2") + "/" + f)) << f;
  }
  nlohmann::json cfg = nlohmann::json::parse(read_file(path("r1") + "/run_config.json"));
  nlohmann::json cfg2 = nlohmann::json::parse(read_file(path("r2") + "/run_config.json"));
  cfg2["paths"]["out"] = cfg["paths"]["out"];
  EXPECT_EQ(cfg, cfg2);
  EXPECT_EQ(cfg["subcommand"], "bench");
  EXPECT_TRUE(cfg.contains("version"));
  EXPECT_EQ(cfg["algorithms"], nlohmann::json({"greedy", "lookahead"}));

  ASSERT_EQ(run("sweep --axis partition --range 2..3 --f-range 2..3 --dataset " + path("ds") + " --records " +
                path("r1") + "/records.jsonl --out " + path("s")),
            0)
      << err();
  EXPECT_TRUE(fs::exists(path("s") + "/sweep.csv"));
  EXPECT_TRUE(fs::exists(path("s") + "/table4.csv"));
}

TEST_F(CliTest, bad_seed_environment) {
  save_circuit(path("a.tcir.json"), test::circuit({"+XZ"}));
  EXPECT_EQ(run("classify --in " + path("a.tcir.json"), "TLAYER_SEED=abc"), 2);
  EXPECT_NE(err().find("TLAYER_SEED"), std::string::npos);
}
