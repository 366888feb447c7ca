// Copyright 2026 The ver-forge Authors.
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

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>

#include <gtest/gtest.h>
#include <json.hpp>

#include "oracles/oracles.h"
#include "test_util.h"
#include "verforge/jsonl.h"
#include "verforge/retrieval.h"

namespace verforge {
namespace {

using testing_util::FixturePath;
using testing_util::TempDir;
using testing_util::WriteFile;

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult RunCli(const std::string &args, const TempDir &dir) {
  std::string err_path = dir.File("stderr.txt");
  std::string cmd = std::string(VERFORGE_CLI_PATH) + " " + args + " 2>" + err_path;
  RunResult r;
  FILE *pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = testing_util::ReadFile(err_path);
  return r;
}

std::string Quote(const std::string &s) { return "'" + s + "'"; }

TEST(CliTest, VersionAndHelp) {
  TempDir dir;
  RunResult v = RunCli("--version", dir);
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("index format v1"), std::string::npos) << v.out;
  for (const char *sub : {"build", "stats", "retrieve", "encode", "sample", "eval", "pipeline"}) {
    RunResult h = RunCli(std::string(sub) + " --help", dir);
    EXPECT_EQ(h.code, 0) << sub;
    EXPECT_NE(h.out.find("Usage"), std::string::npos) << sub;
  }
}

TEST(CliTest, UsageErrorsExitOne) {
  TempDir dir;
  RunResult unknown = RunCli("stats --corpus x --bogus", dir);
  EXPECT_EQ(unknown.code, 1);
  EXPECT_NE(unknown.err.find("Usage"), std::string::npos);
  EXPECT_TRUE(unknown.out.empty());
  EXPECT_EQ(RunCli("", dir).code, 1);
  EXPECT_EQ(RunCli("frobnicate", dir).code, 1);
}

TEST(CliTest, PipelineOnFixture) {
  TempDir dir;
  WriteFile(dir.File("c.cfg"),
            "dump_path = " + FixturePath("mini_dump.xml") + "\nout_dir = out\n"
            "page_blocklist = " + FixturePath("page_blocklist.txt") + "\n");
  RunResult r = RunCli("pipeline --config " + dir.File("c.cfg") + " --jobs 2", dir);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_TRUE(std::filesystem::exists(dir.File("out/manifest.json")));
}

TEST(CliTest, EvalMissingFileIsIoError) {
  TempDir dir;
  WriteFile(dir.File("h.txt"), "a dog\n");
  RunResult r = RunCli("eval --hyp " + dir.File("h.txt") + " --ref " + dir.File("r.jsonl"), dir);
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
}

TEST(CliTest, EvalScores) {
  TempDir dir;
  WriteFile(dir.File("h.txt"), "A boy is playing frisbee with his friends\nthe cat sat\n");
  WriteFile(dir.File("r.jsonl"),
            "{\"references\":[\"A dog catches a frisbee\",\"a man throws a frisbee\"],"
            "\"concepts\":[\"dog\",\"frisbee\",\"catch\",\"throw\"]}\n"
            "{\"target\":\"the cat sat\",\"entities\":[\"cat\"]}\n");
  RunResult r = RunCli("eval --hyp " + dir.File("h.txt") + " --ref " + dir.File("r.jsonl") +
                        " --metrics bleu,rouge_l,meteor_lite,cider,coverage",
                    dir);
  ASSERT_EQ(r.code, 0) << r.err;
  nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["n_pairs"], 2);
  EXPECT_DOUBLE_EQ(j["coverage"].get<double>(), (0.25 + 1.0) / 2);
  for (const char *m : {"bleu", "rouge_l", "meteor_lite", "cider"}) EXPECT_TRUE(j.contains(m));

  WriteFile(dir.File("short.jsonl"), "{\"target\":\"x\"}\n");
  EXPECT_EQ(RunCli("eval --hyp " + dir.File("h.txt") + " --ref " + dir.File("short.jsonl"), dir).code,
            2);
  EXPECT_EQ(RunCli("eval --hyp " + dir.File("h.txt") + " --ref " + dir.File("r.jsonl") +
                    " --metrics bertscore",
                dir)
                .code,
            1);
}

TEST(CliTest, BuildRetrieveEncodeSampleStats) {
  TempDir dir;
  RunResult build = RunCli("build --dump " + FixturePath("mini_dump.xml") + " --out " +
                            dir.File("corpus.jsonl") + " --index " + dir.File("index.bin") +
                            " --jobs 3",
                        dir);
  ASSERT_EQ(build.code, 0) << build.err;
  RunResult piped = RunCli("build --jobs 1 < " + FixturePath("mini_dump.xml"), dir);
  EXPECT_EQ(piped.out, testing_util::ReadFile(dir.File("corpus.jsonl")));

  RunResult retrieve =
      RunCli("retrieve --index " + dir.File("index.bin") + " --entities " +
              Quote("carbon dioxide; water") + " --k 5",
          dir);
  ASSERT_EQ(retrieve.code, 0) << retrieve.err;
  nlohmann::json j = nlohmann::json::parse(retrieve.out);
  OverlapIndex index = OverlapIndex::Load(dir.File("index.bin"));
  std::vector<ScoredExample> want =
      oracle::QueryOverlap(index.examples(), {"Carbon dioxide", "Water"}, 5, std::nullopt);
  ASSERT_EQ(j["results"].size(), want.size());
  ASSERT_FALSE(want.empty());
  EXPECT_EQ(want[0].overlap, 2u);
  for (size_t i = 0; i < want.size(); ++i) {
    EXPECT_EQ(j["results"][i]["id"], want[i].id);
    EXPECT_EQ(j["results"][i]["overlap"], want[i].overlap);
  }

  RunResult enc1 = RunCli("encode --corpus " + dir.File("corpus.jsonl") + " --index " +
                           dir.File("index.bin") + " --seed 4 --jobs 1",
                       dir);
  RunResult enc4 = RunCli("encode --corpus " + dir.File("corpus.jsonl") + " --index " +
                           dir.File("index.bin") + " --seed 4 --jobs 4",
                       dir);
  ASSERT_EQ(enc1.code, 0) << enc1.err;
  EXPECT_EQ(enc1.out, enc4.out);
  EXPECT_FALSE(enc1.out.empty());

  RunResult s1 = RunCli("sample --corpus " + dir.File("corpus.jsonl") + " --size 50 --seed 2", dir);
  RunResult s2 = RunCli("sample --corpus " + dir.File("corpus.jsonl") + " --size 50 --seed 2", dir);
  ASSERT_EQ(s1.code, 0) << s1.err;
  EXPECT_EQ(s1.out, s2.out);
  EXPECT_EQ(std::count(s1.out.begin(), s1.out.end(), '\n'), 50);
  EXPECT_EQ(RunCli("sample --corpus " + dir.File("corpus.jsonl") + " --size 100000", dir).code, 2);

  RunResult stats = RunCli("stats --corpus " + dir.File("corpus.jsonl"), dir);
  ASSERT_EQ(stats.code, 0);
  EXPECT_EQ(nlohmann::json::parse(stats.out)["total"], 124);
  EXPECT_EQ(RunCli("stats --corpus " + dir.File("corpus.jsonl") + " --format text", dir).code, 0);
}

TEST(CliTest, DataAndIoErrors) {
  TempDir dir;
  WriteFile(dir.File("bad.jsonl"), "{\"entities\":[]}\n");
  EXPECT_EQ(RunCli("stats --corpus " + dir.File("bad.jsonl"), dir).code, 2);
  EXPECT_EQ(RunCli("stats --corpus " + dir.File("none.jsonl"), dir).code, 3);
  WriteFile(dir.File("bad.xml"), "<mediawiki><page>");
  EXPECT_EQ(RunCli("build --dump " + dir.File("bad.xml"), dir).code, 2);
  WriteFile(dir.File("idx.bin"), "garbage");
  EXPECT_EQ(RunCli("retrieve --index " + dir.File("idx.bin") + " --entities x", dir).code, 2);
}

}  // namespace
}  // namespace verforge
