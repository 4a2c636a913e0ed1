// Copyright 2026 The gwd Authors
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

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gwd/report.h"

namespace {

struct RunResult {
    int status;
    std::string out;
};

RunResult run(const std::string &args) {
    std::string cmd = std::string(GWD_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), got);
    }
    int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string read_file(const std::filesystem::path &p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(cli, roots_for_k10) {
    RunResult r = run("roots --k 10");
    ASSERT_EQ(r.status, 0);
    EXPECT_TRUE(gwd::verify_report(r.out).ok);
    EXPECT_NE(r.out.find("10,a,1,0.005584586887"), std::string::npos) << r.out;
}

TEST(cli, compare_k2) {
    RunResult r = run("compare --k 2");
    ASSERT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("2,3,9,3"), std::string::npos) << r.out;
}

TEST(cli, verify_round_trip) {
    auto dir = std::filesystem::temp_directory_path() / "gwd_cli_test";
    std::filesystem::create_directories(dir);
    for (const char *fmt : {"csv", "json"}) {
        auto file = dir / (std::string("mu.") + fmt);
        RunResult made = run(std::string("--format ") + fmt + " -o " + file.string() + " mu --k-max 5 --n 10");
        ASSERT_EQ(made.status, 0);
        RunResult checked = run("--verify " + file.string());
        EXPECT_EQ(checked.status, 0) << checked.out;
        EXPECT_TRUE(gwd::verify_report(read_file(file)).ok);
    }
    std::ofstream(dir / "bad.csv") << "# command: x\n# table: t\na,b\n1\n";
    EXPECT_EQ(run("--verify " + (dir / "bad.csv").string()).status, 3);
}

TEST(cli, seeded_runs_are_reproducible) {
    const std::string args = "--seed 17 randomized --n 8 --k 3 --trials 2000";
    RunResult a = run(args);
    RunResult b = run(args);
    ASSERT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
    RunResult c = run("--seed 18 randomized --n 8 --k 3 --trials 2000");
    EXPECT_NE(a.out, c.out);
}

TEST(cli, exit_codes) {
    EXPECT_EQ(run("classical --k 5 --g 4").status, 1);
    EXPECT_EQ(run("roots --k 0").status, 1);
    EXPECT_EQ(run("no-such-command").status, 1);
    EXPECT_EQ(run("counting plan --weights 1/4,2/8").status, 2);
    EXPECT_EQ(run("sure-success --n 4 --w 1/2").status, 1);
    EXPECT_EQ(run("distinguish --n 4 --t 5 --trials 10").status, 0);
}

TEST(cli, selftest_single_criterion) {
    RunResult r = run("selftest --criteria 2");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("PASS [2]"), std::string::npos) << r.out;
}
