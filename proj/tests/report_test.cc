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

#include "gwd/report.h"

#include <gtest/gtest.h>

#include <atomic>
#include <cstdlib>
#include <random>

#include "gwd/errors.h"
#include "gwd/montecarlo.h"
#include "gwd/rng.h"
#include "gwd/tables.h"

using namespace gwd;

namespace {

Report sample_report() {
    Report r("demo", 42);
    r.set("n", "6");
    Table &t = r.table("values", {"k", "label", "x"});
    t.add({int64_t{1}, std::string("a"), 0.1});
    t.add({int64_t{2}, std::string("b,c"), 1.0 / 3});
    return r;
}

}  // namespace

TEST(report, csv_layout) {
    std::string csv = sample_report().to_csv();
    EXPECT_EQ(csv.rfind("# command: demo\n# version: 0.1.0\n# seed: 42\n# n: 6\n# table: values\nk,label,x\n", 0), 0u);
    EXPECT_NE(csv.find("0.333333333333333"), std::string::npos);
    VerifyResult v = verify_report(csv);
    EXPECT_TRUE(v.ok) << v.message;
    EXPECT_EQ(v.tables, 1u);
    EXPECT_EQ(v.rows, 2u);
}

TEST(report, json_round_trip) {
    std::string json = sample_report().to_json();
    VerifyResult v = verify_report(json);
    EXPECT_TRUE(v.ok) << v.message;
    EXPECT_EQ(v.rows, 2u);
    EXPECT_NE(json.find("\"command\""), std::string::npos);
}

TEST(report, verify_rejects_broken_reports) {
    EXPECT_FALSE(verify_report("").ok);
    EXPECT_FALSE(verify_report("# command: x\n# version: 1\n# table: t\na,b\n1\n").ok);
    EXPECT_FALSE(verify_report("# command: x\n# seed: 1\n# table: t\na\n1\n").ok);
    EXPECT_FALSE(verify_report("# command: x\n# version: 1\n# seed: 1\n").ok);
    EXPECT_FALSE(verify_report("# command: x\n# version: 1\n# seed: 1\n# table: t\na,b\n1,\n").ok);
    EXPECT_FALSE(verify_report("{\"meta\": {\"command\": \"x\"}, \"tables\": []}").ok);
    EXPECT_FALSE(verify_report("{not json").ok);
    std::string csv = sample_report().to_csv();
    EXPECT_FALSE(verify_report(csv + "3,d\n").ok);
}

TEST(report, table_width_is_enforced) {
    Report r("demo", 1);
    Table &t = r.table("x", {"a", "b"});
    EXPECT_THROW(t.add({int64_t{1}}), ParameterError);
}

TEST(report, multiple_tables) {
    Report r("demo", 1);
    r.tables.push_back(roots_table({2, 3}));
    r.tables.push_back(cost_table({1, 2}));
    VerifyResult v = verify_report(r.to_csv());
    EXPECT_TRUE(v.ok) << v.message;
    EXPECT_EQ(v.tables, 2u);
    EXPECT_EQ(v.rows, 4u + 6u + 2u);
    EXPECT_TRUE(verify_report(r.to_json()).ok);
}

TEST(report, format_real_round_trips_to_tolerance) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    for (int i = 0; i < 1000; i++) {
        double x = u(rng);
        EXPECT_NEAR(std::strtod(format_real(x).c_str(), nullptr), x, 1e-12 * std::abs(x));
    }
}

TEST(montecarlo, thread_count_does_not_change_results) {
    auto trial = [](std::mt19937_64 &rng) { return uniform_unit(rng) < 0.3; };
    uint64_t one = count_successes(50000, 11, trial, 1);
    EXPECT_EQ(count_successes(50000, 11, trial, 3), one);
    EXPECT_EQ(count_successes(50000, 11, trial, 8), one);
    EXPECT_NE(count_successes(50000, 12, trial, 1), one);
    EXPECT_EQ(count_successes(0, 11, trial, 2), 0u);
}

TEST(montecarlo, every_trial_runs_once) {
    std::atomic<uint64_t> calls{0};
    uint64_t hits = count_successes(10001, 3, [&](std::mt19937_64 &) {
        calls++;
        return true;
    }, 4);
    EXPECT_EQ(hits, 10001u);
    EXPECT_EQ(calls.load(), 10001u);
}

TEST(montecarlo, worker_exceptions_propagate) {
    EXPECT_THROW(count_successes(100, 1, [](std::mt19937_64 &) -> bool { throw ParameterError("boom"); }, 2),
                 ParameterError);
}
