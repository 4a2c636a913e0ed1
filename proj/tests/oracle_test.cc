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

#include "gwd/oracle.h"

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "gwd/errors.h"

using namespace gwd;

namespace {

uint64_t popcount_of(const BooleanOracle &f) {
    uint64_t total = 0;
    for (uint64_t x = 0; x < f.domain_size(); x++) {
        total += f.evaluate(x);
    }
    return total;
}

}  // namespace

TEST(oracle, zero_and_full_weight_tables) {
    EXPECT_EQ(make_random_oracle(2, 0, 7).to_hex(), "0");
    EXPECT_EQ(make_random_oracle(2, 4, 7).to_hex(), "f");
    BooleanOracle f = make_random_oracle(3, 3, 1);
    EXPECT_EQ(f.weight(), 3u);
    EXPECT_EQ(popcount_of(f), 3u);
}

TEST(oracle, evaluate_reads_table_bits) {
    EXPECT_TRUE(BooleanOracle::constant(3, true).evaluate(5));
    EXPECT_FALSE(BooleanOracle::constant(3, false).evaluate(0));
    // Truth table 1010, highest input first, for n = 2.
    BooleanOracle f = BooleanOracle::from_hex(2, "a");
    EXPECT_TRUE(f.evaluate(1));
    EXPECT_FALSE(f.evaluate(0));
    EXPECT_FALSE(f.evaluate(2));
    EXPECT_TRUE(f.evaluate(3));
    EXPECT_THROW(f.evaluate(4), std::out_of_range);
}

TEST(oracle, table_constructor_and_hex_agree) {
    std::vector<uint8_t> table{0, 1, 0, 1, 0, 0, 0, 1};
    BooleanOracle f(3, table);
    EXPECT_EQ(f.weight(), 3u);
    EXPECT_EQ(f.to_hex(), "8a");
    EXPECT_EQ(BooleanOracle::from_hex(3, f.to_hex()), f);
}

TEST(oracle, rejects_bad_input) {
    EXPECT_THROW(make_random_oracle(2, 5, 1), ParameterError);
    EXPECT_THROW(make_random_oracle(0, 0, 1), ParameterError);
    EXPECT_THROW(make_random_oracle(MAX_VARIABLES + 1, 0, 1), ParameterError);
    EXPECT_THROW(BooleanOracle::from_hex(2, "1f"), ParameterError);
    EXPECT_THROW(BooleanOracle::from_hex(2, "g"), ParameterError);
    EXPECT_THROW(BooleanOracle::from_hex(1, "4"), ParameterError);
    std::vector<uint8_t> short_table{0, 1};
    EXPECT_THROW(BooleanOracle(2, short_table), ParameterError);
}

TEST(oracle, round_weight_examples) {
    EXPECT_EQ(round_weight(0.25, 16), 4u);
    double m2 = std::pow(std::sin(std::numbers::pi / 5), 2);
    EXPECT_EQ(round_weight(m2, 32), 11u);
    EXPECT_EQ(round_weight(0.5 - 1e-9, 4), 2u);
    EXPECT_EQ(round_weight(0.375, 4), 2u);  // 1.5 rounds up
    EXPECT_THROW(round_weight(0.0, 4), ParameterError);
    EXPECT_THROW(round_weight(1.0, 4), ParameterError);
}

TEST(oracle, random_weight_and_determinism_property) {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 300; i++) {
        unsigned n = 1 + static_cast<unsigned>(rng() % 10);
        uint64_t N = uint64_t{1} << n;
        uint64_t t = rng() % (N + 1);
        uint64_t seed = rng();
        BooleanOracle a = make_random_oracle(n, t, seed);
        BooleanOracle b = make_random_oracle(n, t, seed);
        ASSERT_EQ(a, b);
        ASSERT_EQ(a.weight(), t);
        ASSERT_EQ(popcount_of(a), t);
        for (uint64_t x = 0; x < N; x++) {
            ASSERT_EQ(a.bit(x), a.evaluate(x));
        }
        ASSERT_EQ(BooleanOracle::from_hex(n, a.to_hex()), a);
    }
}

TEST(oracle, random_tables_cover_positions) {
    // Every position of a weight-1 function on n = 3 shows up across seeds.
    std::vector<int> seen(8, 0);
    for (uint64_t seed = 0; seed < 400; seed++) {
        BooleanOracle f = make_random_oracle(3, 1, seed);
        for (uint64_t x = 0; x < 8; x++) {
            seen[x] += f.evaluate(x);
        }
    }
    for (int c : seen) {
        EXPECT_GT(c, 20);
    }
}
