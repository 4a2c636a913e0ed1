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

#include "gwd/classical.h"

#include <gtest/gtest.h>

#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <numbers>

#include "gwd/errors.h"
#include "gwd/montecarlo.h"

using namespace gwd;

namespace {

// P[Bin(g, p) <= (g-1)/2] via the regularized incomplete beta function.
double binomial_lower_tail(double p, uint64_t g) {
    double m = static_cast<double>((g - 1) / 2);
    return boost::math::ibetac(m + 1, static_cast<double>(g) - m, p);
}

}  // namespace

TEST(classical, indication_probability_is_one_minus_mu) {
    for (int k = 1; k <= 30; k++) {
        double c = std::cos(std::numbers::pi * k / (2.0 * (2 * k + 1)));
        EXPECT_NEAR(indication_probability(k), c * c, 1e-15);
        EXPECT_NEAR(indication_probability(k), 1 - mu(k), 1e-14);
    }
}

TEST(classical, single_query_example) {
    EXPECT_NEAR(error_probability(1, 1), 0.25, 1e-15);
    EXPECT_NEAR(majority_error(0.8, 3), 0.2 * 0.2 * 0.2 + 3 * 0.2 * 0.2 * 0.8, 1e-15);
}

TEST(classical, rejects_bad_arguments) {
    EXPECT_THROW(error_probability(3, 4), ParameterError);
    EXPECT_THROW(error_probability(0, 3), ParameterError);
    EXPECT_THROW(majority_error(0.7, 0), ParameterError);
}

TEST(classical, log_pmf_matches_direct_formula) {
    for (uint64_t n : {1u, 5u, 14u, 15u, 16u, 40u, 200u}) {
        for (double p : {0.1, 0.5, 0.93}) {
            for (uint64_t x = 0; x <= n; x++) {
                double direct = std::lgamma(n + 1.0) - std::lgamma(x + 1.0) - std::lgamma(n - x + 1.0) +
                                x * std::log(p) + (n - x) * std::log1p(-p);
                ASSERT_NEAR(log_binomial_pmf(x, n, p), direct, 1e-10 * std::max(1.0, std::abs(direct)))
                    << "n=" << n << " x=" << x << " p=" << p;
            }
        }
    }
}

TEST(classical, majority_error_matches_incomplete_beta) {
    for (int k : {1, 2, 5, 11, 51, 101, 201}) {
        double p = indication_probability(k);
        for (uint64_t g : {1ull, 3ull, 11ull, 101ull, 1001ull, 10001ull, 40401ull, 1000001ull}) {
            double want = binomial_lower_tail(p, g);
            double got = majority_error(p, g);
            if (want < 1e-290) {
                EXPECT_LT(got, 1e-280);
                continue;
            }
            EXPECT_NEAR(got / want, 1, 1e-10) << "k=" << k << " g=" << g;
        }
    }
}

TEST(classical, error_decreases_in_g) {
    for (int k : {3, 11, 51}) {
        double prev = 1;
        for (uint64_t g = 1; g < 2000; g += 2) {
            double e = error_probability(k, g);
            ASSERT_LT(e, prev) << "k=" << k << " g=" << g;
            prev = e;
        }
    }
}

TEST(classical, regimes_along_k) {
    // g = k leaves the error near one half, g = k^2 stays bounded, g = k^3
    // drives it to zero.
    double prev_linear = 0, prev_cubic = 1;
    for (int k : {11, 25, 51, 101}) {
        uint64_t kk = static_cast<uint64_t>(k);
        double linear = error_probability(k, nearest_odd(kk));
        double square = error_probability(k, nearest_odd(static_cast<double>(kk * kk)));
        double cubic = error_probability(k, nearest_odd(static_cast<double>(kk * kk * kk)));
        EXPECT_GT(linear, prev_linear);
        EXPECT_LT(cubic, prev_cubic);
        EXPECT_GT(square, 0.2);
        EXPECT_LT(square, 0.25);
        prev_linear = linear;
        prev_cubic = cubic;
    }
    EXPECT_GT(prev_linear, 0.45);
    EXPECT_LT(prev_cubic, 1e-6);
}

TEST(classical, nearest_odd_examples) {
    EXPECT_EQ(nearest_odd(0.3), 1u);
    EXPECT_EQ(nearest_odd(1), 1u);
    EXPECT_EQ(nearest_odd(2), 3u);
    EXPECT_EQ(nearest_odd(4), 5u);
    EXPECT_EQ(nearest_odd(4.9), 5u);
    EXPECT_EQ(nearest_odd(5.99), 5u);
    EXPECT_EQ(nearest_odd(6.01), 7u);
    EXPECT_EQ(nearest_odd(121), 121u);
}

TEST(classical, scaling_table_rows) {
    std::vector<ScalingRow> rows = scaling_table({11, 51}, {1, 2});
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0].g, 11u);
    EXPECT_EQ(rows[1].g, 121u);
    EXPECT_EQ(rows[3].g, 2601u);
    EXPECT_NEAR(rows[1].E, error_probability(11, 121), 1e-15);
    EXPECT_THROW(scaling_table({101}, {3}), ParameterError);
}

TEST(classical, majority_vote_examples) {
    std::mt19937_64 rng(1);
    PromisePair pair = PromisePair::for_iterations(1, 16);
    EXPECT_EQ(majority_vote_trial(BooleanOracle::constant(4, true), 5, rng, pair), 12u);
    EXPECT_EQ(majority_vote_trial(BooleanOracle::constant(4, false), 5, rng, pair), 4u);
    EXPECT_THROW(majority_vote_trial(BooleanOracle::constant(4, false), 4, rng, pair), ParameterError);
}

TEST(classical, monte_carlo_agrees_with_exact) {
    const uint64_t trials = 40000;
    for (int k : {2, 5}) {
        uint64_t N = uint64_t{1} << 12;
        PromisePair pair = PromisePair::for_iterations(k, N);
        for (uint64_t g : {1ull, 9ull, 25ull}) {
            for (uint64_t t : {pair.t_small, pair.t_big}) {
                BooleanOracle f = make_random_oracle(12, t, g + t);
                uint64_t wrong = count_successes(trials, 7 * g + t, [&](std::mt19937_64 &rng) {
                    return majority_vote_trial(f, g, rng, pair) != t;
                });
                // Rounding t to an integer moves the per-query rate slightly.
                double q = static_cast<double>(t) / static_cast<double>(N);
                double p = t == pair.t_big ? q : 1 - q;
                double exact = majority_error(p, g);
                double se = std::sqrt(exact * (1 - exact) / trials);
                EXPECT_NEAR(static_cast<double>(wrong) / trials, exact, 4 * se) << "k=" << k << " g=" << g;
            }
        }
    }
}
