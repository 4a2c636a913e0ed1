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

#include "gwd/counting.h"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "gwd/errors.h"
#include "gwd/statevector.h"

using namespace gwd;
using std::numbers::pi;

namespace {

// Register of P levels in uniform superposition controls G^m on the system,
// then an inverse DFT on the register. Returns the register distribution.
std::vector<double> brute_force_counting(const BooleanOracle &f, uint64_t P) {
    uint64_t N = f.domain_size();
    std::vector<StateVector> branch;
    StateVector sv = StateVector::uniform(f.num_variables());
    for (uint64_t m = 0; m < P; m++) {
        branch.push_back(sv);
        apply_oracle_phase(sv, f, pi);
        apply_generalized_diffusion(sv, pi);
    }
    std::vector<double> probs(P, 0.0);
    double scale = 1.0 / static_cast<double>(P * P);
    for (uint64_t l = 0; l < P; l++) {
        for (uint64_t x = 0; x < N; x++) {
            Complex amp = 0;
            for (uint64_t m = 0; m < P; m++) {
                amp += std::polar(1.0, -2 * pi * static_cast<double>(l * m % P) / static_cast<double>(P)) *
                       branch[m].amps[x];
            }
            probs[l] += std::norm(amp) * scale;
        }
    }
    return probs;
}

}  // namespace

TEST(counting, fraction_parsing) {
    AngleFraction a = AngleFraction::parse("2/8");
    EXPECT_EQ(a.num, 1u);
    EXPECT_EQ(a.den, 4u);
    EXPECT_NEAR(a.weight(), 0.5, 1e-15);
    EXPECT_NEAR(AngleFraction::make(1, 2).weight(), 1, 1e-15);
    EXPECT_THROW(AngleFraction::parse("3/4"), ParameterError);
    EXPECT_THROW(AngleFraction::parse("0/4"), ParameterError);
    EXPECT_THROW(AngleFraction::parse("1/0"), ParameterError);
    EXPECT_THROW(AngleFraction::parse("1-4"), ParameterError);
    EXPECT_THROW(AngleFraction::parse("1/4x"), ParameterError);
}

TEST(counting, half_weight_example) {
    std::vector<double> p = counting_distribution(8, 16, 4);
    EXPECT_NEAR(p[1], 0.5, 1e-12);
    EXPECT_NEAR(p[3], 0.5, 1e-12);
    EXPECT_NEAR(p[0] + p[2], 0, 1e-12);
}

TEST(counting, root_angle_example) {
    std::vector<double> p = counting_distribution_for_angle(pi / 5, 10);
    EXPECT_NEAR(p[2], 0.5, 1e-12);
    EXPECT_NEAR(p[8], 0.5, 1e-12);
    EXPECT_NEAR(estimate_weight(2, 1, 10), std::pow(std::sin(pi / 5), 2), 1e-15);
}

TEST(counting, constant_functions) {
    EXPECT_NEAR(counting_distribution(0, 16, 8)[0], 1, 1e-12);
    std::vector<double> full = counting_distribution(16, 16, 8);
    EXPECT_NEAR(full[4], 1, 1e-12);
    EXPECT_THROW(counting_distribution(17, 16, 8), ParameterError);
    EXPECT_THROW(counting_distribution(1, 16, 1), ParameterError);
}

TEST(counting, distribution_properties) {
    std::mt19937_64 rng(12);
    for (int c = 0; c < 200; c++) {
        uint64_t N = 2 + rng() % 5000;
        uint64_t t = rng() % (N + 1);
        uint64_t P = 2 + rng() % 300;
        std::vector<double> p = counting_distribution(t, N, P);
        double total = 0;
        for (uint64_t l = 0; l < P; l++) {
            ASSERT_GE(p[l], 0);
            ASSERT_NEAR(p[l], p[(P - l) % P], 1e-12);
            total += p[l];
        }
        ASSERT_NEAR(total, 1, 1e-10) << "N=" << N << " t=" << t << " P=" << P;
    }
}

TEST(counting, estimator_concentrates_off_grid) {
    // The true angle falls between register bins; most mass still lands within
    // one bin of it.
    uint64_t N = 1024, t = 300, P = 64;
    std::vector<double> p = counting_distribution(t, N, P);
    double close = 0;
    for (uint64_t l = 0; l < P; l++) {
        if (std::abs(estimate_weight(l, N, P) - static_cast<double>(t)) <= pi * N / P) {
            close += p[l];
        }
    }
    EXPECT_GE(close, 0.8);
}

TEST(counting, matches_brute_force_register_simulation) {
    for (unsigned n : {2u, 3u, 4u}) {
        uint64_t N = uint64_t{1} << n;
        for (uint64_t t = 0; t <= N; t += (n == 4 ? 3 : 1)) {
            BooleanOracle f = make_random_oracle(n, t, t);
            for (uint64_t P : {2ull, 5ull, 8ull, 10ull}) {
                std::vector<double> want = brute_force_counting(f, P);
                std::vector<double> got = counting_distribution(t, N, P);
                ASSERT_LT(total_variation_distance(got, want), 1e-10) << "n=" << n << " t=" << t << " P=" << P;
            }
        }
    }
}

TEST(counting, single_weight_plans) {
    EXPECT_EQ(plan_check_weight(AngleFraction::make(1, 4), 1).P, 4u);
    EXPECT_EQ(plan_check_weight(AngleFraction::make(1, 5), 1).P, 5u);
    CountingPlan p = plan_check_weight(AngleFraction::make(1, 6), 2);
    EXPECT_EQ(p.P, 12u);
    EXPECT_EQ(p.hypotheses[0].k, 2u);
    EXPECT_EQ(p.total_oracle_calls, 11u);
    EXPECT_THROW(plan_check_weight(AngleFraction::make(2, 5), 1), FeasibilityError);
}

TEST(counting, multi_weight_plans) {
    CountingPlan lcm = plan_two_weights(AngleFraction::make(1, 4), AngleFraction::make(1, 6));
    EXPECT_EQ(lcm.P, 12u);
    EXPECT_EQ(lcm.hypotheses[0].k, 3u);
    EXPECT_EQ(lcm.hypotheses[1].k, 2u);

    CountingPlan three = plan_n_weights(
        {AngleFraction::make(1, 4), AngleFraction::make(1, 5), AngleFraction::make(1, 10)});
    EXPECT_EQ(three.P, 20u);
    EXPECT_EQ(three.hypotheses[0].k, 5u);
    EXPECT_EQ(three.hypotheses[1].k, 4u);
    EXPECT_EQ(three.hypotheses[2].k, 2u);
    EXPECT_EQ(three.match(4), std::optional<size_t>(1));
    EXPECT_FALSE(three.match(3));

    EXPECT_THROW(plan_two_weights(AngleFraction::make(1, 4), AngleFraction::make(2, 8)), FeasibilityError);
    EXPECT_THROW(plan_n_weights({}), ParameterError);
}

TEST(counting, comparison_plan_pair) {
    CountingPlan plan = comparison_plan(2);
    EXPECT_EQ(plan.P, 10u);
    EXPECT_EQ(plan.hypotheses[0].k, 2u);
    EXPECT_EQ(plan.hypotheses[1].k, 3u);
    EXPECT_NEAR(plan.hypotheses[0].w, mu(2), 1e-15);
    EXPECT_NEAR(plan.hypotheses[1].w, 1 - mu(2), 1e-14);
    for (int k = 1; k <= 40; k++) {
        EXPECT_EQ(comparison_plan(k).P, 4u * k + 2);
    }
}

TEST(counting, planned_weights_decide_with_certainty) {
    std::mt19937_64 rng(6);
    struct Case {
        std::vector<AngleFraction> angles;
        uint64_t N;
    };
    // Angles whose weights times N are integers: 1/4 -> N/2, 1/6 -> N/4, 1/2 -> N.
    Case c{{AngleFraction::make(1, 4), AngleFraction::make(1, 6), AngleFraction::make(1, 2)}, 64};
    CountingPlan plan = plan_n_weights(c.angles);
    for (const CountingHypothesis &h : plan.hypotheses) {
        uint64_t t = static_cast<uint64_t>(std::llround(h.w * c.N));
        BooleanOracle f = make_random_oracle(6, t, t);
        for (int i = 0; i < 200; i++) {
            DecisionOutcome out = decide_by_counting(f, plan, rng, DecisionOptions{true});
            ASSERT_TRUE(out.correct);
            ASSERT_EQ(out.oracle_calls, plan.P - 1);
        }
    }
}

TEST(counting, perturbed_weight_gets_flagged) {
    std::mt19937_64 rng(8);
    CountingPlan plan = plan_two_weights(AngleFraction::make(1, 4), AngleFraction::make(1, 6));
    BooleanOracle f = make_random_oracle(6, 20, 3);
    int flagged = 0;
    for (int i = 0; i < 500; i++) {
        DecisionOutcome out = decide_by_counting(f, plan, rng);
        flagged += out.promise_flagged;
        EXPECT_FALSE(out.correct);
    }
    EXPECT_GT(flagged, 0);
}

TEST(counting, cost_comparison_examples) {
    CostComparison c3 = cost_comparison(3);
    EXPECT_EQ(c3.weight_decision_calls, 4u);
    EXPECT_EQ(c3.counting_calls, 13u);
    CostComparison c2 = cost_comparison(2);
    EXPECT_EQ(c2.weight_decision_calls, 3u);
    EXPECT_EQ(c2.counting_calls, 9u);
    EXPECT_NEAR(c2.ratio, 3.0, 1e-15);
    CostComparison c10 = cost_comparison(10);
    EXPECT_EQ(c10.weight_decision_calls, 11u);
    EXPECT_EQ(c10.counting_calls, 41u);
}
