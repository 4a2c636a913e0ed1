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

#ifndef GWD_COUNTING_H
#define GWD_COUNTING_H

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "gwd/oracle.h"
#include "gwd/weight_decision.h"

namespace gwd {

/// A weight w = sin^2(pi * num / den) given by its exact angle fraction.
/// Always stored reduced, with 0 < num/den <= 1/2.
struct AngleFraction {
    uint64_t num;
    uint64_t den;

    /// Throws ParameterError for den = 0 or a fraction outside (0, 1/2].
    static AngleFraction make(uint64_t num, uint64_t den);
    /// Parses "p/q".
    static AngleFraction parse(std::string_view text);

    double weight() const;
    bool operator==(const AngleFraction &) const = default;
};

/// Probability of each register outcome 0..P-1 when the Grover eigenphase
/// 2 beta_H is estimated with a P-point Fourier register.
std::vector<double> counting_distribution_for_angle(double hilbert_angle, uint64_t P);

/// Same, with sin^2(beta_H) = t/N. t = 0 and t = N are allowed.
std::vector<double> counting_distribution(uint64_t t, uint64_t N, uint64_t P);

/// N sin^2(f pi / P).
double estimate_weight(uint64_t f, uint64_t N, uint64_t P);

/// f > P/2 becomes P - f.
uint64_t fold_outcome(uint64_t f, uint64_t P);

struct CountingHypothesis {
    AngleFraction angle;
    double w;
    /// Expected folded outcome, P * num / den.
    uint64_t k;
};

struct CountingPlan {
    uint64_t P;
    std::vector<CountingHypothesis> hypotheses;
    /// Controlled Grover applications for register powers 1..P-1.
    uint64_t total_oracle_calls;

    /// Index of the hypothesis whose expected outcome equals the folded f.
    std::optional<size_t> match(uint64_t f) const;
};

/// Single weight check with P = multiplier * den / num; throws
/// FeasibilityError when that is not an integer.
CountingPlan plan_check_weight(const AngleFraction &angle, uint64_t multiplier);

/// Least P with every P * num_i / den_i integral (the lcm of the
/// denominators). Throws FeasibilityError for duplicate weights.
CountingPlan plan_n_weights(const std::vector<AngleFraction> &angles);

/// plan_n_weights for exactly two distinct weights.
CountingPlan plan_two_weights(const AngleFraction &a, const AngleFraction &b);

/// Counting plan for the pair sin^2(k pi/(4k+2)), cos^2(k pi/(4k+2)).
CountingPlan comparison_plan(int k);

/// Samples one register outcome for the oracle, folds it and matches it
/// against the plan. With no match, inferred_t is empty and the outcome is
/// flagged (strict mode throws PromiseViolation instead).
DecisionOutcome decide_by_counting(
    const BooleanOracle &oracle, const CountingPlan &plan, std::mt19937_64 &rng, const DecisionOptions &options = {});

struct CostComparison {
    int k;
    uint64_t weight_decision_calls;
    uint64_t counting_calls;
    double ratio;
};

/// (k + 1, 4k + 1, ratio) for deciding the k-iteration promise pair.
CostComparison cost_comparison(int k);

}  // namespace gwd

#endif
