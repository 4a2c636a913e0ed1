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

#ifndef GWD_WEIGHT_DECISION_H
#define GWD_WEIGHT_DECISION_H

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "gwd/oracle.h"
#include "gwd/statevector.h"
#include "gwd/subspace.h"

namespace gwd {

/// Result of one run of a weight-decision algorithm.
struct DecisionOutcome {
    /// Measured input x (or measured register value for counting).
    uint64_t measured_x = 0;
    /// f(measured_x); absent for algorithms that never evaluate f classically.
    std::optional<bool> f_of_x;
    /// Absent when the measurement matched no hypothesis.
    std::optional<uint64_t> inferred_t;
    bool correct = false;
    /// Phase-oracle applications plus classical verification queries.
    uint64_t oracle_calls = 0;
    /// Set when the run detected that the oracle is outside the promise.
    bool promise_flagged = false;
};

/// The two weights promised for k standard iterations:
/// t_small = round(N mu_k), t_big = round(N (1 - mu_k)).
struct PromisePair {
    uint64_t N;
    uint64_t t_small;
    uint64_t t_big;
    int k;

    static PromisePair for_iterations(int k, uint64_t N);

    bool contains(uint64_t t) const { return t == t_small || t == t_big; }
};

struct DecisionOptions {
    /// Throw PromiseViolation when the inferred weight disagrees with the
    /// oracle's actual weight instead of just reporting `correct = false`.
    bool strict = false;
};

/// Parity rule shared by the k-iteration algorithms: with k odd, f(x)=0 means
/// the bigger weight; with k even, f(x)=1 means the bigger weight.
uint64_t infer_weight_by_parity(int k, bool f_of_x, uint64_t t_small, uint64_t t_big);

/// Runs a phase schedule on the full state vector once and then samples
/// measurement outcomes from the final distribution as often as needed.
/// The referenced oracle must outlive this object.
class ScheduledDecision {
   public:
    ScheduledDecision(
        const BooleanOracle &oracle, const PhaseSchedule &schedule, int parity_k, uint64_t t_small, uint64_t t_big);

    DecisionOutcome sample(std::mt19937_64 &rng, const DecisionOptions &options = {}) const;

    /// Probability, under the simulated distribution, of inferring the oracle's
    /// actual weight.
    double success_probability() const;
    /// Probability mass on f(x) = 1 inputs.
    double solution_probability() const { return p_solution_; }

   private:
    ScheduledDecision(
        const BooleanOracle &oracle,
        const std::vector<double> &distribution,
        uint64_t phase_queries,
        int parity_k,
        uint64_t t_small,
        uint64_t t_big);

    const BooleanOracle &oracle_;
    int parity_k_;
    uint64_t t_small_;
    uint64_t t_big_;
    uint64_t phase_queries_;
    double p_solution_;
    DiscreteSampler sampler_;
};

/// One standard iteration, N/4 versus 3N/4. Flags the outcome when the final
/// distribution has support on both classes, which neither hypothesis allows.
DecisionOutcome distinguish_quarter(
    const BooleanOracle &oracle, std::mt19937_64 &rng, const DecisionOptions &options = {});

/// k standard iterations, measure, evaluate f once, apply the parity rule
/// against PromisePair::for_iterations(k, N). oracle_calls = k + 1.
DecisionOutcome randomized_weight_decision(
    const BooleanOracle &oracle, int k, std::mt19937_64 &rng, const DecisionOptions &options = {});

/// Probabilities (non-solution, solution) after k standard iterations for
/// weight t; constant functions are handled without the subspace picture.
std::pair<double, double> class_probabilities_after(int k, uint64_t t, uint64_t N);

/// Exact probability that k standard iterations plus the parity rule infer t
/// correctly. t must be one of the promised weights.
double exact_success_probability(int k, uint64_t t, uint64_t N);

/// 1 - 64 (k+1)^2 / N^2.
double success_lower_bound(int k, uint64_t N);

}  // namespace gwd

#endif
