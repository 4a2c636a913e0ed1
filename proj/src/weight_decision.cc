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

#include "gwd/weight_decision.h"

#include <cmath>
#include <numbers>
#include <string>

#include "gwd/errors.h"

namespace gwd {

PromisePair PromisePair::for_iterations(int k, uint64_t N) {
    if (k < 1) {
        throw ParameterError("iteration count k must be at least 1");
    }
    double m = mu(k);
    return PromisePair{N, round_weight(m, N), round_weight(1 - m, N), k};
}

uint64_t infer_weight_by_parity(int k, bool f_of_x, uint64_t t_small, uint64_t t_big) {
    bool odd = k % 2 != 0;
    bool big = odd ? !f_of_x : f_of_x;
    return big ? t_big : t_small;
}

ScheduledDecision::ScheduledDecision(
    const BooleanOracle &oracle, const PhaseSchedule &schedule, int parity_k, uint64_t t_small, uint64_t t_big)
    : ScheduledDecision(
          oracle, measure_distribution(run_full_schedule(oracle, schedule)), schedule.size(), parity_k, t_small,
          t_big) {
}

ScheduledDecision::ScheduledDecision(
    const BooleanOracle &oracle,
    const std::vector<double> &distribution,
    uint64_t phase_queries,
    int parity_k,
    uint64_t t_small,
    uint64_t t_big)
    : oracle_(oracle),
      parity_k_(parity_k),
      t_small_(t_small),
      t_big_(t_big),
      phase_queries_(phase_queries),
      p_solution_(0),
      sampler_(distribution) {
    for (uint64_t x = 0; x < distribution.size(); x++) {
        if (oracle.bit(x)) {
            p_solution_ += distribution[x];
        }
    }
}

DecisionOutcome ScheduledDecision::sample(std::mt19937_64 &rng, const DecisionOptions &options) const {
    DecisionOutcome out;
    out.measured_x = sampler_(rng);
    out.f_of_x = oracle_.evaluate(out.measured_x);
    out.inferred_t = infer_weight_by_parity(parity_k_, *out.f_of_x, t_small_, t_big_);
    out.correct = *out.inferred_t == oracle_.weight();
    out.oracle_calls = phase_queries_ + 1;
    if (options.strict && !out.correct) {
        throw PromiseViolation(
            "inferred weight " + std::to_string(*out.inferred_t) + " but the oracle has weight " +
            std::to_string(oracle_.weight()));
    }
    return out;
}

double ScheduledDecision::success_probability() const {
    uint64_t t = oracle_.weight();
    double p_infer_big = (parity_k_ % 2 != 0) ? 1 - p_solution_ : p_solution_;
    double p = 0;
    if (t == t_big_) {
        p += p_infer_big;
    }
    if (t == t_small_) {
        p += 1 - p_infer_big;
    }
    return p;
}

DecisionOutcome distinguish_quarter(const BooleanOracle &oracle, std::mt19937_64 &rng, const DecisionOptions &options) {
    uint64_t N = oracle.domain_size();
    if (N % 4 != 0) {
        throw ParameterError("distinguishing N/4 from 3N/4 needs N divisible by 4");
    }
    ScheduledDecision run(oracle, PhaseSchedule::standard(1), 1, N / 4, 3 * N / 4);
    DecisionOutcome out = run.sample(rng, options);
    constexpr double tol = 1e-12;
    double p_sol = run.solution_probability();
    if (p_sol > tol && p_sol < 1 - tol) {
        out.promise_flagged = true;
    }
    return out;
}

DecisionOutcome randomized_weight_decision(
    const BooleanOracle &oracle, int k, std::mt19937_64 &rng, const DecisionOptions &options) {
    PromisePair pair = PromisePair::for_iterations(k, oracle.domain_size());
    ScheduledDecision run(oracle, PhaseSchedule::standard(k), k, pair.t_small, pair.t_big);
    DecisionOutcome out = run.sample(rng, options);
    out.promise_flagged = !pair.contains(oracle.weight());
    return out;
}

std::pair<double, double> class_probabilities_after(int k, uint64_t t, uint64_t N) {
    if (t == 0) {
        return {1, 0};
    }
    if (t >= N) {
        return {0, 1};
    }
    SubspaceState s = run_schedule(t, N, PhaseSchedule::standard(k));
    double p_sol = s.solution_probability();
    return {1 - p_sol, p_sol};
}

double exact_success_probability(int k, uint64_t t, uint64_t N) {
    PromisePair pair = PromisePair::for_iterations(k, N);
    if (!pair.contains(t)) {
        throw ParameterError(
            "weight " + std::to_string(t) + " is not one of the promised weights {" + std::to_string(pair.t_small) +
            ", " + std::to_string(pair.t_big) + "}");
    }
    auto [p_ns, p_sol] = class_probabilities_after(k, t, N);
    double p_infer_big = (k % 2 != 0) ? p_ns : p_sol;
    return t == pair.t_big ? p_infer_big : 1 - p_infer_big;
}

double success_lower_bound(int k, uint64_t N) {
    double Nd = static_cast<double>(N);
    double k1 = k + 1;
    return 1 - 64 * k1 * k1 / (Nd * Nd);
}

}  // namespace gwd
