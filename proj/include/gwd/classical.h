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

#ifndef GWD_CLASSICAL_H
#define GWD_CLASSICAL_H

#include <cstdint>
#include <random>
#include <vector>

#include "gwd/oracle.h"
#include "gwd/weight_decision.h"

namespace gwd {

/// Majority vote over g uniformly random queries, deciding between the
/// weights promised for k quantum iterations.
struct MajorityExperiment {
    int k;
    uint64_t g;
    /// Probability that one query points at the true weight,
    /// cos^2(pi k / (2(2k+1))).
    double p;
    /// Probability that the majority points at the wrong weight.
    double E;

    static MajorityExperiment exact(int k, uint64_t g);
};

/// cos^2(pi k / (2(2k+1))) = 1 - mu_k.
double indication_probability(int k);

/// P[Binomial(g, p) <= (g-1)/2], summed in log space with saddle-point
/// binomial terms. Accurate for g well beyond 10^6.
double majority_error(double p, uint64_t g);

/// E(k, g) = majority_error(indication_probability(k), g).
/// Throws ParameterError for even g or k < 1.
double error_probability(int k, uint64_t g);

/// log of the Binomial(n, p) probability mass at x.
double log_binomial_pmf(uint64_t x, uint64_t n, double p);

/// One classical run: g uniform queries with replacement; a majority of ones
/// means the bigger weight.
uint64_t majority_vote_trial(const BooleanOracle &oracle, uint64_t g, std::mt19937_64 &rng, const PromisePair &promise);

/// Nearest odd integer >= 1 to `value`; even ties round up.
uint64_t nearest_odd(double value);

struct ScalingRow {
    int k;
    double s;
    uint64_t g;
    double E;
};

/// E(k, g) for g = nearest_odd(k^s) over all (k, s) pairs.
/// Throws ParameterError when some g exceeds 10^6.
std::vector<ScalingRow> scaling_table(const std::vector<int> &k_list, const std::vector<double> &exponents);

}  // namespace gwd

#endif
