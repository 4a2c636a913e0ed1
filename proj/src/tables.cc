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

#include "gwd/tables.h"

#include <string>

#include "gwd/subspace.h"
#include "gwd/weight_decision.h"

namespace gwd {

Table roots_table(const std::vector<int> &ks) {
    Table t{"roots", {"k", "set", "index", "root"}, {}};
    for (int k : ks) {
        RootSets r = roots(k);
        for (size_t i = 0; i < r.a.size(); i++) {
            t.add({int64_t{k}, std::string("a"), uint64_t{i + 1}, r.a[i]});
        }
        for (size_t i = 0; i < r.b.size(); i++) {
            t.add({int64_t{k}, std::string("b"), uint64_t{i + 1}, r.b[i]});
        }
    }
    return t;
}

Table mu_table(int k_max, uint64_t N) {
    Table t{"mu", {"k", "mu"}, {}};
    if (N > 0) {
        t.columns.insert(t.columns.end(), {"t_small", "t_big"});
    }
    for (int k = 1; k <= k_max; k++) {
        std::vector<Cell> row{int64_t{k}, mu(k)};
        if (N > 0) {
            PromisePair pair = PromisePair::for_iterations(k, N);
            row.push_back(pair.t_small);
            row.push_back(pair.t_big);
        }
        t.add(std::move(row));
    }
    return t;
}

Table counting_table(uint64_t t, uint64_t N, uint64_t P) {
    Table table{"counting", {"f", "probability", "estimate"}, {}};
    std::vector<double> probs = counting_distribution(t, N, P);
    for (uint64_t f = 0; f < P; f++) {
        table.add({f, probs[f], estimate_weight(f, N, P)});
    }
    return table;
}

Table plan_table(const CountingPlan &plan) {
    Table t{"plan", {"angle", "w", "outcome", "P", "oracle_calls"}, {}};
    for (const CountingHypothesis &h : plan.hypotheses) {
        t.add({std::to_string(h.angle.num) + "/" + std::to_string(h.angle.den), h.w, h.k, plan.P,
               plan.total_oracle_calls});
    }
    return t;
}

Table cost_table(const std::vector<int> &ks) {
    Table t{"cost", {"k", "weight_decision_calls", "counting_calls", "ratio", "phase_only_calls"}, {}};
    for (int k : ks) {
        CostComparison c = cost_comparison(k);
        t.add({int64_t{k}, c.weight_decision_calls, c.counting_calls, c.ratio, c.weight_decision_calls - 1});
    }
    return t;
}

}  // namespace gwd
