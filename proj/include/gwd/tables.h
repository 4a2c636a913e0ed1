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

#ifndef GWD_TABLES_H
#define GWD_TABLES_H

#include <cstdint>
#include <vector>

#include "gwd/counting.h"
#include "gwd/report.h"

namespace gwd {

/// Zeros of a_k (set "a") and b_k (set "b"): columns k, set, index, root.
Table roots_table(const std::vector<int> &ks);

/// Columns k, mu, and the promised weights for N when N > 0.
Table mu_table(int k_max, uint64_t N);

/// Columns f, probability, estimate.
Table counting_table(uint64_t t, uint64_t N, uint64_t P);

/// Columns angle, w, outcome, P, oracle_calls.
Table plan_table(const CountingPlan &plan);

/// Columns k, weight_decision_calls, counting_calls, ratio, phase_only_calls.
/// The last one leaves out the final classical query.
Table cost_table(const std::vector<int> &ks);

}  // namespace gwd

#endif
