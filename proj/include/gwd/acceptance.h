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

#ifndef GWD_ACCEPTANCE_H
#define GWD_ACCEPTANCE_H

#include <string>
#include <vector>

namespace gwd {

struct CriterionResult {
    int id;
    std::string title;
    bool passed;
    std::string detail;
    double seconds;
};

constexpr int NUM_CRITERIA = 9;

/// Runs one end-to-end criterion (1..NUM_CRITERIA). Throws std::out_of_range
/// for an unknown id. Exceptions inside a check count as failures.
CriterionResult run_criterion(int id);

/// Runs the listed criteria, or all of them when `ids` is empty.
std::vector<CriterionResult> run_acceptance(const std::vector<int> &ids = {});

/// "PASS  [3] title: detail (0.12 s)".
std::string format_result(const CriterionResult &r);

}  // namespace gwd

#endif
