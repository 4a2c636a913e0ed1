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

#ifndef GWD_MONTECARLO_H
#define GWD_MONTECARLO_H

#include <cstdint>
#include <functional>
#include <random>

namespace gwd {

/// Trials per block. Block b always draws from derive_seed(seed, b), so the
/// total never depends on how blocks are spread over threads.
constexpr uint64_t TRIAL_BLOCK = 4096;

/// Worker count from GWD_THREADS, else hardware concurrency (at least 1).
unsigned default_thread_count();

/// Runs `trial` `trials` times and counts the true results. `trial` must be
/// safe to call concurrently with distinct generators.
uint64_t count_successes(
    uint64_t trials, uint64_t seed, const std::function<bool(std::mt19937_64 &)> &trial, unsigned threads = 0);

}  // namespace gwd

#endif
