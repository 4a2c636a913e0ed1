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

#include "gwd/montecarlo.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "gwd/rng.h"

namespace gwd {

unsigned default_thread_count() {
    if (const char *env = std::getenv("GWD_THREADS")) {
        try {
            int v = std::stoi(env);
            if (v >= 1) {
                return static_cast<unsigned>(v);
            }
        } catch (const std::exception &) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

uint64_t count_successes(
    uint64_t trials, uint64_t seed, const std::function<bool(std::mt19937_64 &)> &trial, unsigned threads) {
    uint64_t blocks = (trials + TRIAL_BLOCK - 1) / TRIAL_BLOCK;
    if (threads == 0) {
        threads = default_thread_count();
    }
    threads = static_cast<unsigned>(std::min<uint64_t>(threads, std::max<uint64_t>(blocks, 1)));

    std::atomic<uint64_t> next_block{0};
    std::atomic<uint64_t> total{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        try {
            while (true) {
                uint64_t b = next_block.fetch_add(1);
                if (b >= blocks) {
                    return;
                }
                std::mt19937_64 rng(derive_seed(seed, b));
                uint64_t begin = b * TRIAL_BLOCK;
                uint64_t end = std::min(trials, begin + TRIAL_BLOCK);
                uint64_t hits = 0;
                for (uint64_t i = begin; i < end; i++) {
                    hits += trial(rng);
                }
                total += hits;
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) {
                failure = std::current_exception();
            }
            next_block = blocks;
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; i++) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return total;
}

}  // namespace gwd
